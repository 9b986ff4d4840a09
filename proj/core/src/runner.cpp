#include "semitruss/runner.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

#include <nlohmann/json.hpp>

#include "semitruss/catalog.hpp"
#include "semitruss/degree_table.hpp"
#include "semitruss/errors.hpp"
#include "semitruss/monoid_context.hpp"
#include "semitruss/quotient.hpp"
#include "semitruss/solution_io.hpp"

namespace semitruss {

using ordered_json = nlohmann::ordered_json;

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::check: return "check";
    case Command::derive: return "derive";
    case Command::monoid: return "monoid";
    case Command::congruence: return "congruence";
    case Command::quotient: return "quotient";
    case Command::search: return "search";
    case Command::catalog_cmd: return "catalog";
    case Command::verify_all: return "verify-all";
  }
  return "?";
}

// Worst status wins the exit code: fail beats inconclusive beats pass.
struct Agg {
  bool any_fail = false;
  bool any_inconclusive = false;

  void add(CheckStatus s) {
    any_fail |= s == CheckStatus::fail;
    any_inconclusive |= s == CheckStatus::inconclusive;
  }
  std::string status() const {
    return any_fail           ? "fail"
           : any_inconclusive ? "inconclusive"
                              : "pass";
  }
  int exit_code() const { return any_fail ? 1 : any_inconclusive ? 3 : 0; }
};

ordered_json solution_json(const Solution& s) {
  ordered_json j;
  j["n"] = s.n;
  j["sigma"] = s.sigma;
  j["gamma"] = s.gamma;
  return j;
}

ordered_json profile_json(const SolutionProfile& p) {
  ordered_json j;
  j["is_ybe"] = p.is_ybe;
  j["left_nondegenerate"] = p.left_nondegenerate;
  j["right_nondegenerate"] = p.right_nondegenerate;
  j["bijective"] = p.bijective;
  j["involutive"] = p.involutive;
  j["irretractable"] = p.irretractable;
  return j;
}

ordered_json check_entry(Agg& agg, const std::string& name, CheckStatus st,
                         const std::string& witness = "",
                         const std::string& note = "") {
  agg.add(st);
  ordered_json j;
  j["name"] = name;
  j["status"] = status_name(st);
  if (!witness.empty()) j["witness"] = witness;
  if (!note.empty()) j["note"] = note;
  return j;
}

ordered_json skipped_entry(const std::string& name, const std::string& reason) {
  ordered_json j;
  j["name"] = name;
  j["status"] = "skipped";
  j["reason"] = reason;
  return j;
}

std::string suite_status(const ordered_json& checks) {
  bool fail = false, inconclusive = false, ran = false;
  for (const auto& c : checks) {
    std::string st = c.at("status");
    fail |= st == "fail";
    inconclusive |= st == "inconclusive";
    ran |= st != "skipped";
  }
  return fail           ? "fail"
         : inconclusive ? "inconclusive"
         : ran          ? "pass"
                        : "skipped";
}

struct NamedSolution {
  std::string name;
  Solution solution;
};

std::vector<NamedSolution> resolve_inputs(const RunConfig& config) {
  std::vector<NamedSolution> out;
  const std::string& in = config.input;
  if (in.rfind("catalog:", 0) == 0) {
    std::string name = in.substr(8);
    if (name == "all") {
      for (const auto& e : catalog()) out.push_back({e.name, e.solution});
    } else if (const CatalogEntry* e = catalog_find(name)) {
      out.push_back({e->name, e->solution});
    } else {
      throw Error("unknown catalog entry: " + name);
    }
    return out;
  }
  if (in.empty()) throw Error("no input given");
  out.push_back({in, parse_solution_file(in).solution});
  return out;
}

void require_pipeline_input(const Solution& s) {
  if (!check_ybe(s).ok)
    throw NotASolution("input tables do not satisfy the braid relation");
  if (!is_left_nondegenerate(s))
    throw NotLeftNondegenerate("input must have permutation sigma rows");
}

// ---------------------------------------------------------------- commands

ordered_json run_check(const NamedSolution& ns, Agg& agg) {
  ordered_json r;
  r["name"] = ns.name;
  r["solution"] = solution_json(ns.solution);
  YbeCheck y = check_ybe(ns.solution);
  ordered_json yb;
  yb["ok"] = y.ok;
  ordered_json viol = ordered_json::array();
  for (const auto& t : y.violations) viol.push_back({t[0], t[1], t[2]});
  yb["violations"] = viol;
  r["ybe"] = yb;
  if (y.ok) {
    r["profile"] = profile_json(profile(ns.solution));
    r["status"] = "pass";
  } else {
    r["status"] = "fail";
    agg.add(CheckStatus::fail);
  }
  return r;
}

ordered_json run_derive(const NamedSolution& ns, const RunConfig& config,
                        Agg& agg, bool lone) {
  (void)agg;
  require_pipeline_input(ns.solution);
  Solution d = derived_left_solution(ns.solution);
  ordered_json r;
  r["name"] = ns.name;
  r["solution"] = solution_json(ns.solution);
  r["profile"] = profile_json(profile(ns.solution));
  r["derived"] = solution_json(d);
  r["derived_profile"] = profile_json(profile(d));
  r["status"] = "pass";
  if (!config.emit_solution_path.empty()) {
    if (!lone)
      throw Error("--emit-solution needs a single input solution");
    std::ofstream f(config.emit_solution_path);
    if (!f) throw Error("cannot write " + config.emit_solution_path);
    f << solution_to_json(d);
    r["emitted"] = config.emit_solution_path;
  }
  return r;
}

ordered_json run_monoid(const NamedSolution& ns, const RunConfig& config,
                        Agg& agg) {
  require_pipeline_input(ns.solution);
  DegreeTable add_tab = build_degree_table(ns.solution, View::additive,
                                           config.degree, config.budget);
  DegreeTable mul_tab = build_degree_table(ns.solution, View::multiplicative,
                                           config.degree, config.budget);
  ordered_json r;
  r["name"] = ns.name;
  r["solution"] = solution_json(ns.solution);
  r["profile"] = profile_json(profile(ns.solution));
  r["degree"] = config.degree;
  std::vector<int> ac, mc;
  for (int d = 0; d <= config.degree; ++d) {
    ac.push_back(add_tab.class_count(d));
    mc.push_back(mul_tab.class_count(d));
  }
  r["additive_class_counts"] = ac;
  r["multiplicative_class_counts"] = mc;
  bool match = ac == mc;
  r["counts_match"] = match;
  r["status"] = match ? "pass" : "fail";
  if (!match) agg.add(CheckStatus::fail);
  return r;
}

ordered_json rule_counts_json(const RuleCounts& c) {
  ordered_json j;
  j["cancel"] = c.cancel;
  j["translate_left"] = c.translate_left;
  j["translate_right"] = c.translate_right;
  j["lambda_circ"] = c.lambda_circ;
  return j;
}

ordered_json run_congruence(const NamedSolution& ns, const RunConfig& config,
                            Agg& agg) {
  require_pipeline_input(ns.solution);
  ordered_json r;
  r["name"] = ns.name;
  r["solution"] = solution_json(ns.solution);
  r["profile"] = profile_json(profile(ns.solution));
  r["degree"] = config.degree;
  int top_slack = config.slacks.back();
  MonoidContextPtr ctx =
      make_context(ns.solution, config.degree + top_slack, config.budget);

  ordered_json kinds = ordered_json::array();
  std::vector<Congruence> at_top;
  for (CongruenceKind k : config.kinds) {
    CongruenceReport rep = stabilization_report(ns.solution, k, config.degree,
                                                config.slacks, config.budget);
    ordered_json kj;
    kj["kind"] = kind_name(k);
    kj["monoid_class_counts"] = rep.monoid_class_counts;
    ordered_json entries = ordered_json::array();
    for (const auto& e : rep.entries) {
      ordered_json ej;
      ej["slack"] = e.slack;
      ej["stabilized"] = e.stabilized;
      ej["block_counts"] = e.block_counts;
      ej["rule_unions"] = rule_counts_json(e.rule_unions);
      entries.push_back(ej);
    }
    kj["entries"] = entries;
    kj["stable_at_slack"] = rep.stable_at_slack;
    bool conclusive = rep.stable_at_slack >= 0 ||
                      (!rep.entries.empty() && rep.entries.back().stabilized);
    kj["conclusive"] = conclusive;
    kj["status"] = conclusive ? "pass" : "inconclusive";
    if (!conclusive) agg.add(CheckStatus::inconclusive);
    kinds.push_back(kj);
    at_top.push_back(
        compute_congruence_with(ctx, k, config.degree, top_slack));
  }
  r["kinds"] = kinds;

  ordered_json comparisons = ordered_json::array();
  for (size_t i = 0; i < config.kinds.size(); ++i) {
    for (size_t j = i + 1; j < config.kinds.size(); ++j) {
      CompareResult cmp = compare_congruences(at_top[i], at_top[j]);
      std::string pair =
          kind_name(config.kinds[i]) + "=" + kind_name(config.kinds[j]);
      ordered_json cj;
      cj["pair"] = pair;
      cj["overall"] = verdict_name(cmp.overall);
      cj["conclusive"] = !cmp.inconclusive;
      std::vector<std::string> per_degree;
      for (DegreeVerdict v : cmp.per_degree)
        per_degree.push_back(pair + ": " + verdict_name(v));
      cj["per_degree"] = per_degree;
      if (cmp.inconclusive) agg.add(CheckStatus::inconclusive);
      comparisons.push_back(cj);
    }
  }
  r["comparisons"] = comparisons;
  r["status"] = agg.status();
  return r;
}

ordered_json induced_json(const InducedSolutionResult& ind) {
  ordered_json j;
  j["generator_count"] = ind.generator_count;
  if (ind.solution.n > 0) j["solution"] = solution_json(ind.solution);
  j["ybe_ok"] = ind.ybe_ok;
  j["left_nondegenerate"] = ind.left_nondegenerate;
  j["equals_original"] = ind.equals_original;
  j["inconclusive"] = ind.inconclusive;
  return j;
}

ordered_json run_quotient(const NamedSolution& ns, const RunConfig& config,
                          Agg& agg, bool lone) {
  require_pipeline_input(ns.solution);
  ordered_json r;
  r["name"] = ns.name;
  r["solution"] = solution_json(ns.solution);
  r["profile"] = profile_json(profile(ns.solution));
  r["degree"] = config.degree;
  int slack = config.slacks.back();
  r["slack"] = slack;
  Congruence mu = compute_congruence(ns.solution, CongruenceKind::mu,
                                     config.degree, slack, config.budget);
  r["mu_stabilized"] = mu.stabilized;
  std::vector<int> bc;
  for (int d = 0; d <= config.degree; ++d) bc.push_back(mu.block_count(d));
  r["block_counts"] = bc;

  ordered_json checks = ordered_json::array();
  try {
    QuotientMonoid q = build_quotient(mu);
    SemitrussCheck st = verify_semitruss(q, config.degree);
    checks.push_back(check_entry(
        agg, "semi-truss law and normality", st.status, st.witness,
        "triples=" + std::to_string(st.triples_checked) +
            " normality_pairs=" + std::to_string(st.normality_pairs_checked)));
    int braid_degree = config.degree / 3;
    int inj_degree = std::min(2, config.degree);
    if (braid_degree >= 1) {
      BarRCheck brc = verify_bar_r_ybe(q, braid_degree, inj_degree);
      checks.push_back(check_entry(
          agg, "bar_r braid relation and first-component injectivity",
          brc.status, brc.witness,
          "triples=" + std::to_string(brc.triples_checked)));
    } else {
      checks.push_back(skipped_entry(
          "bar_r braid relation and first-component injectivity",
          "degree budget below 3"));
    }
    InducedSolutionResult ind = induced_generator_solution(q, ns.solution);
    CheckStatus ind_st = ind.ybe_ok && ind.left_nondegenerate
                             ? CheckStatus::pass
                             : (ind.inconclusive ? CheckStatus::inconclusive
                                                 : CheckStatus::fail);
    checks.push_back(check_entry(
        agg, "induced degree-1 solution is a left non-degenerate solution",
        ind_st));
    r["induced"] = induced_json(ind);
    if (!config.emit_solution_path.empty()) {
      if (!lone)
        throw Error("--emit-solution needs a single input solution");
      if (ind.solution.n > 0) {
        std::ofstream f(config.emit_solution_path);
        if (!f) throw Error("cannot write " + config.emit_solution_path);
        f << solution_to_json(ind.solution);
        r["emitted"] = config.emit_solution_path;
      } else {
        r["emit_skipped"] = "induced solution unavailable within budget";
      }
    }
  } catch (const WellDefinednessFailure& e) {
    checks.push_back(check_entry(agg, "quotient compositions well-defined",
                                 mu.stabilized ? CheckStatus::fail
                                               : CheckStatus::inconclusive,
                                 e.what()));
  }
  r["checks"] = checks;
  r["status"] = agg.status();
  return r;
}

ordered_json run_search(const RunConfig& config, Agg& agg) {
  (void)agg;
  std::vector<Solution> found = enumerate_solutions(config.search_n,
                                                    config.require);
  ordered_json r;
  r["n"] = config.search_n;
  r["count"] = static_cast<int64_t>(found.size());
  constexpr size_t kCap = 200;
  r["truncated"] = found.size() > kCap;
  ordered_json sols = ordered_json::array();
  for (size_t i = 0; i < found.size() && i < kCap; ++i) {
    ordered_json sj = solution_json(found[i]);
    sj["profile"] = profile_json(profile(found[i]));
    sols.push_back(sj);
  }
  r["solutions"] = sols;
  r["status"] = "pass";
  return r;
}

ordered_json run_catalog(Agg& agg) {
  (void)agg;
  ordered_json r;
  ordered_json entries = ordered_json::array();
  for (const auto& e : catalog()) {
    ordered_json ej;
    ej["name"] = e.name;
    ej["n"] = e.solution.n;
    ej["profile"] = profile_json(profile(e.solution));
    entries.push_back(ej);
  }
  r["count"] = static_cast<int64_t>(catalog().size());
  r["entries"] = entries;
  r["status"] = "pass";
  return r;
}

// ------------------------------------------------------------- verify-all

ordered_json suite_json(const std::string& label, ordered_json checks) {
  ordered_json s;
  s["suite"] = label;
  s["status"] = suite_status(checks);
  s["checks"] = std::move(checks);
  return s;
}

ordered_json skipped_suite(const std::string& label,
                           const std::string& reason) {
  ordered_json s;
  s["suite"] = label;
  s["status"] = "skipped";
  s["reason"] = reason;
  return s;
}

ordered_json constancy_entry(Agg& agg, const std::string& name,
                             const ConstancyOutcome& c) {
  return check_entry(agg, name, c.status, c.witness,
                     (c.guaranteed ? "guaranteed: " : "not guaranteed: ") +
                         c.guarantee_note);
}

// Round trip of the 1-cocycle on every representative word up to max_degree.
CheckOutcome check_pi_roundtrip(const MonoidContext& ctx) {
  CheckOutcome out;
  const Solution& s = ctx.solution();
  for (int d = 0; d <= ctx.max_degree(); ++d) {
    for (int c = 0; c < ctx.multiplicative().class_count(d); ++c) {
      std::vector<int> letters =
          ctx.multiplicative().rep_letters(ClassId{d, c});
      Word w = make_word(View::multiplicative, letters);
      Word back = pi_inverse(s, pi_forward(s, w));
      if (back.letters != letters) {
        out.status = CheckStatus::fail;
        out.witness = "pi_inverse(pi_forward([" + word_digits(letters) +
                      "])) = [" + word_digits(back.letters) + "]";
        return out;
      }
    }
    for (int c = 0; c < ctx.additive().class_count(d); ++c) {
      std::vector<int> letters = ctx.additive().rep_letters(ClassId{d, c});
      Word w = make_word(View::additive, letters);
      Word back = pi_forward(s, pi_inverse(s, w));
      if (back.letters != letters) {
        out.status = CheckStatus::fail;
        out.witness = "pi_forward(pi_inverse([" + word_digits(letters) +
                      "])) = [" + word_digits(back.letters) + "]";
        return out;
      }
    }
  }
  return out;
}

// pi(a o b) = pi(a) + lambda'_a(pi(b)) as additive classes, for all pairs of
// multiplicative representatives with total degree <= max_total.
CheckOutcome check_cocycle(const MonoidContext& ctx, int max_total) {
  CheckOutcome out;
  const Solution& s = ctx.solution();
  const DegreeTable& mt = ctx.multiplicative();
  const DegreeTable& at = ctx.additive();
  for (int d1 = 0; d1 <= max_total; ++d1) {
    for (int d2 = 0; d1 + d2 <= max_total; ++d2) {
      for (int c1 = 0; c1 < mt.class_count(d1); ++c1) {
        std::vector<int> a = mt.rep_letters(ClassId{d1, c1});
        Word wa = make_word(View::multiplicative, a);
        Word pa = pi_forward(s, wa);
        Perm la = lambda_perm(s, wa);
        for (int c2 = 0; c2 < mt.class_count(d2); ++c2) {
          std::vector<int> b = mt.rep_letters(ClassId{d2, c2});
          std::vector<int> ab = a;
          ab.insert(ab.end(), b.begin(), b.end());
          Word lhs = pi_forward(s, make_word(View::multiplicative, ab));
          Word pb = pi_forward(s, make_word(View::multiplicative, b));
          Word twisted = apply_perm(la, 1, pb);
          std::vector<int> rhs = pa.letters;
          rhs.insert(rhs.end(), twisted.letters.begin(),
                     twisted.letters.end());
          if (class_of(at, lhs) !=
              class_of(at, make_word(View::additive, rhs))) {
            out.status = CheckStatus::fail;
            out.witness = "a=[" + word_digits(a) + "] b=[" + word_digits(b) +
                          "]: pi(a o b) differs from pi(a) + lambda'_a(pi(b))";
            return out;
          }
        }
      }
    }
  }
  return out;
}

ordered_json verify_solution(const NamedSolution& ns, const RunConfig& config,
                             Agg& agg) {
  require_pipeline_input(ns.solution);
  const Solution& s = ns.solution;
  SolutionProfile p = profile(s);
  int slack = config.slacks.back();
  MonoidContextPtr ctx =
      make_context(s, config.degree + slack, config.budget);
  Congruence eta =
      compute_congruence_with(ctx, CongruenceKind::eta, config.degree, slack);
  Congruence nu =
      compute_congruence_with(ctx, CongruenceKind::nu, config.degree, slack);
  Congruence mu =
      compute_congruence_with(ctx, CongruenceKind::mu, config.degree, slack);

  ordered_json r;
  r["name"] = ns.name;
  r["solution"] = solution_json(s);
  r["profile"] = profile_json(p);
  r["degree"] = config.degree;
  r["slack"] = slack;
  ordered_json stab;
  stab["eta"] = eta.stabilized;
  stab["nu"] = nu.stabilized;
  stab["mu"] = mu.stabilized;
  r["stabilized"] = stab;
  ordered_json suites = ordered_json::array();

  {  // eta is closed under the lambda' images in both exponents.
    ordered_json checks = ordered_json::array();
    checks.push_back(constancy_entry(
        agg, "eta stable under lambda' and its inverse",
        lambda_stability(eta)));
    suites.push_back(suite_json(
        "Lemma 1.1: eta is stable under lambda' in both exponents",
        std::move(checks)));
  }

  {  // mu is a congruence of both operations with cancellative quotients.
    ordered_json checks = ordered_json::array();
    CheckOutcome add_cl = additive_congruence_closure(mu);
    checks.push_back(check_entry(agg, "mu is a +-congruence", add_cl.status,
                                 add_cl.witness));
    CheckOutcome mul_cl = multiplicative_congruence_closure(mu);
    checks.push_back(check_entry(agg, "mu is a o-congruence", mul_cl.status,
                                 mul_cl.witness));
    CheckOutcome lc_add = quotient_left_cancellative(mu, View::additive);
    checks.push_back(check_entry(agg, "(M,+)/mu left cancellative",
                                 lc_add.status, lc_add.witness));
    CheckOutcome lc_mul = quotient_left_cancellative(mu, View::multiplicative);
    checks.push_back(check_entry(agg, "(M,o)/mu left cancellative",
                                 lc_mul.status, lc_mul.witness));
    checks.push_back(constancy_entry(
        agg, "two-index lambda' compatibility", lambda_stability(mu)));
    suites.push_back(suite_json(
        "Lemma 2.3: mu is a congruence on (M,+) and (M,o) with left "
        "cancellative quotients",
        std::move(checks)));
  }

  {  // The quotient by mu is a left semi-truss inducing a solution.
    ordered_json checks = ordered_json::array();
    ordered_json induced;
    try {
      QuotientMonoid q = build_quotient(mu);
      SemitrussCheck st = verify_semitruss(q, config.degree);
      checks.push_back(check_entry(agg, "semi-truss law and normality",
                                   st.status, st.witness));
      int braid_degree = config.degree / 3;
      int inj_degree = std::min(2, config.degree);
      if (braid_degree >= 1) {
        BarRCheck brc = verify_bar_r_ybe(q, braid_degree, inj_degree);
        checks.push_back(check_entry(
            agg, "bar_r braid relation and first-component injectivity",
            brc.status, brc.witness));
      } else {
        checks.push_back(skipped_entry(
            "bar_r braid relation and first-component injectivity",
            "degree budget below 3"));
      }
      InducedSolutionResult ind = induced_generator_solution(q, s);
      CheckStatus ind_st = ind.ybe_ok && ind.left_nondegenerate
                               ? CheckStatus::pass
                               : (ind.inconclusive ? CheckStatus::inconclusive
                                                   : CheckStatus::fail);
      checks.push_back(check_entry(
          agg, "induced degree-1 solution is a left non-degenerate solution",
          ind_st));
      induced = induced_json(ind);
    } catch (const WellDefinednessFailure& e) {
      checks.push_back(check_entry(agg, "quotient compositions well-defined",
                                   mu.stabilized ? CheckStatus::fail
                                                 : CheckStatus::inconclusive,
                                   e.what()));
    }
    ordered_json suite = suite_json(
        "Corollary: M/mu is a left semi-truss and bar_r restricts to a left "
        "non-degenerate solution",
        std::move(checks));
    if (!induced.is_null()) suite["induced"] = induced;
    suites.push_back(suite);
  }

  {  // lambda' is constant on nu classes; extra closures when bijective.
    ordered_json checks = ordered_json::array();
    checks.push_back(constancy_entry(agg, "lambda' constant on nu classes",
                                     lambda_constancy(nu)));
    if (p.bijective) {
      checks.push_back(constancy_entry(
          agg, "nu closed under lambda' and its inverse",
          lambda_stability(nu)));
      CheckOutcome add_cl = additive_congruence_closure(nu);
      checks.push_back(check_entry(agg, "nu is a +-congruence within budget",
                                   add_cl.status, add_cl.witness));
    } else {
      checks.push_back(skipped_entry(
          "nu closed under lambda' and its inverse", "not bijective"));
      checks.push_back(
          skipped_entry("nu is a +-congruence within budget", "not bijective"));
    }
    suites.push_back(suite_json(
        "Lemma 3.1: lambda' is constant on nu classes", std::move(checks)));
  }

  {  // pi is a bijective 1-cocycle and identity (gamma) holds.
    ordered_json checks = ordered_json::array();
    CheckOutcome rt = check_pi_roundtrip(*ctx);
    checks.push_back(check_entry(agg, "pi_forward and pi_inverse invert",
                                 rt.status, rt.witness));
    CheckOutcome cc = check_cocycle(*ctx, config.degree);
    checks.push_back(check_entry(
        agg, "cocycle identity pi(a o b) = pi(a) + lambda'_a(pi(b))",
        cc.status, cc.witness));
    int max_word = std::min(3, ctx->max_degree());
    int max_a = std::min(2, ctx->max_degree() - max_word);
    GammaIdentityCheck gi =
        check_identity_gamma(s, ctx->additive(), max_word, max_a);
    std::string wit;
    if (!gi.ok && !gi.witnesses.empty()) {
      wit = "x=" + std::to_string(gi.witnesses[0].x) + " word=[" +
            word_digits(gi.witnesses[0].word) + "] a=[" +
            word_digits(gi.witnesses[0].a_rep) + "]";
    }
    checks.push_back(check_entry(
        agg, "identity (gamma) on words",
        gi.ok ? CheckStatus::pass : CheckStatus::fail, wit,
        "words<=" + std::to_string(max_word) +
            " a_degree<=" + std::to_string(max_a)));
    suites.push_back(
        suite_json("Lemma 3.2: pi is a 1-cocycle and identity (gamma) holds",
                   std::move(checks)));
  }

  {  // eta = nu with constant lambda' for bijective non-degenerate solutions.
    std::string label =
        "Proposition 3.3: eta = nu with lambda' constant on eta classes";
    if (!p.bijective) {
      suites.push_back(skipped_suite(label, "skipped: not bijective"));
    } else if (!p.right_nondegenerate) {
      suites.push_back(
          skipped_suite(label, "skipped: not right non-degenerate"));
    } else {
      ordered_json checks = ordered_json::array();
      CompareResult cmp = compare_congruences(eta, nu);
      CheckStatus cmp_st =
          cmp.overall == DegreeVerdict::equal
              ? (cmp.inconclusive ? CheckStatus::inconclusive
                                  : CheckStatus::pass)
              : (cmp.inconclusive ? CheckStatus::inconclusive
                                  : CheckStatus::fail);
      checks.push_back(check_entry(agg, "eta equals nu at every degree",
                                   cmp_st,
                                   cmp.overall == DegreeVerdict::equal
                                       ? ""
                                       : verdict_name(cmp.overall)));
      checks.push_back(constancy_entry(
          agg, "lambda' constant on eta classes", lambda_constancy(eta)));
      checks.push_back(constancy_entry(
          agg, "nu stable under lambda' and its inverse",
          lambda_stability(nu)));
      suites.push_back(suite_json(label, std::move(checks)));
    }
  }

  r["suites"] = suites;
  r["status"] = agg.status();
  return r;
}

// ------------------------------------------------------------- rendering

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_scalar_array(const ordered_json& a) {
  for (const auto& e : a)
    if (e.is_object() || e.is_array()) return false;
  return true;
}

void render_text(const ordered_json& j, int indent, std::string& out) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const ordered_json& v = it.value();
      if (v.is_object() || (v.is_array() && !is_scalar_array(v))) {
        out += pad + it.key() + ":\n";
        render_text(v, indent + 2, out);
      } else if (v.is_array()) {
        out += pad + it.key() + ": [";
        bool first = true;
        for (const auto& e : v) {
          if (!first) out += ", ";
          first = false;
          out += scalar_text(e);
        }
        out += "]\n";
      } else {
        out += pad + it.key() + ": " + scalar_text(v) + "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_object() || e.is_array()) {
        std::string sub;
        render_text(e, indent + 2, sub);
        if (sub.size() > static_cast<size_t>(indent + 2))
          sub = pad + "- " + sub.substr(indent + 2);
        out += sub;
      } else {
        out += pad + "- " + scalar_text(e) + "\n";
      }
    }
  } else {
    out += pad + scalar_text(j) + "\n";
  }
}

std::string render(const ordered_json& report, OutputFormat format) {
  if (format == OutputFormat::json) return report.dump(2) + "\n";
  std::string out;
  render_text(report, 0, out);
  return out;
}

ordered_json config_json(const RunConfig& config) {
  ordered_json j;
  j["input"] = config.input;
  j["degree"] = config.degree;
  j["slacks"] = config.slacks;
  std::vector<std::string> kinds;
  for (CongruenceKind k : config.kinds) kinds.push_back(kind_name(k));
  j["kinds"] = kinds;
  j["budget"] = config.budget;
  return j;
}

}  // namespace

RunResult run(const RunConfig& config) {
  ordered_json report;
  report["schema_version"] = kSchemaVersion;
  ordered_json tool;
  tool["name"] = kToolName;
  tool["version"] = kToolVersion;
  report["tool"] = tool;
  report["command"] = command_name(config.command);
  report["config"] = config_json(config);

  Agg agg;
  int exit_code = 0;
  std::vector<int64_t> per_result_us;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (config.degree < 0) throw Error("degree must be >= 0");
    if (config.budget <= 0) throw Error("budget must be positive");
    if (config.slacks.empty() ||
        !std::is_sorted(config.slacks.begin(), config.slacks.end()) ||
        config.slacks.front() < 0)
      throw Error("slack list must be ascending and non-negative");
    if (config.kinds.empty()) throw Error("kinds list must be non-empty");

    ordered_json results = ordered_json::array();
    auto timed = [&](auto&& fn) {
      auto s0 = std::chrono::steady_clock::now();
      results.push_back(fn());
      per_result_us.push_back(
          std::chrono::duration_cast<std::chrono::microseconds>(
              std::chrono::steady_clock::now() - s0)
              .count());
    };
    if (config.command == Command::search) {
      timed([&] { return run_search(config, agg); });
    } else if (config.command == Command::catalog_cmd) {
      timed([&] { return run_catalog(agg); });
    } else {
      RunConfig cfg = config;
      if (cfg.command == Command::verify_all && cfg.input.empty())
        cfg.input = "catalog:all";
      std::vector<NamedSolution> inputs = resolve_inputs(cfg);
      bool lone = inputs.size() == 1;
      for (const NamedSolution& ns : inputs) {
        switch (cfg.command) {
          case Command::check:
            timed([&] { return run_check(ns, agg); });
            break;
          case Command::derive:
            timed([&] { return run_derive(ns, cfg, agg, lone); });
            break;
          case Command::monoid:
            timed([&] { return run_monoid(ns, cfg, agg); });
            break;
          case Command::congruence:
            timed([&] { return run_congruence(ns, cfg, agg); });
            break;
          case Command::quotient:
            timed([&] { return run_quotient(ns, cfg, agg, lone); });
            break;
          case Command::verify_all:
            timed([&] { return verify_solution(ns, cfg, agg); });
            break;
          default:
            throw Error("unhandled command");
        }
      }
    }
    report["results"] = results;
    ordered_json summary;
    summary["status"] = agg.status();
    summary["exit_code"] = agg.exit_code();
    report["summary"] = summary;
    exit_code = agg.exit_code();
  } catch (const Error& e) {
    ordered_json err;
    err["type"] = [&]() -> std::string {
      if (dynamic_cast<const ShapeMismatch*>(&e)) return "ShapeMismatch";
      if (dynamic_cast<const OutOfRangeEntry*>(&e)) return "OutOfRangeEntry";
      if (dynamic_cast<const NotLeftNondegenerate*>(&e))
        return "NotLeftNondegenerate";
      if (dynamic_cast<const NotASolution*>(&e)) return "NotASolution";
      if (dynamic_cast<const SearchSpaceTooLarge*>(&e))
        return "SearchSpaceTooLarge";
      if (dynamic_cast<const DegreeTooLarge*>(&e)) return "DegreeTooLarge";
      if (dynamic_cast<const DegreeOutOfRange*>(&e)) return "DegreeOutOfRange";
      if (dynamic_cast<const ViewMismatch*>(&e)) return "ViewMismatch";
      if (dynamic_cast<const BudgetMismatch*>(&e)) return "BudgetMismatch";
      if (dynamic_cast<const WellDefinednessFailure*>(&e))
        return "WellDefinednessFailure";
      if (dynamic_cast<const NoWitness*>(&e)) return "NoWitness";
      if (dynamic_cast<const MultipleWitnesses*>(&e))
        return "MultipleWitnesses";
      return "Error";
    }();
    err["message"] = e.what();
    report["error"] = err;
    ordered_json summary;
    summary["status"] = "error";
    summary["exit_code"] = 2;
    report["summary"] = summary;
    exit_code = 2;
  }

  if (config.timings) {
    ordered_json t;
    t["total_us"] = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    t["per_result_us"] = per_result_us;
    report["timings"] = t;
  }

  std::string rendered = render(report, config.format);
  if (!config.output_path.empty()) {
    std::ofstream f(config.output_path);
    if (f) {
      f << rendered;
    } else {
      rendered += "\n(could not write " + config.output_path + ")\n";
      if (exit_code == 0) exit_code = 2;
    }
  }
  return RunResult{exit_code, rendered};
}

namespace {

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : csv) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

SolutionFilter parse_filter(const std::string& csv) {
  SolutionFilter f;
  for (std::string tok : split_csv(csv)) {
    bool value = true;
    if (!tok.empty() && tok[0] == '!') {
      value = false;
      tok = tok.substr(1);
    }
    if (tok == "left_nondegenerate") f.left_nondegenerate = value;
    else if (tok == "right_nondegenerate") f.right_nondegenerate = value;
    else if (tok == "bijective") f.bijective = value;
    else if (tok == "involutive") f.involutive = value;
    else if (tok == "irretractable") f.irretractable = value;
    else throw Error("unknown profile requirement: " + tok);
  }
  return f;
}

std::vector<CongruenceKind> parse_kinds(const std::string& csv) {
  std::vector<CongruenceKind> out;
  for (const std::string& tok : split_csv(csv)) {
    if (tok == "eta") out.push_back(CongruenceKind::eta);
    else if (tok == "nu") out.push_back(CongruenceKind::nu);
    else if (tok == "mu") out.push_back(CongruenceKind::mu);
    else throw Error("unknown congruence kind: " + tok);
  }
  if (out.empty()) throw Error("kinds list must be non-empty");
  return out;
}

}  // namespace semitruss
