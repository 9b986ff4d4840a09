#include "semitruss/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "semitruss/errors.hpp"

namespace semitruss {

std::string kind_name(CongruenceKind k) {
  switch (k) {
    case CongruenceKind::eta: return "eta";
    case CongruenceKind::nu: return "nu";
    case CongruenceKind::mu: return "mu";
  }
  return "?";
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string verdict_name(DegreeVerdict v) {
  switch (v) {
    case DegreeVerdict::equal: return "equal";
    case DegreeVerdict::left_finer: return "left_finer";
    case DegreeVerdict::right_finer: return "right_finer";
    case DegreeVerdict::incomparable: return "incomparable";
  }
  return "?";
}

namespace {

struct EngineResult {
  std::vector<std::vector<int>> parent;  // per degree union-find
  RuleCounts counts;
  std::vector<MergeRecord> trace;
};

class Engine {
 public:
  Engine(const MonoidContext& ctx, CongruenceKind kind, int dtot)
      : ctx_(ctx), kind_(kind), dtot_(dtot) {
    parent_.resize(dtot + 1);
    for (int d = 0; d <= dtot; ++d) {
      parent_[d].resize(ctx.class_count(d));
      for (int c = 0; c < ctx.class_count(d); ++c) parent_[d][c] = c;
    }
  }

  EngineResult run() {
    bool changed = true;
    while (changed) {
      changed = false;
      changed |= cancel_pass();
      changed |= translate_pass();
      if (kind_ == CongruenceKind::mu) changed |= lambda_pass();
    }
    return EngineResult{std::move(parent_), counts_, std::move(trace_)};
  }

 private:
  const MonoidContext& ctx_;
  CongruenceKind kind_;
  int dtot_;
  std::vector<std::vector<int>> parent_;
  RuleCounts counts_;
  std::vector<MergeRecord> trace_;

  int find(int d, int c) {
    auto& p = parent_[d];
    while (p[c] != c) {
      p[c] = p[p[c]];
      c = p[c];
    }
    return c;
  }

  bool unite(int d, int a, int b, MergeRecord rec) {
    int ra = find(d, a), rb = find(d, b);
    if (ra == rb) return false;
    if (ra > rb) std::swap(ra, rb);
    parent_[d][rb] = ra;  // root stays the least class
    rec.degree = d;
    rec.a = a;
    rec.b = b;
    switch (rec.rule) {
      case Rule::cancel: ++counts_.cancel; break;
      case Rule::translate_left: ++counts_.translate_left; break;
      case Rule::translate_right: ++counts_.translate_right; break;
      case Rule::lambda_circ: ++counts_.lambda_circ; break;
    }
    trace_.push_back(rec);
    return true;
  }

  int op(int d1, int c1, int d2, int c2) const {
    // eta and mu cancel/translate additively; nu multiplicatively.
    return kind_ == CongruenceKind::nu ? ctx_.mul_class(d1, c1, d2, c2)
                                       : ctx_.add_class(d1, c1, d2, c2);
  }

  // [c.a] ~ [c.b] forces a ~ b. Monoid-equal products are covered by
  // reflexivity of ~.
  bool cancel_pass() {
    bool changed = false;
    std::unordered_map<int, std::pair<int, int>> bucket;  // root -> (a, c.a)
    for (int dc = 1; dc <= dtot_; ++dc) {
      int cc = ctx_.class_count(dc);
      for (int c = 0; c < cc; ++c) {
        for (int da = 1; da + dc <= dtot_; ++da) {
          bucket.clear();
          int ca = ctx_.class_count(da);
          for (int a = 0; a < ca; ++a) {
            int prod = op(dc, c, da, a);
            int root = find(da + dc, prod);
            auto [it, fresh] = bucket.emplace(root, std::make_pair(a, prod));
            if (!fresh) {
              MergeRecord rec;
              rec.rule = Rule::cancel;
              rec.c_degree = dc;
              rec.c = c;
              rec.premise_degree = da + dc;
              rec.premise_a = it->second.second;
              rec.premise_b = prod;
              changed |= unite(da, it->second.first, a, rec);
            }
          }
        }
      }
    }
    return changed;
  }

  // a ~ b gives c.a ~ c.b and a.c ~ b.c.
  bool translate_pass() {
    bool changed = false;
    for (int da = 1; da < dtot_; ++da) {
      int ca = ctx_.class_count(da);
      for (int m = 0; m < ca; ++m) {
        int r = find(da, m);
        if (r == m) continue;
        for (int dc = 1; dc + da <= dtot_; ++dc) {
          int cc = ctx_.class_count(dc);
          for (int c = 0; c < cc; ++c) {
            MergeRecord rec;
            rec.rule = Rule::translate_left;
            rec.c_degree = dc;
            rec.c = c;
            rec.source_degree = da;
            rec.source_a = r;
            rec.source_b = m;
            changed |= unite(da + dc, op(dc, c, da, r), op(dc, c, da, m), rec);
            rec.rule = Rule::translate_right;
            changed |= unite(da + dc, op(da, r, dc, c), op(da, m, dc, c), rec);
          }
        }
      }
    }
    return changed;
  }

  // a ~ b gives p(a o c) ~ p(b o c) for every p in the sigma group and every
  // class c, identity included.
  bool lambda_pass() {
    bool changed = false;
    int gn = static_cast<int>(ctx_.group().size());
    for (int da = 1; da <= dtot_; ++da) {
      int ca = ctx_.class_count(da);
      for (int m = 0; m < ca; ++m) {
        int r = find(da, m);
        if (r == m) continue;
        for (int dc = 0; dc + da <= dtot_; ++dc) {
          int cc = ctx_.class_count(dc);
          for (int c = 0; c < cc; ++c) {
            int u = ctx_.mul_class(da, r, dc, c);
            int v = ctx_.mul_class(da, m, dc, c);
            for (int g = 0; g < gn; ++g) {
              MergeRecord rec;
              rec.rule = Rule::lambda_circ;
              rec.c_degree = dc;
              rec.c = c;
              rec.g = g;
              rec.source_degree = da;
              rec.source_a = r;
              rec.source_b = m;
              changed |= unite(da + dc, ctx_.act_class(g, da + dc, u),
                               ctx_.act_class(g, da + dc, v), rec);
            }
          }
        }
      }
    }
    return changed;
  }
};

// Normalized per-degree partition labels restricted to degree <= D.
std::vector<std::vector<int>> partition_labels(EngineResult& res, int D) {
  std::vector<std::vector<int>> labels(D + 1);
  for (int d = 0; d <= D; ++d) {
    auto& p = res.parent[d];
    std::vector<int> canon(p.size(), -1);
    labels[d].resize(p.size());
    int next = 0;
    for (size_t c = 0; c < p.size(); ++c) {
      int r = static_cast<int>(c);
      while (p[r] != r) r = p[r];
      if (canon[r] < 0) canon[r] = next++;
      labels[d][c] = canon[r];
    }
  }
  return labels;
}

}  // namespace

bool Congruence::related(int degree, int class_a, int class_b) const {
  return block_of[degree][class_a] == block_of[degree][class_b];
}

std::vector<MergeRecord> Congruence::explain(int degree, int class_a,
                                             int class_b) const {
  if (class_a == class_b) return {};
  // Edges of the proof forest at this degree.
  std::unordered_map<int, std::vector<int>> adj;  // class -> record indices
  for (int i = 0; i < static_cast<int>(trace.size()); ++i) {
    if (trace[i].degree != degree) continue;
    adj[trace[i].a].push_back(i);
    adj[trace[i].b].push_back(i);
  }
  std::unordered_map<int, int> via;  // class -> record index used to reach it
  std::unordered_map<int, int> from;
  std::deque<int> queue{class_a};
  via[class_a] = -1;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    if (cur == class_b) break;
    auto it = adj.find(cur);
    if (it == adj.end()) continue;
    for (int ri : it->second) {
      int other = trace[ri].a == cur ? trace[ri].b : trace[ri].a;
      if (via.count(other)) continue;
      via[other] = ri;
      from[other] = cur;
      queue.push_back(other);
    }
  }
  std::vector<MergeRecord> path;
  if (!via.count(class_b)) return path;
  for (int cur = class_b; via[cur] >= 0; cur = from[cur])
    path.push_back(trace[via[cur]]);
  std::reverse(path.begin(), path.end());
  return path;
}

Congruence compute_congruence_with(const MonoidContextPtr& ctx,
                                   CongruenceKind kind, int D, int slack) {
  if (!ctx) throw Error("null context");
  if (D < 0 || slack < 0) throw DegreeOutOfRange("degree and slack must be >= 0");
  if (ctx->max_degree() < D + slack)
    throw BudgetMismatch("context covers degree " +
                         std::to_string(ctx->max_degree()) + ", need " +
                         std::to_string(D + slack));
  Engine engine(*ctx, kind, D + slack);
  EngineResult res = engine.run();
  auto labels = partition_labels(res, D);

  Congruence out;
  out.kind = kind;
  out.report_degree = D;
  out.slack = slack;
  out.ctx = ctx;
  out.rule_unions = res.counts;
  out.trace = std::move(res.trace);
  out.block_of = labels;
  out.blocks.resize(D + 1);
  for (int d = 0; d <= D; ++d) {
    int nblocks = labels[d].empty()
                      ? 0
                      : *std::max_element(labels[d].begin(), labels[d].end()) +
                            1;
    out.blocks[d].resize(nblocks);
    for (int c = 0; c < static_cast<int>(labels[d].size()); ++c)
      out.blocks[d][labels[d][c]].push_back(c);
  }
  if (slack >= 1) {
    Engine prev(*ctx, kind, D + slack - 1);
    EngineResult prev_res = prev.run();
    out.stabilized = partition_labels(prev_res, D) == labels;
  } else {
    out.stabilized = false;
  }
  return out;
}

Congruence compute_congruence(const Solution& s, CongruenceKind kind, int D,
                              int slack, int64_t word_budget) {
  return compute_congruence_with(make_context(s, D + slack, word_budget), kind,
                                 D, slack);
}

namespace {

std::string class_desc(const MonoidContext& ctx, int d, int c) {
  return "[" + word_digits(ctx.rep_letters(d, c)) + "]";
}

// (degree, x, y) related pairs as (block rep, member), plus optionally the
// diagonal; rep-member pairs generate all member pairs through transitivity.
std::vector<std::array<int, 3>> related_rep_pairs(const Congruence& c) {
  std::vector<std::array<int, 3>> out;
  for (int d = 0; d <= c.report_degree; ++d)
    for (const auto& block : c.blocks[d])
      for (size_t i = 1; i < block.size(); ++i)
        out.push_back({d, block[0], block[i]});
  return out;
}

}  // namespace

CheckOutcome quotient_left_cancellative(const Congruence& c, View view) {
  bool additive = view == View::additive;
  if (c.kind == CongruenceKind::eta && !additive)
    throw ViewMismatch("eta is a congruence of the additive monoid");
  if (c.kind == CongruenceKind::nu && additive)
    throw ViewMismatch("nu is a congruence of the multiplicative monoid");
  const MonoidContext& ctx = *c.ctx;
  const int D = c.report_degree;
  CheckOutcome out;
  std::unordered_map<int, int> bucket;  // product block -> first a
  for (int dc = 1; dc <= D; ++dc) {
    for (int cc = 0; cc < ctx.class_count(dc); ++cc) {
      for (int da = 1; da + dc <= D; ++da) {
        bucket.clear();
        for (int a = 0; a < ctx.class_count(da); ++a) {
          int prod = additive ? ctx.add_class(dc, cc, da, a)
                              : ctx.mul_class(dc, cc, da, a);
          int key = c.block_of[da + dc][prod];
          auto [it, fresh] = bucket.emplace(key, a);
          if (!fresh && !c.related(da, it->second, a)) {
            out.status =
                c.stabilized ? CheckStatus::fail : CheckStatus::inconclusive;
            out.witness = "c=" + class_desc(ctx, dc, cc) +
                          " a=" + class_desc(ctx, da, it->second) +
                          " b=" + class_desc(ctx, da, a) + ": [c" +
                          (additive ? "+" : "o") + "a] ~ [c" +
                          (additive ? "+" : "o") + "b] but a !~ b";
            return out;
          }
        }
      }
    }
  }
  return out;
}

ConstancyOutcome lambda_constancy(const Congruence& c) {
  const MonoidContext& ctx = *c.ctx;
  ConstancyOutcome out;
  SolutionProfile p = profile(ctx.solution());
  if (c.kind == CongruenceKind::nu) {
    out.guaranteed = true;
    out.guarantee_note = "nu carries constant lambda";
  } else if (p.bijective && p.right_nondegenerate) {
    out.guaranteed = true;
    out.guarantee_note = "bijective and right non-degenerate";
  } else {
    out.guaranteed = false;
    out.guarantee_note = "outside paper guarantee for kind " +
                         kind_name(c.kind) + " on this solution";
  }
  for (const auto& [d, a, b] : related_rep_pairs(c)) {
    if (ctx.class_lambda(d, a) != ctx.class_lambda(d, b)) {
      out.status = CheckStatus::fail;
      out.witness = class_desc(ctx, d, a) + " ~ " + class_desc(ctx, d, b) +
                    " but lambda' differs";
      return out;
    }
  }
  return out;
}

ConstancyOutcome lambda_stability(const Congruence& c) {
  const MonoidContext& ctx = *c.ctx;
  ConstancyOutcome out;
  SolutionProfile p = profile(ctx.solution());
  auto pairs = related_rep_pairs(c);
  if (c.kind == CongruenceKind::mu) {
    out.guaranteed = true;
    out.guarantee_note = "two-index compatibility holds for mu";
    // Quantify (a,b) and (c,d) over rep-member pairs plus diagonals;
    // transitivity of mu extends this to all pairs.
    std::vector<std::array<int, 3>> with_diag = pairs;
    for (int d = 0; d <= c.report_degree; ++d)
      for (int x = 0; x < ctx.class_count(d); ++x)
        with_diag.push_back({d, x, x});
    for (const auto& [dcd, cc, dd] : with_diag) {
      int gc = ctx.class_lambda(dcd, cc);
      int gd = ctx.class_lambda(dcd, dd);
      int gci = ctx.group_inverse(gc);
      int gdi = ctx.group_inverse(gd);
      for (const auto& [dab, a, b] : with_diag) {
        if (cc == dd && a == b) continue;
        if (!c.related(dab, ctx.act_class(gc, dab, a),
                       ctx.act_class(gd, dab, b)) ||
            !c.related(dab, ctx.act_class(gci, dab, a),
                       ctx.act_class(gdi, dab, b))) {
          out.status =
              c.stabilized ? CheckStatus::fail : CheckStatus::inconclusive;
          out.witness = "(a,b)=(" + class_desc(ctx, dab, a) + "," +
                        class_desc(ctx, dab, b) + ") (c,d)=(" +
                        class_desc(ctx, dcd, cc) + "," +
                        class_desc(ctx, dcd, dd) +
                        "): lambda pair escapes mu";
          return out;
        }
      }
    }
    return out;
  }
  if (c.kind == CongruenceKind::eta) {
    out.guaranteed = true;
    out.guarantee_note = "eta is stable under both lambda exponents";
  } else if (p.bijective) {
    out.guaranteed = true;
    out.guarantee_note =
        p.right_nondegenerate
            ? "bijective and right non-degenerate"
            : "bijective (inverse closure)";
  } else {
    out.guaranteed = false;
    out.guarantee_note = "nu stability needs bijective r";
  }
  // The sigma permutations generate a finite group, so closure under every
  // group element is simultaneously the +1 and -1 exponent set equality.
  int gn = static_cast<int>(ctx.group().size());
  for (const auto& [d, a, b] : pairs) {
    for (int g = 0; g < gn; ++g) {
      if (!c.related(d, ctx.act_class(g, d, a), ctx.act_class(g, d, b))) {
        out.status =
            c.stabilized ? CheckStatus::fail : CheckStatus::inconclusive;
        out.witness = class_desc(ctx, d, a) + " ~ " + class_desc(ctx, d, b) +
                      " but images under permutation " + std::to_string(g) +
                      " are unrelated";
        return out;
      }
    }
  }
  return out;
}

CheckOutcome additive_congruence_closure(const Congruence& c) {
  const MonoidContext& ctx = *c.ctx;
  CheckOutcome out;
  for (const auto& [da, a, b] : related_rep_pairs(c)) {
    for (int dc = 1; dc + da <= c.report_degree; ++dc) {
      for (int cc = 0; cc < ctx.class_count(dc); ++cc) {
        bool left = c.related(da + dc, ctx.add_class(dc, cc, da, a),
                              ctx.add_class(dc, cc, da, b));
        bool right = c.related(da + dc, ctx.add_class(da, a, dc, cc),
                               ctx.add_class(da, b, dc, cc));
        if (!left || !right) {
          out.status =
              c.stabilized ? CheckStatus::fail : CheckStatus::inconclusive;
          out.witness = class_desc(ctx, da, a) + " ~ " +
                        class_desc(ctx, da, b) + " but " +
                        (left ? "right" : "left") + " translation by " +
                        class_desc(ctx, dc, cc) + " escapes";
          return out;
        }
      }
    }
  }
  return out;
}

CheckOutcome multiplicative_congruence_closure(const Congruence& c) {
  const MonoidContext& ctx = *c.ctx;
  CheckOutcome out;
  for (const auto& [da, a, b] : related_rep_pairs(c)) {
    for (int dc = 1; dc + da <= c.report_degree; ++dc) {
      for (int cc = 0; cc < ctx.class_count(dc); ++cc) {
        bool left = c.related(da + dc, ctx.mul_class(dc, cc, da, a),
                              ctx.mul_class(dc, cc, da, b));
        bool right = c.related(da + dc, ctx.mul_class(da, a, dc, cc),
                               ctx.mul_class(da, b, dc, cc));
        if (!left || !right) {
          out.status =
              c.stabilized ? CheckStatus::fail : CheckStatus::inconclusive;
          out.witness = class_desc(ctx, da, a) + " ~ " +
                        class_desc(ctx, da, b) + " but " +
                        (left ? "right" : "left") + " product with " +
                        class_desc(ctx, dc, cc) + " escapes";
          return out;
        }
      }
    }
  }
  return out;
}

CompareResult compare_congruences(const Congruence& a, const Congruence& b) {
  if (!a.ctx || !b.ctx || !(a.ctx->solution() == b.ctx->solution()))
    throw BudgetMismatch("congruences over different solutions");
  if (a.report_degree != b.report_degree)
    throw BudgetMismatch("congruences with different degree budgets");
  CompareResult out;
  out.inconclusive = !a.stabilized || !b.stabilized;
  bool all_eq = true, a_fine = true, b_fine = true;
  for (int d = 0; d <= a.report_degree; ++d) {
    auto refines = [&](const Congruence& x, const Congruence& y) {
      std::map<int, int> to;
      for (size_t c = 0; c < x.block_of[d].size(); ++c) {
        auto [it, fresh] = to.emplace(x.block_of[d][c], y.block_of[d][c]);
        if (!fresh && it->second != y.block_of[d][c]) return false;
      }
      return true;
    };
    bool ab = refines(a, b), ba = refines(b, a);
    DegreeVerdict v = ab && ba  ? DegreeVerdict::equal
                      : ab      ? DegreeVerdict::left_finer
                      : ba      ? DegreeVerdict::right_finer
                                : DegreeVerdict::incomparable;
    out.per_degree.push_back(v);
    all_eq &= v == DegreeVerdict::equal;
    a_fine &= ab;
    b_fine &= ba;
  }
  out.overall = all_eq    ? DegreeVerdict::equal
                : a_fine  ? DegreeVerdict::left_finer
                : b_fine  ? DegreeVerdict::right_finer
                          : DegreeVerdict::incomparable;
  return out;
}

CongruenceReport stabilization_report(const Solution& s, CongruenceKind kind,
                                      int D, const std::vector<int>& slacks,
                                      int64_t word_budget) {
  if (slacks.empty()) throw Error("slack list must be non-empty");
  std::vector<int> sorted = slacks;
  std::sort(sorted.begin(), sorted.end());
  MonoidContextPtr ctx = make_context(s, D + sorted.back(), word_budget);
  CongruenceReport report;
  report.kind = kind;
  report.degree = D;
  for (int d = 0; d <= D; ++d)
    report.monoid_class_counts.push_back(ctx->class_count(d));
  std::vector<std::vector<std::vector<int>>> partitions;
  for (int sl : sorted) {
    Congruence c = compute_congruence_with(ctx, kind, D, sl);
    StabilizationEntry entry;
    entry.slack = sl;
    entry.stabilized = c.stabilized;
    for (int d = 0; d <= D; ++d) entry.block_counts.push_back(c.block_count(d));
    entry.rule_unions = c.rule_unions;
    report.entries.push_back(entry);
    partitions.push_back(c.block_of);
  }
  report.stable_at_slack = -1;
  for (size_t i = 0; i + 1 < partitions.size(); ++i) {
    if (partitions[i] == partitions[i + 1]) {
      report.stable_at_slack = sorted[i];
      break;
    }
  }
  return report;
}

}  // namespace semitruss
