#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semitruss/monoid_context.hpp"

namespace semitruss {

enum class CongruenceKind { eta, nu, mu };

std::string kind_name(CongruenceKind k);

enum class CheckStatus { pass, fail, inconclusive };

std::string status_name(CheckStatus s);

struct CheckOutcome {
  CheckStatus status = CheckStatus::pass;
  std::string witness;  // empty on pass
};

// Closure rules. cancel: [c.a] ~ [c.b] forces a ~ b (seeds included: monoid-
// equal products are ~ by reflexivity). translate: a ~ b gives c.a ~ c.b and
// a.c ~ b.c. lambda_circ (mu only): a ~ b gives p(a o c) ~ p(b o c) for every
// p in the sigma-generated group and every class c, identity included.
enum class Rule : uint8_t {
  cancel,
  translate_left,
  translate_right,
  lambda_circ
};

struct RuleCounts {
  int64_t cancel = 0;
  int64_t translate_left = 0;
  int64_t translate_right = 0;
  int64_t lambda_circ = 0;
};

struct MergeRecord {
  Rule rule = Rule::cancel;
  int degree = 0;
  int a = 0, b = 0;         // classes united by this firing
  int c_degree = -1, c = -1;  // witness / translation class
  int g = -1;               // group element (lambda_circ)
  int premise_degree = -1;  // premise pair for cancel
  int premise_a = -1, premise_b = -1;
  int source_degree = -1;   // fired from related pair (translate, lambda)
  int source_a = -1, source_b = -1;
};

// Degree-graded congruence on the additive class universe, computed as the
// least fixpoint of the kind's rules with all quantifiers truncated to
// degree <= D + slack and reported restricted to degree <= D.
class Congruence {
 public:
  CongruenceKind kind = CongruenceKind::eta;
  int report_degree = 0;  // D
  int slack = 0;
  bool stabilized = false;  // result at slack equals result at slack-1
  MonoidContextPtr ctx;

  // Partition of additive classes, degrees 0..report_degree. Blocks are
  // sorted by least member; block_of[d][class] indexes blocks[d].
  std::vector<std::vector<int>> block_of;
  std::vector<std::vector<std::vector<int>>> blocks;

  RuleCounts rule_unions;
  std::vector<MergeRecord> trace;  // one record per successful union

  bool related(int degree, int class_a, int class_b) const;
  int block_count(int d) const { return static_cast<int>(blocks[d].size()); }

  // Derivation of class_a ~ class_b: the chain of merge records whose
  // endpoints connect the two classes in the proof forest. Empty when the
  // classes are equal or unrelated.
  std::vector<MergeRecord> explain(int degree, int class_a,
                                   int class_b) const;
};

// Builds (or reuses) the context at degree D + slack and runs the fixpoint.
// The stabilized flag compares against slack-1 (false when slack = 0).
// Throws NotLeftNondegenerate, DegreeTooLarge.
Congruence compute_congruence(const Solution& s, CongruenceKind kind, int D,
                              int slack, int64_t word_budget = 1000000);

// Same, sharing a prebuilt context (must cover degree D + slack).
Congruence compute_congruence_with(const MonoidContextPtr& ctx,
                                   CongruenceKind kind, int D, int slack);

// For all classes within degree budget: [c.a] ~ [c.b] implies a ~ b, in the
// given view (+ for eta, o for nu, both legal for mu; otherwise
// ViewMismatch). A witness with stabilized=false downgrades to inconclusive.
CheckOutcome quotient_left_cancellative(const Congruence& c, View view);

struct ConstancyOutcome {
  CheckStatus status = CheckStatus::pass;
  std::string witness;
  bool guaranteed = false;  // whether the hypotheses back this check
  std::string guarantee_note;
};

// lambda' agrees on every related pair.
ConstancyOutcome lambda_constancy(const Congruence& c);

// Kind-dependent stability:
//   eta, nu: (a,b) related implies (p a, p b) related for every p in the
//     sigma-generated group G. Since G is a group this single quantified form
//     is the two-sided set equality for both signs of the exponent.
//   mu: two-index form; for all related (a,b) and related (c,d),
//     (lambda'_c^eps(a), lambda'_d^eps(b)) related for eps = +-1.
ConstancyOutcome lambda_stability(const Congruence& c);

// One-sided additive congruence closure of the computed relation:
// (a,b) related implies (x+a, x+b) and (a+x, b+x) related within budget.
CheckOutcome additive_congruence_closure(const Congruence& c);

// Same for the multiplicative product.
CheckOutcome multiplicative_congruence_closure(const Congruence& c);

enum class DegreeVerdict { equal, left_finer, right_finer, incomparable };

std::string verdict_name(DegreeVerdict v);

struct CompareResult {
  std::vector<DegreeVerdict> per_degree;  // degrees 0..D
  DegreeVerdict overall = DegreeVerdict::equal;
  bool inconclusive = false;  // either input unstabilized
};

// Per-degree partition comparison (left_finer: every a-block sits inside one
// b-block properly somewhere). Throws BudgetMismatch when solutions or D
// differ.
CompareResult compare_congruences(const Congruence& a, const Congruence& b);

struct StabilizationEntry {
  int slack = 0;
  bool stabilized = false;
  std::vector<int> block_counts;  // degrees 0..D
  RuleCounts rule_unions;
};

struct CongruenceReport {
  CongruenceKind kind = CongruenceKind::eta;
  int degree = 0;
  std::vector<StabilizationEntry> entries;  // one per requested slack
  // Least slack s in the list whose result equals the next listed slack's
  // result on degree <= D; -1 when never.
  int stable_at_slack = -1;
  std::vector<int> monoid_class_counts;  // degrees 0..D, before quotienting
};

// Recomputes at each slack (ascending) and reports where consecutive results
// agree. Deterministic for fixed inputs.
CongruenceReport stabilization_report(const Solution& s, CongruenceKind kind,
                                      int D, const std::vector<int>& slacks,
                                      int64_t word_budget = 1000000);

}  // namespace semitruss
