#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semitruss/congruence.hpp"

namespace semitruss {

// Block of a congruence: classes of one degree glued together. Blocks are
// indexed per degree in order of least member class.
struct BlockId {
  int degree = 0;
  int index = 0;

  bool operator==(const BlockId&) const = default;
  auto operator<=>(const BlockId&) const = default;
};

// Quotient of the structure monoid by a congruence, with both compositions
// tabulated on blocks and verified representative-independent over every
// member pair within the degree budget.
class QuotientMonoid {
 public:
  MonoidContextPtr ctx;
  Congruence cong;
  int budget = 0;          // = cong.report_degree
  bool inconclusive = false;  // congruence unstabilized

  // qadd_[d1][d2][b1 * B2 + b2] -> block index at degree d1+d2 (d1+d2 <= budget)
  std::vector<std::vector<std::vector<int32_t>>> qadd_;
  std::vector<std::vector<std::vector<int32_t>>> qmul_;
  // Per block: the group element of lambda' of its least member.
  std::vector<std::vector<int>> block_lambda_;
  // normality_[d1][d2][b1 * B2 + b2]: block c at degree d1 with
  // b1 + a = a + c for a = blocks[d2][b2]; -1 when none exists.
  std::vector<std::vector<std::vector<int32_t>>> normality_;

  int block_count(int d) const { return cong.block_count(d); }
  BlockId block_of_class(int d, int cls) const;
  // Least additive class in the block.
  int rep_class(const BlockId& b) const;
  std::vector<int> rep_letters(const BlockId& b) const;

  BlockId qadd(const BlockId& a, const BlockId& b) const;
  BlockId qmul(const BlockId& a, const BlockId& b) const;
};

// Tabulates and cross-checks the quotient. Throws WellDefinednessFailure with
// a witness when any composition or the lambda action depends on the chosen
// representative.
QuotientMonoid build_quotient(const Congruence& c);

// Letterwise action of lambda'^eps of block a on block b; eps is +1 or -1.
// Independent of both representatives. Throws DegreeOutOfRange.
BlockId bar_lambda(const QuotientMonoid& q, const BlockId& a, const BlockId& b,
                   int eps);

// The unique block c with a + b = b + c and deg c = deg a, found by scanning
// all blocks of that degree. Throws NoWitness / MultipleWitnesses (both are
// truncation artifacts) and DegreeOutOfRange.
BlockId c_witness(const QuotientMonoid& q, const BlockId& a, const BlockId& b);

// Induced solution on blocks:
//   bar_r(a, b) = (bar_lambda_a(b), bar_lambda^{-1}_{bar_lambda_a(b)}(
//                  c_witness(a, bar_lambda_a(b)))).
std::pair<BlockId, BlockId> bar_r(const QuotientMonoid& q, const BlockId& a,
                                  const BlockId& b);

struct SemitrussCheck {
  CheckStatus status = CheckStatus::pass;
  std::string witness;
  int64_t triples_checked = 0;
  int64_t normality_pairs_checked = 0;
};

// a o (b + c) = (a o b) + bar_lambda_a(c) over all block triples with total
// degree <= max_total_degree, plus normality: for every (b, a) a block c with
// b + a = a + c exists.
SemitrussCheck verify_semitruss(const QuotientMonoid& q, int max_total_degree);

struct BarRCheck {
  CheckStatus status = CheckStatus::pass;
  std::string witness;
  int64_t triples_checked = 0;
  bool braid_ok = false;
  bool left_nondegenerate_ok = false;
};

// Braid relation for bar_r on block triples of degree <= braid_degree each
// (requires 3 * braid_degree <= budget), and injectivity of
// b -> first component of bar_r(a, b) on blocks of every degree
// <= injectivity_degree.
BarRCheck verify_bar_r_ybe(const QuotientMonoid& q, int braid_degree,
                           int injectivity_degree);

struct InducedSolutionResult {
  Solution solution;  // on degree-1 blocks, renumbered by least letter
  int generator_count = 0;
  bool ybe_ok = false;
  bool left_nondegenerate = false;
  // Meaningful when generator_count == n: the tables coincide with the
  // original solution's.
  bool equals_original = false;
  bool inconclusive = false;
};

// Restriction of bar_r to degree-1 blocks as a standalone solution table.
InducedSolutionResult induced_generator_solution(const QuotientMonoid& q,
                                                 const Solution& original);

}  // namespace semitruss
