#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "semitruss/degree_table.hpp"
#include "semitruss/solution.hpp"
#include "semitruss/word.hpp"

namespace semitruss {

// Immutable bundle of both degree tables plus the derived data every
// congruence and quotient computation needs: the permutation group generated
// by the sigma rows, the lambda' permutation of every additive class, and
// dense composition/action tables. Built once per (solution, degree budget)
// and shared.
class MonoidContext {
 public:
  MonoidContext(const Solution& s, int max_degree, int64_t word_budget);

  const Solution& solution() const { return sol_; }
  int max_degree() const { return max_degree_; }
  int64_t word_budget() const { return word_budget_; }
  const DegreeTable& additive() const { return add_tab_; }
  const DegreeTable& multiplicative() const { return mul_tab_; }

  // Subgroup of Sym(X) generated by the sigma rows, sorted by image table.
  const std::vector<Perm>& group() const { return group_; }
  int group_index(const Perm& p) const;
  int group_inverse(int g) const { return group_inv_[g]; }
  int group_identity() const { return group_id_; }

  int class_count(int d) const { return add_tab_.class_count(d); }
  const std::vector<int>& rep_letters(int d, int c) const {
    return rep_letters_[d][c];
  }
  // Index into group() of lambda' of the class (via pi_inverse of its rep).
  int class_lambda(int d, int c) const { return class_lambda_[d][c]; }
  const std::vector<int>& pi_inverse_letters(int d, int c) const {
    return pi_inv_letters_[d][c];
  }

  // Additive class of the concatenation; degrees must satisfy d1+d2 <= max.
  int add_class(int d1, int c1, int d2, int c2) const;
  // Additive class of the multiplicative product.
  int mul_class(int d1, int c1, int d2, int c2) const;
  // Additive class of the letterwise action of group()[g] on class c.
  int act_class(int g, int d, int c) const;

 private:
  Solution sol_;
  int max_degree_;
  int64_t word_budget_;
  DegreeTable add_tab_;
  DegreeTable mul_tab_;
  std::vector<Perm> sigma_;
  std::vector<Perm> group_;
  std::vector<int> group_inv_;
  int group_id_ = 0;
  std::map<std::vector<int>, int> group_lookup_;

  std::vector<std::vector<std::vector<int>>> rep_letters_;
  std::vector<std::vector<std::vector<int>>> pi_inv_letters_;
  std::vector<std::vector<int>> class_lambda_;
  // add_pair_[d1][d2][c1 * C2 + c2], d1+d2 <= max_degree
  std::vector<std::vector<std::vector<int32_t>>> add_pair_;
  std::vector<std::vector<std::vector<int32_t>>> mul_pair_;
  // act_[g][d][c]
  std::vector<std::vector<std::vector<int32_t>>> act_;
};

using MonoidContextPtr = std::shared_ptr<const MonoidContext>;

MonoidContextPtr make_context(const Solution& s, int max_degree,
                              int64_t word_budget = 1000000);

}  // namespace semitruss
