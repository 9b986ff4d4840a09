#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "semitruss/word.hpp"

namespace semitruss {

// Finite set-theoretic map r(x,y) = (sigma_x(y), gamma_y(x)) on {0..n-1}^2.
// sigma[x][y] = sigma_x(y), gamma[y][x] = gamma_y(x). Whether r satisfies the
// braid relation is a property checked by check_ybe, not an invariant of the
// struct.
struct Solution {
  int n = 0;
  std::vector<std::vector<int>> sigma;
  std::vector<std::vector<int>> gamma;

  bool operator==(const Solution&) const = default;
};

struct YbeCheck {
  bool ok = false;
  // All triples (x,y,z) where r12 r23 r12 != r23 r12 r23, in lex order.
  std::vector<std::array<int, 3>> violations;
};

struct SolutionProfile {
  bool is_ybe = false;
  bool left_nondegenerate = false;
  bool right_nondegenerate = false;
  bool bijective = false;
  bool involutive = false;
  bool irretractable = false;
};

struct ValidationResult {
  Solution solution;
  YbeCheck ybe;
};

// Each set field must match the computed profile; unset fields are ignored.
// Solutions always satisfy the braid relation before the filter applies.
struct SolutionFilter {
  std::optional<bool> left_nondegenerate;
  std::optional<bool> right_nondegenerate;
  std::optional<bool> bijective;
  std::optional<bool> involutive;
  std::optional<bool> irretractable;

  bool matches(const SolutionProfile& p) const;
};

// Shape- and range-checks the tables and records the braid status.
// Throws ShapeMismatch, OutOfRangeEntry.
ValidationResult validate_solution(int n, std::vector<std::vector<int>> sigma,
                                   std::vector<std::vector<int>> gamma);

// Braid relation r12 r23 r12 = r23 r12 r23 on all n^3 triples.
YbeCheck check_ybe(const Solution& s);

// Throws NotASolution when check_ybe fails.
SolutionProfile profile(const Solution& s);

bool is_left_nondegenerate(const Solution& s);

// Left derived solution r'(x,y) = (y, sigma_y(gamma_{sigma_x^{-1}(y)}(x))).
// Throws NotLeftNondegenerate. The result is itself braid-checked.
Solution derived_left_solution(const Solution& s);

// All braid-relation solutions on {0..n-1} matching the filter, in
// lexicographic order of the flattened (sigma, gamma) tables. When the filter
// demands left (right) non-degeneracy the sigma (gamma) rows range over
// permutations only. Throws SearchSpaceTooLarge for n > 3.
// threads = 0 picks the hardware count; enumeration order is identical
// regardless of the thread count.
std::vector<Solution> enumerate_solutions(int n, const SolutionFilter& filter,
                                          int threads = 0);

// Streaming form; yield is called in the same deterministic order.
void enumerate_solutions_cb(int n, const SolutionFilter& filter,
                            const std::function<void(const Solution&)>& yield,
                            int threads = 0);

}  // namespace semitruss
