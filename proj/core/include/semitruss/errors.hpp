#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace semitruss {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input table has wrong dimensions (rows/columns not n x n, or n < 1).
struct ShapeMismatch : Error {
  using Error::Error;
};

// Table entry outside [0, n).
struct OutOfRangeEntry : Error {
  using Error::Error;
};

// Operation requires every sigma row to be a permutation.
struct NotLeftNondegenerate : Error {
  using Error::Error;
};

// Operation requires the map to satisfy the braid relation.
struct NotASolution : Error {
  using Error::Error;
};

// Exhaustive search is capped at n <= 3.
struct SearchSpaceTooLarge : Error {
  using Error::Error;
};

// n^d exceeds the per-degree word budget.
struct DegreeTooLarge : Error {
  using Error::Error;
};

// Word or class degree outside the table's range.
struct DegreeOutOfRange : Error {
  using Error::Error;
};

// Word tagged with the other view, or congruence kind used in the wrong view.
struct ViewMismatch : Error {
  using Error::Error;
};

// Two congruences built over different solutions or degree budgets.
struct BudgetMismatch : Error {
  using Error::Error;
};

// A quotient operation depends on the representative chosen; carries the
// witness. Signals either a bug or an unstabilized congruence.
struct WellDefinednessFailure : Error {
  using Error::Error;
};

// No class c with a+b = b+c at the required degree; candidates were scanned
// exhaustively. Truncation artifact of an unstabilized congruence.
struct NoWitness : Error {
  explicit NoWitness(const std::string& what) : Error(what) {}
};

// More than one class c with a+b = b+c; carries all candidates.
struct MultipleWitnesses : Error {
  MultipleWitnesses(const std::string& what, std::vector<int> cands)
      : Error(what), candidates(std::move(cands)) {}
  std::vector<int> candidates;
};

}  // namespace semitruss
