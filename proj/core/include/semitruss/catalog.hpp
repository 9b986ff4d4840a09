#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semitruss/solution.hpp"

namespace semitruss {

struct CatalogEntry {
  std::string name;
  Solution solution;
};

// Named reference solutions: T2 (flip), P2 (double swap), RD2 (right
// collapse), T3, P3, followed by every left non-degenerate solution on two
// elements found by the exhaustive search, named LND2-<index> by its position
// in enumeration order. Census entries whose tables coincide with a named
// entry are not listed twice. Order and names are stable.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* catalog_find(const std::string& name);

}  // namespace semitruss
