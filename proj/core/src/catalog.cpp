#include "semitruss/catalog.hpp"

#include <mutex>

namespace semitruss {

namespace {

Solution make(int n, std::vector<std::vector<int>> sigma,
              std::vector<std::vector<int>> gamma) {
  return Solution{n, std::move(sigma), std::move(gamma)};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  // Trivial flip on two letters.
  entries.push_back({"T2", make(2, {{0, 1}, {0, 1}}, {{0, 1}, {0, 1}})});
  // Constant swap: sigma_x = gamma_x = (0 1) for both letters.
  entries.push_back({"P2", make(2, {{1, 0}, {1, 0}}, {{1, 0}, {1, 0}})});
  // Right-degenerate example: sigma trivial, gamma_y constant at y.
  entries.push_back({"RD2", make(2, {{0, 1}, {0, 1}}, {{0, 0}, {1, 1}})});
  // Trivial flip on three letters.
  entries.push_back(
      {"T3", make(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}},
                  {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}})});
  // Constant 3-cycle on three letters.
  entries.push_back(
      {"P3", make(3, {{1, 2, 0}, {1, 2, 0}, {1, 2, 0}},
                  {{1, 2, 0}, {1, 2, 0}, {1, 2, 0}})});

  // Census of all left non-degenerate solutions on two letters, numbered by
  // enumeration position; entries identical to a named table are skipped.
  SolutionFilter filter;
  filter.left_nondegenerate = true;
  int idx = 0;
  for (const Solution& s : enumerate_solutions(2, filter)) {
    ++idx;
    bool named = false;
    for (const auto& e : entries)
      if (e.solution == s) named = true;
    if (named) continue;
    entries.push_back({"LND2-" + std::to_string(idx), s});
  }
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static std::vector<CatalogEntry> entries;
  static std::once_flag once;
  std::call_once(once, [] { entries = build_catalog(); });
  return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace semitruss
