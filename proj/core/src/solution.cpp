#include "semitruss/solution.hpp"

#include <algorithm>
#include <thread>

#include "semitruss/errors.hpp"

namespace semitruss {

namespace {

bool row_is_permutation(const std::vector<int>& row) {
  std::vector<bool> seen(row.size(), false);
  for (int v : row) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// r12 r23 r12 and r23 r12 r23 on one triple.
bool braid_holds_at(const Solution& s, int x, int y, int z) {
  auto r = [&s](int a, int b) {
    return std::pair<int, int>{s.sigma[a][b], s.gamma[b][a]};
  };
  auto [a1, b1] = r(x, y);
  auto [b2, c2] = r(b1, z);
  auto [a3, b3] = r(a1, b2);
  // lhs = (a3, b3, c2)
  auto [p1, q1] = r(y, z);
  auto [o2, p2] = r(x, p1);
  auto [p3, q3] = r(p2, q1);
  // rhs = (o2, p3, q3)
  return a3 == o2 && b3 == p3 && c2 == q3;
}

bool braid_holds_everywhere(const Solution& s) {
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      for (int z = 0; z < s.n; ++z)
        if (!braid_holds_at(s, x, y, z)) return false;
  return true;
}

void check_table_shape(int n, const std::vector<std::vector<int>>& tab,
                       const char* name) {
  if (static_cast<int>(tab.size()) != n)
    throw ShapeMismatch(std::string(name) + " must have " +
                        std::to_string(n) + " rows, got " +
                        std::to_string(tab.size()));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(tab[i].size()) != n)
      throw ShapeMismatch(std::string(name) + " row " + std::to_string(i) +
                          " must have " + std::to_string(n) +
                          " entries, got " + std::to_string(tab[i].size()));
    for (int j = 0; j < n; ++j)
      if (tab[i][j] < 0 || tab[i][j] >= n)
        throw OutOfRangeEntry(std::string(name) + "[" + std::to_string(i) +
                              "][" + std::to_string(j) + "] = " +
                              std::to_string(tab[i][j]) +
                              " outside [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

bool SolutionFilter::matches(const SolutionProfile& p) const {
  auto ok = [](const std::optional<bool>& want, bool got) {
    return !want.has_value() || *want == got;
  };
  return ok(left_nondegenerate, p.left_nondegenerate) &&
         ok(right_nondegenerate, p.right_nondegenerate) &&
         ok(bijective, p.bijective) && ok(involutive, p.involutive) &&
         ok(irretractable, p.irretractable);
}

ValidationResult validate_solution(int n, std::vector<std::vector<int>> sigma,
                                   std::vector<std::vector<int>> gamma) {
  if (n < 1) throw ShapeMismatch("n must be positive, got " + std::to_string(n));
  check_table_shape(n, sigma, "sigma");
  check_table_shape(n, gamma, "gamma");
  ValidationResult out;
  out.solution = Solution{n, std::move(sigma), std::move(gamma)};
  out.ybe = check_ybe(out.solution);
  return out;
}

YbeCheck check_ybe(const Solution& s) {
  YbeCheck out;
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      for (int z = 0; z < s.n; ++z)
        if (!braid_holds_at(s, x, y, z))
          out.violations.push_back({x, y, z});
  out.ok = out.violations.empty();
  return out;
}

bool is_left_nondegenerate(const Solution& s) {
  return std::all_of(s.sigma.begin(), s.sigma.end(), row_is_permutation);
}

SolutionProfile profile(const Solution& s) {
  if (!check_ybe(s).ok)
    throw NotASolution("profile requires the braid relation to hold");
  SolutionProfile p;
  p.is_ybe = true;
  p.left_nondegenerate = is_left_nondegenerate(s);
  p.right_nondegenerate =
      std::all_of(s.gamma.begin(), s.gamma.end(), row_is_permutation);
  std::vector<bool> image(static_cast<size_t>(s.n) * s.n, false);
  bool injective = true;
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      int idx = s.sigma[x][y] * s.n + s.gamma[y][x];
      if (image[idx]) injective = false;
      image[idx] = true;
    }
  p.bijective = injective;
  bool invol = true;
  for (int x = 0; x < s.n && invol; ++x)
    for (int y = 0; y < s.n && invol; ++y) {
      int u = s.sigma[x][y], v = s.gamma[y][x];
      if (s.sigma[u][v] != x || s.gamma[v][u] != y) invol = false;
    }
  p.involutive = invol;
  // The retraction relation glues x,y with equal sigma and gamma columns; the
  // flag is scoped to both-sided non-degenerate solutions.
  bool separated = true;
  for (int x = 0; x < s.n && separated; ++x)
    for (int y = x + 1; y < s.n && separated; ++y)
      if (s.sigma[x] == s.sigma[y] && s.gamma[x] == s.gamma[y])
        separated = false;
  p.irretractable = p.left_nondegenerate && p.right_nondegenerate && separated;
  return p;
}

Solution derived_left_solution(const Solution& s) {
  if (!is_left_nondegenerate(s))
    throw NotLeftNondegenerate("derived solution needs bijective sigma rows");
  std::vector<std::vector<int>> sigma_inv(s.n, std::vector<int>(s.n));
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) sigma_inv[x][s.sigma[x][y]] = y;
  Solution d;
  d.n = s.n;
  d.sigma.assign(s.n, {});
  d.gamma.assign(s.n, std::vector<int>(s.n));
  for (int x = 0; x < s.n; ++x) {
    d.sigma[x].resize(s.n);
    for (int y = 0; y < s.n; ++y) d.sigma[x][y] = y;
  }
  for (int y = 0; y < s.n; ++y)
    for (int x = 0; x < s.n; ++x)
      d.gamma[y][x] = s.sigma[y][s.gamma[sigma_inv[x][y]][x]];
  if (!check_ybe(d).ok)
    throw NotASolution("derived tables fail the braid relation");
  return d;
}

namespace {

// Maps {0..n^n-1} (or permutation subsequence) to a row of length n.
std::vector<std::vector<int>> all_rows(int n, bool permutations_only) {
  std::vector<std::vector<int>> rows;
  std::vector<int> row(n, 0);
  while (true) {
    if (!permutations_only || row_is_permutation(row)) rows.push_back(row);
    int i = n - 1;
    while (i >= 0 && row[i] == n - 1) row[i--] = 0;
    if (i < 0) break;
    ++row[i];
  }
  return rows;
}

}  // namespace

void enumerate_solutions_cb(int n, const SolutionFilter& filter,
                            const std::function<void(const Solution&)>& yield,
                            int threads) {
  if (n < 1) throw SearchSpaceTooLarge("n must be positive");
  if (n > 3)
    throw SearchSpaceTooLarge("exhaustive search is capped at n <= 3, got " +
                              std::to_string(n));
  const auto sigma_rows = all_rows(n, filter.left_nondegenerate == true);
  const auto gamma_rows = all_rows(n, filter.right_nondegenerate == true);
  const int64_t src = static_cast<int64_t>(sigma_rows.size());
  const int64_t grc = static_cast<int64_t>(gamma_rows.size());
  int64_t sc = 1;
  for (int i = 0; i < n; ++i) sc *= src;

  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 0) threads = hw > 0 ? hw : 1;
  threads = static_cast<int>(
      std::min<int64_t>(threads, std::max<int64_t>(sc, 1)));

  // Workers split the sigma index range; each chunk's hits stay in candidate
  // order, so concatenation in chunk order preserves global lex order.
  std::vector<std::vector<Solution>> found(threads);
  auto worker = [&](int w) {
    int64_t lo = sc * w / threads, hi = sc * (w + 1) / threads;
    Solution cand;
    cand.n = n;
    cand.sigma.assign(n, std::vector<int>(n));
    cand.gamma.assign(n, std::vector<int>(n));
    std::vector<int> gsel(n, 0);
    for (int64_t si = lo; si < hi; ++si) {
      int64_t s = si;
      for (int r = n - 1; r >= 0; --r) {
        cand.sigma[r] = sigma_rows[s % src];
        s /= src;
      }
      // Gamma rows advance by odometer; only the rows that tick get rewritten.
      for (int r = 0; r < n; ++r) {
        gsel[r] = 0;
        cand.gamma[r] = gamma_rows[0];
      }
      while (true) {
        if (braid_holds_everywhere(cand) && filter.matches(profile(cand)))
          found[w].push_back(cand);
        int r = n - 1;
        while (r >= 0 && gsel[r] == grc - 1) gsel[r--] = 0;
        if (r < 0) break;
        ++gsel[r];
        cand.gamma[r] = gamma_rows[gsel[r]];
        for (int t = r + 1; t < n; ++t) cand.gamma[t] = gamma_rows[0];
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }
  for (auto& chunk : found)
    for (auto& s : chunk) yield(s);
}

std::vector<Solution> enumerate_solutions(int n, const SolutionFilter& filter,
                                          int threads) {
  std::vector<Solution> out;
  enumerate_solutions_cb(
      n, filter, [&out](const Solution& s) { out.push_back(s); }, threads);
  return out;
}

}  // namespace semitruss
