#pragma once

// Reference implementations used only by tests. Deliberately written along a
// different path than the library: explicit word vectors, map-based class
// ids, dense relation matrices with from-scratch transitive closure. Slow and
// obviously correct beats fast here.

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "semitruss/solution.hpp"
#include "semitruss/word.hpp"

namespace naive {

using semitruss::Solution;
using semitruss::View;

inline std::array<int, 2> apply_r(const Solution& s, int x, int y) {
  return {s.sigma[x][y], s.gamma[y][x]};
}

inline bool braid_ok(const Solution& s) {
  for (int x = 0; x < s.n; ++x) {
    for (int y = 0; y < s.n; ++y) {
      for (int z = 0; z < s.n; ++z) {
        auto [a1, b1] = apply_r(s, x, y);
        auto [b2, c2] = apply_r(s, b1, z);
        auto [a3, b3] = apply_r(s, a1, b2);
        auto [e1, f1] = apply_r(s, y, z);
        auto [d2, e2] = apply_r(s, x, e1);
        auto [e3, f3] = apply_r(s, e2, f1);
        if (a3 != d2 || b3 != e3 || c2 != f3) return false;
      }
    }
  }
  return true;
}

inline std::vector<std::vector<int>> all_words(int n, int degree) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < degree; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out) {
      for (int x = 0; x < n; ++x) {
        std::vector<int> v = w;
        v.push_back(x);
        next.push_back(v);
      }
    }
    out = std::move(next);
  }
  return out;
}

// One rewrite at position i; the defining relations read left to right.
inline std::vector<int> rewrite_at(const Solution& s, View view,
                                   const std::vector<int>& w, size_t i) {
  std::vector<int> out = w;
  int x = w[i], y = w[i + 1];
  if (view == View::multiplicative) {
    out[i] = s.sigma[x][y];
    out[i + 1] = s.gamma[y][x];
  } else {
    int si = 0;
    while (s.sigma[x][si] != y) ++si;  // sigma_x^{-1}(y)
    out[i] = y;
    out[i + 1] = s.sigma[y][s.gamma[si][x]];
  }
  return out;
}

// Partition of all n^d words into monoid classes: connected components of the
// single-rewrite graph. Returns class id per word in the all_words order;
// ids are numbered by first occurrence.
struct WordPartition {
  std::vector<std::vector<int>> words;
  std::map<std::vector<int>, int> word_index;
  std::vector<int> class_id;
  int class_count = 0;
};

inline WordPartition word_partition(const Solution& s, View view, int degree) {
  WordPartition p;
  p.words = all_words(s.n, degree);
  for (size_t i = 0; i < p.words.size(); ++i)
    p.word_index[p.words[i]] = static_cast<int>(i);
  std::vector<int> parent(p.words.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto root = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (size_t i = 0; i < p.words.size(); ++i) {
    for (size_t pos = 0; pos + 1 < p.words[i].size(); ++pos) {
      int j = p.word_index.at(rewrite_at(s, view, p.words[i], pos));
      int a = root(static_cast<int>(i)), b = root(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  p.class_id.assign(p.words.size(), -1);
  for (size_t i = 0; i < p.words.size(); ++i) {
    int r = root(static_cast<int>(i));
    if (p.class_id[r] < 0) p.class_id[r] = p.class_count++;
    p.class_id[i] = p.class_id[r];
  }
  return p;
}

// lambda' of the monoid element whose additive word is w: peel the cocycle
// to recover multiplicative letters, composing their sigma rows as we go.
inline std::vector<int> lambda_of_additive(const Solution& s,
                                           const std::vector<int>& w) {
  std::vector<int> p(s.n);
  for (int i = 0; i < s.n; ++i) p[i] = i;
  for (int z : w) {
    int x = 0;
    while (p[x] != z) ++x;  // p^{-1}(z)
    std::vector<int> q(s.n);
    for (int t = 0; t < s.n; ++t) q[t] = p[s.sigma[x][t]];
    p = std::move(q);
  }
  return p;
}

// u o c on additive words: u followed by lambda'_u applied letterwise to c.
inline std::vector<int> circ_words(const Solution& s,
                                   const std::vector<int>& u,
                                   const std::vector<int>& c) {
  std::vector<int> lam = lambda_of_additive(s, u);
  std::vector<int> out = u;
  for (int x : c) out.push_back(lam[x]);
  return out;
}

// Full-pair-set congruence closure over naive monoid classes, degrees
// 0..total_degree. rel[d] is a dense symmetric boolean matrix.
struct NaiveCongruence {
  std::vector<WordPartition> monoid;       // per degree
  std::vector<std::vector<char>> rel;      // per degree, C*C matrix
  int total_degree = 0;

  bool related_words(int degree, const std::vector<int>& a,
                     const std::vector<int>& b) const {
    int ca = monoid[degree].class_id[monoid[degree].word_index.at(a)];
    int cb = monoid[degree].class_id[monoid[degree].word_index.at(b)];
    int c = monoid[degree].class_count;
    return rel[degree][ca * c + cb] != 0;
  }
};

enum class NaiveKind { eta, nu, mu };

inline NaiveCongruence naive_congruence(const Solution& s, NaiveKind kind,
                                        int total_degree) {
  View op_view =
      kind == NaiveKind::nu ? View::multiplicative : View::additive;
  NaiveCongruence nc;
  nc.total_degree = total_degree;
  for (int d = 0; d <= total_degree; ++d) {
    nc.monoid.push_back(word_partition(s, op_view, d));
    int c = nc.monoid[d].class_count;
    nc.rel.emplace_back(c * c, 0);
    for (int i = 0; i < c; ++i) nc.rel[d][i * c + i] = 1;
  }
  // Word-level product class: concatenation in the operation's own view.
  auto product_class = [&](int d1, const std::vector<int>& a, int d2,
                           const std::vector<int>& b) {
    std::vector<int> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    const WordPartition& m = nc.monoid[d1 + d2];
    return m.class_id[m.word_index.at(ab)];
  };
  // Representative word per class.
  auto rep = [&](int d, int cls) -> const std::vector<int>& {
    const WordPartition& m = nc.monoid[d];
    for (size_t i = 0; i < m.words.size(); ++i)
      if (m.class_id[i] == cls) return m.words[i];
    return m.words[0];
  };
  auto relate = [&](int d, int a, int b) -> bool {
    int c = nc.monoid[d].class_count;
    if (nc.rel[d][a * c + b]) return false;
    nc.rel[d][a * c + b] = nc.rel[d][b * c + a] = 1;
    return true;
  };
  // lambda' permutations of single letters, and their inverses.
  std::vector<std::vector<int>> lam, lam_inv;
  for (int x = 0; x < s.n; ++x) {
    lam.push_back(s.sigma[x]);
    std::vector<int> inv(s.n);
    for (int y = 0; y < s.n; ++y) inv[s.sigma[x][y]] = y;
    lam_inv.push_back(inv);
  }
  auto act_word = [&](const std::vector<int>& p, const std::vector<int>& w) {
    std::vector<int> out = w;
    for (int& t : out) t = p[t];
    return out;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    // Transitive closure per degree (Warshall).
    for (int d = 0; d <= total_degree; ++d) {
      int c = nc.monoid[d].class_count;
      for (int k = 0; k < c; ++k)
        for (int i = 0; i < c; ++i)
          if (nc.rel[d][i * c + k])
            for (int j = 0; j < c; ++j)
              if (nc.rel[d][k * c + j] && !nc.rel[d][i * c + j]) {
                nc.rel[d][i * c + j] = 1;
                changed = true;
              }
    }
    for (int da = 1; da <= total_degree; ++da) {
      int ca = nc.monoid[da].class_count;
      for (int a = 0; a < ca; ++a) {
        for (int b = 0; b < ca; ++b) {
          if (!nc.rel[da][a * ca + b]) continue;
          const std::vector<int>& wa = rep(da, a);
          const std::vector<int>& wb = rep(da, b);
          for (int dc = 0; dc + da <= total_degree; ++dc) {
            for (const auto& wc : nc.monoid[dc].words) {
              if (dc >= 1) {
                changed |= relate(da + dc, product_class(dc, wc, da, wa),
                                  product_class(dc, wc, da, wb));
                changed |= relate(da + dc, product_class(da, wa, dc, wc),
                                  product_class(da, wb, dc, wc));
              }
              if (kind == NaiveKind::mu) {
                // (lambda'_z)^e(a o c) ~ (lambda'_z)^e(b o c); z a single
                // letter suffices, iteration composes the images.
                std::vector<int> uc = circ_words(s, wa, wc);
                std::vector<int> vc = circ_words(s, wb, wc);
                const WordPartition& m = nc.monoid[da + dc];
                auto cls = [&](const std::vector<int>& w) {
                  return m.class_id[m.word_index.at(w)];
                };
                changed |= relate(da + dc, cls(uc), cls(vc));
                for (int z = 0; z < s.n; ++z) {
                  changed |= relate(da + dc, cls(act_word(lam[z], uc)),
                                    cls(act_word(lam[z], vc)));
                  changed |= relate(da + dc, cls(act_word(lam_inv[z], uc)),
                                    cls(act_word(lam_inv[z], vc)));
                }
              }
            }
          }
        }
      }
      // Cancellation: [c.a] ~ [c.b] forces a ~ b.
      for (int dc = 1; dc + da <= total_degree; ++dc) {
        for (const auto& wc : nc.monoid[dc].words) {
          for (int a = 0; a < ca; ++a) {
            for (int b = a + 1; b < ca; ++b) {
              int pa = product_class(dc, wc, da, rep(da, a));
              int pb = product_class(dc, wc, da, rep(da, b));
              int cp = nc.monoid[da + dc].class_count;
              if (nc.rel[da + dc][pa * cp + pb]) changed |= relate(da, a, b);
            }
          }
        }
      }
    }
  }
  return nc;
}

}  // namespace naive
