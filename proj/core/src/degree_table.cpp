#include "semitruss/degree_table.hpp"

#include <algorithm>
#include <numeric>

#include "semitruss/errors.hpp"

namespace semitruss {

namespace {

int64_t find_root(std::vector<int64_t>& parent, int64_t w) {
  int64_t r = w;
  while (parent[r] != r) r = parent[r];
  while (parent[w] != r) {
    int64_t nxt = parent[w];
    parent[w] = r;
    w = nxt;
  }
  return r;
}

std::vector<std::vector<int>> sigma_inverse(const Solution& s) {
  std::vector<std::vector<int>> inv(s.n, std::vector<int>(s.n));
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) inv[x][s.sigma[x][y]] = y;
  return inv;
}

void require_view(const DegreeTable& t, const Word& w) {
  if (w.view != t.view)
    throw ViewMismatch("word is " + view_name(w.view) + ", table is " +
                       view_name(t.view));
}

}  // namespace

int DegreeTable::class_count(int d) const {
  if (d < 0 || d > max_degree)
    throw DegreeOutOfRange("degree " + std::to_string(d) + " outside [0, " +
                           std::to_string(max_degree) + "]");
  return static_cast<int>(degrees[d].rep_word.size());
}

std::vector<int> DegreeTable::rep_letters(const ClassId& c) const {
  class_count(c.degree);
  return decode_word(degrees[c.degree].rep_word[c.index], solution.n,
                     c.degree);
}

ClassId DegreeTable::class_of_index(int d, int64_t word_index) const {
  class_count(d);
  return ClassId{d, degrees[d].class_of_word[word_index]};
}

int64_t encode_word(const std::vector<int>& letters, int n) {
  int64_t idx = 0;
  for (int x : letters) idx = idx * n + x;
  return idx;
}

std::vector<int> decode_word(int64_t index, int n, int degree) {
  std::vector<int> letters(degree);
  for (int i = degree - 1; i >= 0; --i) {
    letters[i] = static_cast<int>(index % n);
    index /= n;
  }
  return letters;
}

DegreeTable build_degree_table(const Solution& s, View view, int max_degree,
                               int64_t word_budget) {
  if (!is_left_nondegenerate(s))
    throw NotLeftNondegenerate(
        "degree tables need every sigma row to be a permutation");
  if (max_degree < 0) throw DegreeOutOfRange("max degree must be >= 0");

  DegreeTable t;
  t.solution = s;
  t.view = view;
  t.max_degree = max_degree;
  t.word_budget = word_budget;
  t.degrees.resize(max_degree + 1);

  const auto sig_inv = sigma_inverse(s);
  const int n = s.n;

  // Relation at one position: (x, y) -> multiplicative (sigma_x(y),
  // gamma_y(x)); additive (y, sigma_y(gamma_{sigma_x^{-1}(y)}(x))).
  auto rewrite = [&](int x, int y) -> std::pair<int, int> {
    if (view == View::multiplicative) return {s.sigma[x][y], s.gamma[y][x]};
    return {y, s.sigma[y][s.gamma[sig_inv[x][y]][x]]};
  };

  int64_t words = 1;
  for (int d = 0; d <= max_degree; ++d) {
    if (d > 0) {
      if (words > word_budget / n)
        throw DegreeTooLarge("degree " + std::to_string(d) + " needs " +
                             std::to_string(words) + "*" + std::to_string(n) +
                             " words, budget " + std::to_string(word_budget));
      words *= n;
    }
    auto& data = t.degrees[d];
    std::vector<int64_t> parent(words);
    std::iota(parent.begin(), parent.end(), 0);
    // Positions i, i+1 hold letters (w / n^{d-1-i}) % n and the next digit.
    for (int64_t w = 0; w < words; ++w) {
      int64_t hi = words / n;  // n^{d-1}
      for (int i = 0; i + 1 < d; ++i) {
        int64_t lo = hi / n;
        int x = static_cast<int>((w / hi) % n);
        int y = static_cast<int>((w / lo) % n);
        auto [u, v] = rewrite(x, y);
        int64_t w2 = w + (u - x) * hi + (v - y) * lo;
        int64_t ra = find_root(parent, w);
        int64_t rb = find_root(parent, w2);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        hi = lo;
      }
    }
    data.class_of_word.assign(words, -1);
    for (int64_t w = 0; w < words; ++w) {
      int64_t r = find_root(parent, w);
      if (data.class_of_word[r] < 0) {
        data.class_of_word[r] = static_cast<int32_t>(data.rep_word.size());
        data.rep_word.push_back(r);
      }
      data.class_of_word[w] = data.class_of_word[r];
    }
  }
  return t;
}

ClassId class_of(const DegreeTable& t, const Word& w) {
  require_view(t, w);
  int d = w.degree();
  if (d > t.max_degree)
    throw DegreeOutOfRange("word degree " + std::to_string(d) +
                           " exceeds table degree " +
                           std::to_string(t.max_degree));
  for (int x : w.letters)
    if (x < 0 || x >= t.solution.n)
      throw OutOfRangeEntry("letter " + std::to_string(x) + " outside [0, " +
                            std::to_string(t.solution.n) + ")");
  return t.class_of_index(d, encode_word(w.letters, t.solution.n));
}

ClassId add(const DegreeTable& t, const Word& a, const Word& b) {
  if (t.view != View::additive)
    throw ViewMismatch("add needs the additive table");
  require_view(t, a);
  require_view(t, b);
  Word ab = a;
  ab.letters.insert(ab.letters.end(), b.letters.begin(), b.letters.end());
  return class_of(t, ab);
}

Perm lambda_perm(const Solution& s, const Word& a) {
  if (a.view != View::multiplicative)
    throw ViewMismatch("lambda_perm takes a multiplicative word");
  if (!is_left_nondegenerate(s))
    throw NotLeftNondegenerate("lambda_perm needs bijective sigma rows");
  Perm p = Perm::identity(s.n);
  for (int x : a.letters) {
    Perm sx{s.sigma[x]};
    p = compose(p, sx);
  }
  return p;
}

Word apply_perm(const Perm& p, int eps, const Word& w) {
  Perm q = eps >= 0 ? p : p.inverse();
  Word out = w;
  for (int& x : out.letters) x = q(x);
  return out;
}

Word pi_forward(const Solution& s, const Word& a) {
  if (a.view != View::multiplicative)
    throw ViewMismatch("pi_forward takes a multiplicative word");
  Perm p = Perm::identity(s.n);
  Word z;
  z.view = View::additive;
  z.letters.reserve(a.letters.size());
  for (int x : a.letters) {
    z.letters.push_back(p(x));
    p = compose(p, Perm{s.sigma[x]});
  }
  return z;
}

Word pi_inverse(const Solution& s, const Word& z) {
  if (z.view != View::additive)
    throw ViewMismatch("pi_inverse takes an additive word");
  if (!is_left_nondegenerate(s))
    throw NotLeftNondegenerate("pi_inverse needs bijective sigma rows");
  Perm inv = Perm::identity(s.n);  // inverse of the running composite
  Word a;
  a.view = View::multiplicative;
  a.letters.reserve(z.letters.size());
  for (int zi : z.letters) {
    int x = inv(zi);
    a.letters.push_back(x);
    inv = compose(Perm{s.sigma[x]}.inverse(), inv);
  }
  return a;
}

ClassId mul(const Solution& s, const DegreeTable& t_add, const Word& a,
            const Word& b) {
  if (t_add.view != View::additive)
    throw ViewMismatch("mul works on the additive table");
  require_view(t_add, a);
  require_view(t_add, b);
  Perm pa = lambda_perm(s, pi_inverse(s, a));
  Word twisted = apply_perm(pa, +1, b);
  return add(t_add, a, twisted);
}

int gamma_of_word(const Solution& s, const Word& c, int x) {
  if (c.view != View::multiplicative)
    throw ViewMismatch("gamma_of_word takes a multiplicative word");
  int y = x;
  for (int letter : c.letters) y = s.gamma[letter][y];
  return y;
}

GammaIdentityCheck check_identity_gamma(const Solution& s,
                                        const DegreeTable& t, int max_word,
                                        int max_a) {
  if (t.view != View::additive)
    throw ViewMismatch("check_identity_gamma needs the additive table");
  if (max_word + max_a > t.max_degree)
    throw DegreeOutOfRange("identity needs degree " +
                           std::to_string(max_word + max_a) +
                           ", table has " + std::to_string(t.max_degree));
  GammaIdentityCheck out;
  out.ok = true;
  const int n = s.n;
  for (int x = 0; x < n; ++x) {
    Perm sx{s.sigma[x]};
    for (int k = 1; k <= max_word; ++k) {
      int64_t count = 1;
      for (int i = 0; i < k; ++i) count *= n;
      for (int64_t wi = 0; wi < count; ++wi) {
        Word w = make_word(View::multiplicative, decode_word(wi, n, k));
        Word w_add = pi_forward(s, w);
        int y = gamma_of_word(s, w, x);
        Perm sy{s.sigma[y]};
        for (int da = 0; da <= max_a; ++da) {
          for (int ai = 0; ai < t.class_count(da); ++ai) {
            Word a = make_word(View::additive,
                               t.rep_letters(ClassId{da, ai}));
            ClassId lhs = class_of(
                t, apply_perm(sx, +1,
                              make_word(View::additive,
                                        t.rep_letters(mul(s, t, w_add, a)))));
            Word u = apply_perm(sx, +1, w_add);
            Word v = apply_perm(sy, +1, a);
            ClassId rhs = mul(s, t, u, v);
            if (lhs != rhs) {
              out.ok = false;
              out.witnesses.push_back(
                  GammaIdentityWitness{x, w.letters, a.letters});
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace semitruss
