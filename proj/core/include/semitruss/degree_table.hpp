#pragma once

#include <cstdint>
#include <vector>

#include "semitruss/solution.hpp"
#include "semitruss/word.hpp"

namespace semitruss {

// Class of a word inside one DegreeTable: classes of degree d are indexed
// 0..count-1 in order of their least word.
struct ClassId {
  int degree = 0;
  int index = 0;

  bool operator==(const ClassId&) const = default;
  auto operator<=>(const ClassId&) const = default;
};

// Per-degree partition of all n^d words of one view into monoid classes.
// Both defining relation families are length-preserving, so the word problem
// splits by degree: two words are equal in the monoid iff they are connected
// in the degree's relation graph.
class DegreeTable {
 public:
  struct DegreeData {
    std::vector<int32_t> class_of_word;  // word index -> class index
    std::vector<int64_t> rep_word;       // class index -> least word index
  };

  Solution solution;
  View view = View::additive;
  int max_degree = 0;
  int64_t word_budget = 0;
  std::vector<DegreeData> degrees;  // [0..max_degree]

  int class_count(int d) const;
  // Least word of the class, as letters.
  std::vector<int> rep_letters(const ClassId& c) const;
  ClassId class_of_index(int d, int64_t word_index) const;
};

int64_t encode_word(const std::vector<int>& letters, int n);
std::vector<int> decode_word(int64_t index, int n, int degree);

// Builds the table for degrees 0..max_degree. Throws NotLeftNondegenerate,
// DegreeTooLarge (n^d > word_budget for some d <= max_degree).
DegreeTable build_degree_table(const Solution& s, View view, int max_degree,
                               int64_t word_budget = 1000000);

// Throws ViewMismatch when w's view differs, DegreeOutOfRange beyond budget.
ClassId class_of(const DegreeTable& t, const Word& w);

// Concatenation in the additive monoid. Throws ViewMismatch unless t and both
// words are additive; DegreeOutOfRange when the sum exceeds the budget.
ClassId add(const DegreeTable& t, const Word& a, const Word& b);

// Multiplicative product in additive coordinates: a o b = a + lambda'_a(b),
// where lambda'_a is read off the multiplicative word pi_inverse(a).
ClassId mul(const Solution& s, const DegreeTable& t_add, const Word& a,
            const Word& b);

// Composite permutation sigma_{x1} o ... o sigma_{xk} of the multiplicative
// word a = x1 o ... o xk (sigma_{xk} applies first). Throws ViewMismatch,
// NotLeftNondegenerate.
Perm lambda_perm(const Solution& s, const Word& a);

// Letterwise action of p^eps on a word; eps is +1 or -1.
Word apply_perm(const Perm& p, int eps, const Word& w);

// The 1-cocycle on words: z_i = sigma_{x1}...sigma_{x_{i-1}}(x_i).
Word pi_forward(const Solution& s, const Word& a);

// Inverse by peeling: x_i = (sigma_{x1}...sigma_{x_{i-1}})^{-1}(z_i).
Word pi_inverse(const Solution& s, const Word& z);

// gamma_{x_k}(gamma_{x_{k-1}}(...gamma_{x_1}(x)...)) for a multiplicative
// word c = (x_1,...,x_k).
int gamma_of_word(const Solution& s, const Word& c, int x);

struct GammaIdentityWitness {
  int x = 0;
  std::vector<int> word;
  std::vector<int> a_rep;
};

struct GammaIdentityCheck {
  bool ok = false;
  std::vector<GammaIdentityWitness> witnesses;
};

// Exhaustive check of
//   lambda'_x(x1 o ... o xk o a) =
//   lambda'_x(x1 o ... o xk) o lambda'_{gamma_{xk}...gamma_{x1}(x)}(a)
// over all x, all multiplicative words of length <= max_word, and all classes
// a of degree <= max_a, as class equality in t (additive view required).
GammaIdentityCheck check_identity_gamma(const Solution& s,
                                        const DegreeTable& t, int max_word,
                                        int max_a);

}  // namespace semitruss
