#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace semitruss {

// A monoid element is written in one of two generator alphabets: the
// multiplicative structure monoid (letters compose with o) or the additive
// monoid of the left derived solution (letters compose with +). Words of the
// two views index different relation graphs even when the letter sequences
// coincide.
enum class View { additive, multiplicative };

std::string view_name(View v);

struct Word {
  View view = View::additive;
  std::vector<int> letters;

  int degree() const { return static_cast<int>(letters.size()); }
  bool operator==(const Word&) const = default;
};

Word make_word(View v, std::vector<int> letters);

// Finite permutation of {0,...,n-1}, stored as its image table.
struct Perm {
  std::vector<int> img;

  static Perm identity(int n);
  int size() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[x]; }
  bool is_identity() const;
  Perm inverse() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;
};

// compose(p, q) applies q first: compose(p, q)(x) = p(q(x)).
Perm compose(const Perm& p, const Perm& q);

// Renders letters as digits, e.g. [0,2,1] -> "021"; empty word -> "e".
std::string word_digits(const std::vector<int>& letters);

}  // namespace semitruss
