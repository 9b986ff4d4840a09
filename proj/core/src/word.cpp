#include "semitruss/word.hpp"

#include <numeric>

namespace semitruss {

std::string view_name(View v) {
  return v == View::additive ? "additive" : "multiplicative";
}

Word make_word(View v, std::vector<int> letters) {
  return Word{v, std::move(letters)};
}

Perm Perm::identity(int n) {
  Perm p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.img.resize(img.size());
  for (int i = 0; i < size(); ++i) r.img[img[i]] = i;
  return r;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r;
  r.img.resize(q.img.size());
  for (int i = 0; i < q.size(); ++i) r.img[i] = p.img[q.img[i]];
  return r;
}

std::string word_digits(const std::vector<int>& letters) {
  if (letters.empty()) return "e";
  std::string out;
  for (int x : letters) out += static_cast<char>('0' + x);
  return out;
}

}  // namespace semitruss
