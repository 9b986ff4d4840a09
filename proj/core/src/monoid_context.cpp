#include "semitruss/monoid_context.hpp"

#include <algorithm>
#include <deque>

#include "semitruss/errors.hpp"

namespace semitruss {

MonoidContext::MonoidContext(const Solution& s, int max_degree,
                             int64_t word_budget)
    : sol_(s),
      max_degree_(max_degree),
      word_budget_(word_budget),
      add_tab_(build_degree_table(s, View::additive, max_degree, word_budget)),
      mul_tab_(build_degree_table(s, View::multiplicative, max_degree,
                                  word_budget)) {
  const int n = s.n;
  sigma_.reserve(n);
  for (int x = 0; x < n; ++x) sigma_.push_back(Perm{s.sigma[x]});

  // Closure of {sigma_x} under composition; a submonoid of Sym(X) is a group.
  std::deque<Perm> queue;
  auto push = [&](const Perm& p) {
    if (group_lookup_.emplace(p.img, 0).second) queue.push_back(p);
  };
  push(Perm::identity(n));
  while (!queue.empty()) {
    Perm p = queue.front();
    queue.pop_front();
    for (const Perm& g : sigma_) push(compose(p, g));
  }
  group_.reserve(group_lookup_.size());
  for (const auto& [img, idx] : group_lookup_) {
    (void)idx;
    group_.push_back(Perm{img});
  }
  std::sort(group_.begin(), group_.end());
  for (int i = 0; i < static_cast<int>(group_.size()); ++i)
    group_lookup_[group_[i].img] = i;
  group_inv_.resize(group_.size());
  for (int i = 0; i < static_cast<int>(group_.size()); ++i)
    group_inv_[i] = group_index(group_[i].inverse());
  group_id_ = group_index(Perm::identity(n));

  rep_letters_.resize(max_degree + 1);
  pi_inv_letters_.resize(max_degree + 1);
  class_lambda_.resize(max_degree + 1);
  for (int d = 0; d <= max_degree; ++d) {
    int count = add_tab_.class_count(d);
    rep_letters_[d].resize(count);
    pi_inv_letters_[d].resize(count);
    class_lambda_[d].resize(count);
    for (int c = 0; c < count; ++c) {
      rep_letters_[d][c] = add_tab_.rep_letters(ClassId{d, c});
      Word z = make_word(View::additive, rep_letters_[d][c]);
      Word m = pi_inverse(sol_, z);
      pi_inv_letters_[d][c] = m.letters;
      class_lambda_[d][c] = group_index(lambda_perm(sol_, m));
    }
  }

  add_pair_.resize(max_degree + 1);
  mul_pair_.resize(max_degree + 1);
  for (int d1 = 0; d1 <= max_degree; ++d1) {
    add_pair_[d1].resize(max_degree - d1 + 1);
    mul_pair_[d1].resize(max_degree - d1 + 1);
    int c1n = add_tab_.class_count(d1);
    for (int d2 = 0; d1 + d2 <= max_degree; ++d2) {
      int c2n = add_tab_.class_count(d2);
      auto& at = add_pair_[d1][d2];
      auto& mt = mul_pair_[d1][d2];
      at.resize(static_cast<size_t>(c1n) * c2n);
      mt.resize(static_cast<size_t>(c1n) * c2n);
      for (int c1 = 0; c1 < c1n; ++c1) {
        const auto& r1 = rep_letters_[d1][c1];
        const Perm& p1 = group_[class_lambda_[d1][c1]];
        for (int c2 = 0; c2 < c2n; ++c2) {
          std::vector<int> cat = r1;
          const auto& r2 = rep_letters_[d2][c2];
          cat.insert(cat.end(), r2.begin(), r2.end());
          at[static_cast<size_t>(c1) * c2n + c2] =
              add_tab_.degrees[d1 + d2]
                  .class_of_word[encode_word(cat, n)];
          std::vector<int> twisted = r1;
          for (int x : r2) twisted.push_back(p1(x));
          mt[static_cast<size_t>(c1) * c2n + c2] =
              add_tab_.degrees[d1 + d2]
                  .class_of_word[encode_word(twisted, n)];
        }
      }
    }
  }

  act_.resize(group_.size());
  for (size_t g = 0; g < group_.size(); ++g) {
    act_[g].resize(max_degree + 1);
    for (int d = 0; d <= max_degree; ++d) {
      int count = add_tab_.class_count(d);
      act_[g][d].resize(count);
      for (int c = 0; c < count; ++c) {
        std::vector<int> img = rep_letters_[d][c];
        for (int& x : img) x = group_[g](x);
        act_[g][d][c] =
            add_tab_.degrees[d].class_of_word[encode_word(img, n)];
      }
    }
  }
}

int MonoidContext::group_index(const Perm& p) const {
  auto it = group_lookup_.find(p.img);
  if (it == group_lookup_.end())
    throw Error("permutation outside the sigma-generated group");
  return it->second;
}

int MonoidContext::add_class(int d1, int c1, int d2, int c2) const {
  return add_pair_[d1][d2][static_cast<size_t>(c1) *
                               add_tab_.class_count(d2) +
                           c2];
}

int MonoidContext::mul_class(int d1, int c1, int d2, int c2) const {
  return mul_pair_[d1][d2][static_cast<size_t>(c1) *
                               add_tab_.class_count(d2) +
                           c2];
}

int MonoidContext::act_class(int g, int d, int c) const {
  return act_[g][d][c];
}

MonoidContextPtr make_context(const Solution& s, int max_degree,
                              int64_t word_budget) {
  return std::make_shared<MonoidContext>(s, max_degree, word_budget);
}

}  // namespace semitruss
