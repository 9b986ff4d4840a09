#include "semitruss/quotient.hpp"

#include <algorithm>
#include <array>

#include "semitruss/errors.hpp"

namespace semitruss {

namespace {

std::string block_desc(const QuotientMonoid& q, const BlockId& b) {
  return "[" + word_digits(q.rep_letters(b)) + "]";
}

std::string class_desc(const MonoidContext& ctx, int d, int c) {
  return "[" + word_digits(ctx.rep_letters(d, c)) + "]";
}

void check_block_index(const QuotientMonoid& q, const BlockId& b) {
  if (b.degree < 0 || b.degree > q.budget || b.index < 0 ||
      b.index >= q.block_count(b.degree))
    throw DegreeOutOfRange("block (" + std::to_string(b.degree) + "," +
                           std::to_string(b.index) + ") outside the quotient");
}

}  // namespace

BlockId QuotientMonoid::block_of_class(int d, int cls) const {
  if (d < 0 || d > budget || cls < 0 ||
      cls >= static_cast<int>(cong.block_of[d].size()))
    throw DegreeOutOfRange("class (" + std::to_string(d) + "," +
                           std::to_string(cls) + ") outside the quotient");
  return BlockId{d, cong.block_of[d][cls]};
}

int QuotientMonoid::rep_class(const BlockId& b) const {
  check_block_index(*this, b);
  return cong.blocks[b.degree][b.index][0];
}

std::vector<int> QuotientMonoid::rep_letters(const BlockId& b) const {
  return ctx->rep_letters(b.degree, rep_class(b));
}

BlockId QuotientMonoid::qadd(const BlockId& a, const BlockId& b) const {
  check_block_index(*this, a);
  check_block_index(*this, b);
  if (a.degree + b.degree > budget)
    throw DegreeOutOfRange("sum degree exceeds quotient budget");
  int b2 = block_count(b.degree);
  return BlockId{a.degree + b.degree,
                 qadd_[a.degree][b.degree][a.index * b2 + b.index]};
}

BlockId QuotientMonoid::qmul(const BlockId& a, const BlockId& b) const {
  check_block_index(*this, a);
  check_block_index(*this, b);
  if (a.degree + b.degree > budget)
    throw DegreeOutOfRange("product degree exceeds quotient budget");
  int b2 = block_count(b.degree);
  return BlockId{a.degree + b.degree,
                 qmul_[a.degree][b.degree][a.index * b2 + b.index]};
}

QuotientMonoid build_quotient(const Congruence& c) {
  if (!c.ctx) throw Error("congruence carries no context");
  QuotientMonoid q;
  q.ctx = c.ctx;
  q.cong = c;
  q.budget = c.report_degree;
  q.inconclusive = !c.stabilized;
  const MonoidContext& ctx = *q.ctx;
  const int D = q.budget;

  // Compositions on blocks, verified against every member pair.
  q.qadd_.resize(D + 1);
  q.qmul_.resize(D + 1);
  for (int d1 = 0; d1 <= D; ++d1) {
    q.qadd_[d1].resize(D - d1 + 1);
    q.qmul_[d1].resize(D - d1 + 1);
    for (int d2 = 0; d2 + d1 <= D; ++d2) {
      int b1n = c.block_count(d1), b2n = c.block_count(d2);
      auto& add_tab = q.qadd_[d1][d2];
      auto& mul_tab = q.qmul_[d1][d2];
      add_tab.assign(static_cast<size_t>(b1n) * b2n, -1);
      mul_tab.assign(static_cast<size_t>(b1n) * b2n, -1);
      for (int b1 = 0; b1 < b1n; ++b1) {
        for (int b2 = 0; b2 < b2n; ++b2) {
          int32_t* slots[2] = {&add_tab[b1 * b2n + b2],
                               &mul_tab[b1 * b2n + b2]};
          for (int which = 0; which < 2; ++which) {
            int32_t& slot = *slots[which];
            for (int m1 : c.blocks[d1][b1]) {
              for (int m2 : c.blocks[d2][b2]) {
                int prod = which == 0 ? ctx.add_class(d1, m1, d2, m2)
                                      : ctx.mul_class(d1, m1, d2, m2);
                int blk = c.block_of[d1 + d2][prod];
                if (slot < 0) {
                  slot = blk;
                } else if (slot != blk) {
                  throw WellDefinednessFailure(
                      std::string(which == 0 ? "additive" : "multiplicative") +
                      " composition depends on representatives: " +
                      class_desc(ctx, d1, m1) + (which == 0 ? " + " : " o ") +
                      class_desc(ctx, d2, m2) + " leaves the block of " +
                      class_desc(ctx, d1, c.blocks[d1][b1][0]) +
                      (which == 0 ? " + " : " o ") +
                      class_desc(ctx, d2, c.blocks[d2][b2][0]));
                }
              }
            }
          }
        }
      }
    }
  }

  // lambda' of the least member per block; every member must induce the same
  // action on blocks, and the whole sigma group must map blocks to blocks.
  q.block_lambda_.resize(D + 1);
  for (int d = 0; d <= D; ++d) {
    q.block_lambda_[d].resize(c.block_count(d));
    for (int b = 0; b < c.block_count(d); ++b) {
      const auto& members = c.blocks[d][b];
      int g_rep = ctx.class_lambda(d, members[0]);
      q.block_lambda_[d][b] = g_rep;
      for (size_t i = 1; i < members.size(); ++i) {
        int g_m = ctx.class_lambda(d, members[i]);
        if (g_m == g_rep) continue;
        for (int e = 0; e <= D; ++e) {
          for (int x = 0; x < ctx.class_count(e); ++x) {
            if (c.block_of[e][ctx.act_class(g_m, e, x)] !=
                c.block_of[e][ctx.act_class(g_rep, e, x)])
              throw WellDefinednessFailure(
                  "lambda' action depends on representatives: " +
                  class_desc(ctx, d, members[i]) + " vs " +
                  class_desc(ctx, d, members[0]) + " move " +
                  class_desc(ctx, e, x) + " to different blocks");
          }
        }
      }
    }
  }
  for (int g = 0; g < static_cast<int>(ctx.group().size()); ++g) {
    for (int d = 0; d <= D; ++d) {
      for (const auto& block : c.blocks[d]) {
        int img = c.block_of[d][ctx.act_class(g, d, block[0])];
        for (size_t i = 1; i < block.size(); ++i) {
          if (c.block_of[d][ctx.act_class(g, d, block[i])] != img)
            throw WellDefinednessFailure(
                "sigma-group action tears a block apart: permutation " +
                std::to_string(g) + " separates " +
                class_desc(ctx, d, block[0]) + " from " +
                class_desc(ctx, d, block[i]));
        }
      }
    }
  }

  // Normality witnesses: c with b + a = a + c, cached; -1 none, -2 ambiguous.
  q.normality_.resize(D + 1);
  for (int d1 = 0; d1 <= D; ++d1) {
    q.normality_[d1].resize(D - d1 + 1);
    for (int d2 = 0; d2 + d1 <= D; ++d2) {
      int b1n = c.block_count(d1), b2n = c.block_count(d2);
      auto& tab = q.normality_[d1][d2];
      tab.assign(static_cast<size_t>(b1n) * b2n, -1);
      for (int b1 = 0; b1 < b1n; ++b1) {
        for (int b2 = 0; b2 < b2n; ++b2) {
          int lhs = q.qadd_[d1][d2][b1 * b2n + b2];
          int c1n = c.block_count(d1);
          for (int cand = 0; cand < c1n; ++cand) {
            if (q.qadd_[d2][d1][b2 * c1n + cand] == lhs) {
              auto& slot = tab[b1 * b2n + b2];
              slot = slot == -1 ? cand : -2;
            }
          }
        }
      }
    }
  }
  return q;
}

BlockId bar_lambda(const QuotientMonoid& q, const BlockId& a, const BlockId& b,
                   int eps) {
  check_block_index(q, a);
  check_block_index(q, b);
  if (eps != 1 && eps != -1) throw Error("eps must be +1 or -1");
  int g = q.block_lambda_[a.degree][a.index];
  if (eps < 0) g = q.ctx->group_inverse(g);
  int img = q.ctx->act_class(g, b.degree, q.rep_class(b));
  return q.block_of_class(b.degree, img);
}

BlockId c_witness(const QuotientMonoid& q, const BlockId& a, const BlockId& b) {
  check_block_index(q, a);
  check_block_index(q, b);
  if (a.degree + b.degree > q.budget)
    throw DegreeOutOfRange("witness scan needs degree " +
                           std::to_string(a.degree + b.degree) +
                           " inside the quotient budget");
  BlockId lhs = q.qadd(a, b);
  std::vector<int> candidates;
  for (int cand = 0; cand < q.block_count(a.degree); ++cand) {
    if (q.qadd(b, BlockId{a.degree, cand}) == lhs) candidates.push_back(cand);
  }
  if (candidates.empty())
    throw NoWitness("no block c of degree " + std::to_string(a.degree) +
                    " with " + block_desc(q, a) + " + " + block_desc(q, b) +
                    " = " + block_desc(q, b) + " + c inside the budget");
  if (candidates.size() > 1)
    throw MultipleWitnesses(
        "several blocks c of degree " + std::to_string(a.degree) + " satisfy " +
            block_desc(q, a) + " + " + block_desc(q, b) + " = " +
            block_desc(q, b) + " + c",
        candidates);
  return BlockId{a.degree, candidates[0]};
}

std::pair<BlockId, BlockId> bar_r(const QuotientMonoid& q, const BlockId& a,
                                  const BlockId& b) {
  BlockId first = bar_lambda(q, a, b, 1);
  BlockId c = c_witness(q, a, first);
  BlockId second = bar_lambda(q, first, c, -1);
  return {first, second};
}

SemitrussCheck verify_semitruss(const QuotientMonoid& q, int max_total_degree) {
  SemitrussCheck out;
  const int Dm = std::min(max_total_degree, q.budget);
  for (int da = 0; da <= Dm; ++da) {
    for (int db = 0; da + db <= Dm; ++db) {
      for (int dc = 0; da + db + dc <= Dm; ++dc) {
        for (int a = 0; a < q.block_count(da); ++a) {
          for (int b = 0; b < q.block_count(db); ++b) {
            for (int c = 0; c < q.block_count(dc); ++c) {
              BlockId A{da, a}, B{db, b}, C{dc, c};
              BlockId lhs = q.qmul(A, q.qadd(B, C));
              BlockId rhs = q.qadd(q.qmul(A, B), bar_lambda(q, A, C, 1));
              ++out.triples_checked;
              if (lhs != rhs) {
                out.status = q.cong.stabilized ? CheckStatus::fail
                                               : CheckStatus::inconclusive;
                out.witness = "a=" + block_desc(q, A) + " b=" +
                              block_desc(q, B) + " c=" + block_desc(q, C) +
                              ": a o (b + c) != (a o b) + lambda'_a(c)";
                return out;
              }
            }
          }
        }
      }
    }
  }
  for (int db = 0; db <= Dm; ++db) {
    for (int da = 0; da + db <= Dm; ++da) {
      int b2n = q.block_count(da);
      for (int b = 0; b < q.block_count(db); ++b) {
        for (int a = 0; a < b2n; ++a) {
          ++out.normality_pairs_checked;
          if (q.normality_[db][da][b * b2n + a] == -1) {
            out.status = q.cong.stabilized ? CheckStatus::fail
                                           : CheckStatus::inconclusive;
            out.witness = "no c with " + block_desc(q, BlockId{db, b}) +
                          " + " + block_desc(q, BlockId{da, a}) + " = " +
                          block_desc(q, BlockId{da, a}) + " + c";
            return out;
          }
        }
      }
    }
  }
  return out;
}

BarRCheck verify_bar_r_ybe(const QuotientMonoid& q, int braid_degree,
                           int injectivity_degree) {
  if (3 * braid_degree > q.budget || injectivity_degree > q.budget)
    throw DegreeOutOfRange("braid check on degree " +
                           std::to_string(braid_degree) +
                           " blocks needs budget " +
                           std::to_string(3 * braid_degree));
  BarRCheck out;
  auto r12 = [&](std::array<BlockId, 3> t) {
    auto [u, v] = bar_r(q, t[0], t[1]);
    return std::array<BlockId, 3>{u, v, t[2]};
  };
  auto r23 = [&](std::array<BlockId, 3> t) {
    auto [u, v] = bar_r(q, t[1], t[2]);
    return std::array<BlockId, 3>{t[0], u, v};
  };
  out.braid_ok = true;
  try {
    for (int da = 1; da <= braid_degree; ++da) {
      for (int db = 1; db <= braid_degree; ++db) {
        for (int dc = 1; dc <= braid_degree; ++dc) {
          for (int a = 0; a < q.block_count(da); ++a) {
            for (int b = 0; b < q.block_count(db); ++b) {
              for (int c = 0; c < q.block_count(dc); ++c) {
                std::array<BlockId, 3> t{BlockId{da, a}, BlockId{db, b},
                                         BlockId{dc, c}};
                ++out.triples_checked;
                if (r12(r23(r12(t))) != r23(r12(r23(t)))) {
                  out.braid_ok = false;
                  out.status = q.cong.stabilized ? CheckStatus::fail
                                                 : CheckStatus::inconclusive;
                  out.witness = "braid fails at " + block_desc(q, t[0]) + "," +
                                block_desc(q, t[1]) + "," + block_desc(q, t[2]);
                  return out;
                }
              }
            }
          }
        }
      }
    }
    out.left_nondegenerate_ok = true;
    for (int da = 1; da <= injectivity_degree; ++da) {
      for (int a = 0; a < q.block_count(da); ++a) {
        for (int db = 1; db <= injectivity_degree; ++db) {
          std::vector<char> hit(q.block_count(db), 0);
          for (int b = 0; b < q.block_count(db); ++b) {
            BlockId img = bar_lambda(q, BlockId{da, a}, BlockId{db, b}, 1);
            if (hit[img.index]++) {
              out.left_nondegenerate_ok = false;
              out.status = q.cong.stabilized ? CheckStatus::fail
                                             : CheckStatus::inconclusive;
              out.witness = "lambda' of " + block_desc(q, BlockId{da, a}) +
                            " is not injective on degree " +
                            std::to_string(db) + " blocks";
              return out;
            }
          }
        }
      }
    }
  } catch (const Error& e) {
    out.status =
        q.cong.stabilized ? CheckStatus::fail : CheckStatus::inconclusive;
    out.witness = e.what();
    return out;
  }
  return out;
}

InducedSolutionResult induced_generator_solution(const QuotientMonoid& q,
                                                 const Solution& original) {
  InducedSolutionResult out;
  out.inconclusive = q.inconclusive;
  int k = q.block_count(1);
  out.generator_count = k;
  Solution ind;
  ind.n = k;
  ind.sigma.assign(k, std::vector<int>(k, -1));
  ind.gamma.assign(k, std::vector<int>(k, -1));
  try {
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        auto [u, v] = bar_r(q, BlockId{1, a}, BlockId{1, b});
        ind.sigma[a][b] = u.index;
        ind.gamma[b][a] = v.index;
      }
    }
  } catch (const Error&) {
    out.inconclusive = true;
    out.solution.n = 0;
    return out;
  }
  out.solution = ind;
  out.ybe_ok = check_ybe(ind).ok;
  out.left_nondegenerate = is_left_nondegenerate(ind);
  out.equals_original = k == original.n && ind.sigma == original.sigma &&
                        ind.gamma == original.gamma;
  return out;
}

}  // namespace semitruss
