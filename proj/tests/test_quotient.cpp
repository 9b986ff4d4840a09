#include <doctest.h>

#include "semitruss/catalog.hpp"
#include "semitruss/errors.hpp"
#include "semitruss/quotient.hpp"

using namespace semitruss;

namespace {

Solution named(const std::string& name) {
  const CatalogEntry* e = catalog_find(name);
  REQUIRE(e != nullptr);
  return e->solution;
}

QuotientMonoid mu_quotient(const Solution& s, int D, int slack = 1) {
  return build_quotient(compute_congruence(s, CongruenceKind::mu, D, slack));
}

Congruence fabricate(const MonoidContextPtr& ctx, int D,
                     std::vector<std::vector<int>> block_of) {
  Congruence c;
  c.kind = CongruenceKind::mu;
  c.report_degree = D;
  c.slack = 1;
  c.stabilized = true;
  c.ctx = ctx;
  c.block_of = std::move(block_of);
  c.blocks.resize(c.block_of.size());
  for (size_t d = 0; d < c.block_of.size(); ++d) {
    int nb = 0;
    for (int b : c.block_of[d]) nb = std::max(nb, b + 1);
    c.blocks[d].resize(nb);
    for (size_t cls = 0; cls < c.block_of[d].size(); ++cls)
      c.blocks[d][c.block_of[d][cls]].push_back(static_cast<int>(cls));
  }
  return c;
}

}  // namespace

TEST_CASE("quotient by an equality congruence mirrors the class algebra") {
  Solution p2 = named("P2");
  QuotientMonoid q = mu_quotient(p2, 4);
  CHECK_FALSE(q.inconclusive);
  const MonoidContext& ctx = *q.ctx;
  for (int d1 = 0; d1 <= 4; ++d1) {
    CHECK(q.block_count(d1) == ctx.class_count(d1));
    for (int d2 = 0; d1 + d2 <= 4; ++d2)
      for (int c1 = 0; c1 < ctx.class_count(d1); ++c1)
        for (int c2 = 0; c2 < ctx.class_count(d2); ++c2) {
          BlockId a = q.block_of_class(d1, c1);
          BlockId b = q.block_of_class(d2, c2);
          CHECK(q.qadd(a, b) ==
                q.block_of_class(d1 + d2, ctx.add_class(d1, c1, d2, c2)));
          CHECK(q.qmul(a, b) ==
                q.block_of_class(d1 + d2, ctx.mul_class(d1, c1, d2, c2)));
        }
  }
  CHECK(q.rep_class(BlockId{1, 1}) == 1);
  CHECK(q.rep_letters(BlockId{1, 1}) == std::vector<int>{1});
  CHECK_THROWS_AS(q.qadd(BlockId{3, 0}, BlockId{2, 0}), DegreeOutOfRange);
  CHECK_THROWS_AS(q.block_of_class(5, 0), DegreeOutOfRange);
}

TEST_CASE("frozen witness classes and induced maps") {
  SUBCASE("T2: everything commutes, bar_r is the flip") {
    QuotientMonoid q = mu_quotient(named("T2"), 4);
    BlockId z0{1, 0}, z1{1, 1};
    CHECK(c_witness(q, z0, z1) == z0);
    CHECK(c_witness(q, z1, z0) == z1);
    CHECK(bar_r(q, z0, z1) == std::make_pair(z1, z0));
    CHECK(bar_r(q, z0, z0) == std::make_pair(z0, z0));
  }

  SUBCASE("P2: bar_lambda swaps, witnesses commute") {
    QuotientMonoid q = mu_quotient(named("P2"), 4);
    BlockId z0{1, 0}, z1{1, 1};
    CHECK(bar_lambda(q, z0, z0, 1) == z1);
    CHECK(bar_lambda(q, z0, z1, -1) == z0);
    CHECK(bar_lambda(q, z0, bar_lambda(q, z0, z1, 1), -1) == z1);
    CHECK(c_witness(q, z0, z1) == z0);
    CHECK(bar_r(q, z0, z0) == std::make_pair(z1, z1));
    CHECK(bar_r(q, z0, z1) == std::make_pair(z0, z1));
  }

  SUBCASE("RD2: the witness repeats the left argument") {
    QuotientMonoid q = mu_quotient(named("RD2"), 4);
    BlockId z0{1, 0}, z1{1, 1};
    CHECK(c_witness(q, z0, z1) == z1);
    CHECK(c_witness(q, z1, z0) == z0);
    // bar_r(a, b) = (b, b), exactly the original right-collapse map.
    CHECK(bar_r(q, z0, z1) == std::make_pair(z1, z1));
    CHECK(bar_r(q, z1, z0) == std::make_pair(z0, z0));
  }
}

TEST_CASE("semi-truss law and induced braid relation on the catalog") {
  for (const char* name : {"T2", "P2", "RD2", "T3", "P3"}) {
    QuotientMonoid q = mu_quotient(named(name), 4);
    SemitrussCheck st = verify_semitruss(q, 4);
    CHECK(st.status == CheckStatus::pass);
    CHECK(st.triples_checked > 0);
    CHECK(st.normality_pairs_checked > 0);
    BarRCheck br = verify_bar_r_ybe(q, 1, 2);
    CHECK(br.status == CheckStatus::pass);
    CHECK(br.braid_ok);
    CHECK(br.left_nondegenerate_ok);
    CHECK(br.triples_checked > 0);
  }
}

TEST_CASE("induced generator solutions") {
  SUBCASE("equality congruence reproduces the original") {
    for (const char* name : {"T2", "P2", "RD2", "T3"}) {
      Solution s = named(name);
      InducedSolutionResult ind =
          induced_generator_solution(mu_quotient(s, 4), s);
      CHECK(ind.generator_count == s.n);
      CHECK(ind.ybe_ok);
      CHECK(ind.left_nondegenerate);
      CHECK(ind.equals_original);
      CHECK(ind.solution == s);
    }
  }

  SUBCASE("collapsing solutions retract to one generator") {
    Solution collapse{2, {{0, 1}, {0, 1}}, {{1, 0}, {1, 0}}};
    InducedSolutionResult ind =
        induced_generator_solution(mu_quotient(collapse, 4), collapse);
    CHECK(ind.generator_count == 1);
    CHECK(ind.ybe_ok);
    CHECK(ind.left_nondegenerate);
    CHECK_FALSE(ind.equals_original);
    CHECK(ind.solution.n == 1);

    Solution p3 = named("P3");
    InducedSolutionResult ip3 =
        induced_generator_solution(mu_quotient(p3, 4), p3);
    CHECK(ip3.generator_count == 1);
    CHECK_FALSE(ip3.equals_original);
  }

  SUBCASE("irretractable solutions keep all generators") {
    SolutionFilter irr;
    irr.irretractable = true;
    auto sols = enumerate_solutions(3, irr);
    REQUIRE(sols.size() == 12);
    InducedSolutionResult ind =
        induced_generator_solution(mu_quotient(sols[0], 3), sols[0]);
    CHECK(ind.generator_count == 3);
    CHECK(ind.equals_original);
  }
}

TEST_CASE("representative independence is cross-checked at build time") {
  Solution p2 = named("P2");
  auto ctx = make_context(p2, 2);
  // Glue the two letters but keep degree 2 apart: addition is then not
  // well-defined on blocks, and the build must refuse.
  Congruence broken = fabricate(ctx, 2, {{0}, {0, 0}, {0, 1, 2}});
  CHECK_THROWS_AS(build_quotient(broken), WellDefinednessFailure);
}

TEST_CASE("witness scan artifacts on a synthetic coarsening") {
  Solution t3 = named("T3");
  auto ctx = make_context(t3, 3);
  // Letters stay apart while every higher degree collapses to a point; the
  // witness equation then accepts every candidate.
  Congruence coarse = fabricate(
      ctx, 3,
      {{0}, {0, 1, 2}, std::vector<int>(6, 0), std::vector<int>(10, 0)});
  QuotientMonoid q = build_quotient(coarse);
  CHECK(q.block_count(2) == 1);
  try {
    c_witness(q, BlockId{1, 0}, BlockId{1, 1});
    FAIL("expected MultipleWitnesses");
  } catch (const MultipleWitnesses& e) {
    CHECK(e.candidates.size() == 3);
  }
}

TEST_CASE("unstabilized congruences mark the quotient inconclusive") {
  QuotientMonoid q =
      build_quotient(compute_congruence(named("P2"), CongruenceKind::mu, 3, 0));
  CHECK(q.inconclusive);
  // The tables are still exact here, so the checks pass anyway.
  CHECK(verify_semitruss(q, 3).status == CheckStatus::pass);
  CHECK(verify_bar_r_ybe(q, 1, 1).status == CheckStatus::pass);
}

TEST_CASE("degree guards") {
  QuotientMonoid q = mu_quotient(named("T2"), 3);
  CHECK_THROWS_AS(bar_lambda(q, BlockId{1, 0}, BlockId{4, 0}, 1),
                  DegreeOutOfRange);
  CHECK_THROWS_AS(c_witness(q, BlockId{2, 0}, BlockId{2, 0}),
                  DegreeOutOfRange);
  CHECK_THROWS_AS(verify_bar_r_ybe(q, 2, 1), DegreeOutOfRange);
}
