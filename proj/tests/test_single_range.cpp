#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "maxalg/errors.hpp"
#include "maxalg/interval.hpp"
#include "maxalg/matrix.hpp"
#include "maxalg/single_range.hpp"

using namespace maxalg;

namespace {

const NonnegMatrix kTwoByTwo{{20, 9}, {7, 1}};

IntervalSet set_of(const Interval& iv) { return IntervalSet({iv}); }

}  // namespace

TEST_CASE("interval normalization merges touching parts") {
  IntervalSet s({Interval::closed(1, 2), Interval::closed(2, 3), Interval::singleton(5)});
  REQUIRE(s.parts().size() == 2);
  CHECK(s.parts()[0] == Interval::closed(1, 3));
  CHECK(s.parts()[1] == Interval::singleton(5));
  CHECK(s.contains(2.5));
  CHECK_FALSE(s.contains(4.0));
  CHECK(s.inf() == 1.0);
  CHECK(s.sup() == 5.0);

  // A point closing a half-open gap fuses with it.
  IntervalSet t({Interval::half_open_below(0, 1), Interval::singleton(0)});
  REQUIRE(t.parts().size() == 1);
  CHECK(t.parts()[0] == Interval::closed(0, 1));
}

TEST_CASE("half-open membership") {
  Interval h = Interval::half_open_below(0, 5);
  CHECK_FALSE(h.contains(0.0));
  CHECK(h.contains(1e-300));
  CHECK(h.contains(5.0));
  CHECK(intersect(Interval::closed(0, 3), h) == Interval::half_open_below(0, 3));
  CHECK_FALSE(intersect(Interval::closed(7, 8), h).has_value());
}

TEST_CASE("wmax is [min diagonal, max entry]") {
  CHECK(wmax(kTwoByTwo) == Interval::closed(1, 20));
  CHECK(wmax(NonnegMatrix::diagonal(NonnegVector{5, 8})) == Interval::closed(5, 8));
  NonnegMatrix alpha_i = scale(2.5, NonnegMatrix::identity(3));
  CHECK(wmax(alpha_i) == Interval::singleton(2.5));
  CHECK_THROWS_AS(wmax(NonnegMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("wmax_k interpolates order statistics of the diagonal") {
  NonnegMatrix d{{3, 2, 4}, {5, 7, 8}, {2, 3, 6}};
  NonnegMatrix c{{5, 3, 10}, {2, 4, 9}, {3, 8, 7}};
  NonnegMatrix a = block_diag({d, c});

  CHECK(wmax_k(d, 2) == Interval::closed(6, 8));
  CHECK(wmax_k(c, 2) == Interval::closed(5, 10));
  CHECK(wmax_k(a, 2) == Interval::closed(4, 10));
  // The union hull [5,10] differs from wmax_k of the block matrix: the
  // rank-2 range of a block diagonal is not the hull of the block ranges.
  Interval hull = max_convex_hull(IntervalSet({wmax_k(d, 2), wmax_k(c, 2)}));
  CHECK(hull == Interval::closed(5, 10));
  CHECK(wmax_k(a, 2) != hull);

  CHECK(wmax_k(a, 1) == wmax(a));
  // k = n collapses to the max trace.
  CHECK(wmax_k(NonnegMatrix::diagonal(NonnegVector{2, 4, 5}), 3) == Interval::singleton(5));
  CHECK_THROWS_AS(wmax_k(d, 0), std::invalid_argument);
  CHECK_THROWS_AS(wmax_k(d, 4), std::invalid_argument);
}

TEST_CASE("achievable_diag_set case analysis") {
  CHECK(achievable_diag_set(kTwoByTwo, {0, 1}) == Interval::closed(1, 20));
  CHECK(achievable_diag_set(kTwoByTwo, {1}) == Interval::singleton(1));
  NonnegMatrix zd{{0, 5}, {5, 5}};
  CHECK(achievable_diag_set(zd, {0, 1}) == Interval::half_open_below(0, 5));
  CHECK(achievable_diag_set(zd, {0}) == Interval::singleton(0));
  CHECK_THROWS_AS(achievable_diag_set(kTwoByTwo, {}), std::invalid_argument);
}

TEST_CASE("lambda_k reproduces the worked block examples") {
  NonnegMatrix b = block_diag({NonnegMatrix::diagonal(NonnegVector{5, 8}),
                               NonnegMatrix::diagonal(NonnegVector{10, 12})});
  CHECK(lambda_k(b, 2) == set_of(Interval::closed(8, 10)));

  NonnegMatrix c = block_diag({kTwoByTwo, NonnegMatrix{{2, 6}, {5, 3}}});
  CHECK(lambda_k(c, 2) == set_of(Interval::closed(2, 6)));
  CHECK(lambda_k(c, 3).empty());
  CHECK(lambda_k(c, 4).empty());

  CHECK(lambda_k(kTwoByTwo, 1) == set_of(wmax(kTwoByTwo)));
  CHECK(lambda_k(kTwoByTwo, 2).empty());
}

TEST_CASE("lambda_k on the banded toeplitz instances") {
  NonnegMatrix a = build_banded_toeplitz(NonnegVector{2, 5, 3, 4, 2}, 4);
  CHECK(lambda_k(a, 1) == set_of(Interval::closed(3, 5)));
  CHECK(lambda_k(a, 2) == set_of(Interval::singleton(3)));
  CHECK(lambda_k(a, 3).empty());
  CHECK(lambda_k(a, 4).empty());

  NonnegMatrix b = build_banded_toeplitz(NonnegVector{2, 6, 8, 3, 4, 2, 7}, 5);
  CHECK(lambda_k(b, 1) == set_of(Interval::closed(3, 8)));
  CHECK(lambda_k(b, 2) == set_of(Interval::singleton(3)));
  for (std::size_t k = 3; k <= 5; ++k) CHECK(lambda_k(b, k).empty());

  NonnegMatrix t6 = build_banded_toeplitz(NonnegVector{1, 9, 8, 2, 4, 7, 6, 3, 5}, 6);
  CHECK(lambda_k(t6, 1) == set_of(Interval::closed(4, 9)));
  CHECK(lambda_k(t6, 2) == set_of(Interval::singleton(4)));
  for (std::size_t k = 3; k <= 6; ++k) CHECK(lambda_k(t6, k).empty());
}

TEST_CASE("lambda_k full rank detects scalar matrices") {
  NonnegMatrix alpha_i = scale(3.25, NonnegMatrix::identity(4));
  CHECK(lambda_k(alpha_i, 4) == set_of(Interval::singleton(3.25)));
  CHECK(lambda_k(kTwoByTwo, 2).empty());
}

TEST_CASE("lambda_k refuses oversized exact instances") {
  NonnegMatrix big(17, 17);
  CHECK_THROWS_AS(lambda_k(big, 1), limit_exceeded);
  CHECK_THROWS_AS(lambda_k(NonnegMatrix::identity(4), 2, 1), limit_exceeded);
}

TEST_CASE("witness roundtrip on the diagonal example") {
  NonnegMatrix a = NonnegMatrix::diagonal(NonnegVector{5, 8, 10, 12});
  CHECK(lambda_k(a, 2) == set_of(Interval::closed(8, 10)));

  for (double lam : {8.0, 9.0, 10.0}) {
    auto x = witness_isometry(a, 2, lam);
    REQUIRE(x.has_value());
    CHECK(static_cast<bool>(validate_isometry(*x)));
    NonnegMatrix xm = x->to_matrix();
    NonnegMatrix d = otimes(otimes(transpose(xm), a), xm);
    CHECK(d == scale(lam, NonnegMatrix::identity(2)));
  }
  // Values outside the range never get a witness.
  CHECK_FALSE(witness_isometry(a, 2, 7.0).has_value());
  CHECK_FALSE(witness_isometry(a, 2, 10.5).has_value());
}

TEST_CASE("witness absence on rounding-grid gaps") {
  // diag(9,0), k=1: the only nontrivial value map is s -> (s*9)*s, whose
  // image under double rounding skips some representable points of [0,9].
  // 2.25 = 9/4 has the exact preimage 1/2; 4.5 needs s = sqrt(1/2) and no
  // double hits it exactly. The solver reports what the grid supports
  // rather than inventing an approximate witness.
  NonnegMatrix a = NonnegMatrix::diagonal(NonnegVector{9, 0});
  CHECK(lambda_k(a, 1) == set_of(Interval::closed(0, 9)));
  REQUIRE(witness_isometry(a, 1, 2.25).has_value());
  CHECK(witness_isometry(a, 1, 2.25)->to_matrix()(0, 0) == 0.5);
  CHECK_FALSE(witness_isometry(a, 1, 4.5).has_value());

  auto col = solve_block_column(a, {0, 1}, 2.25);
  REQUIRE(col.has_value());
  CHECK(column_diag_value(a, {0, 1}, *col) == 2.25);
  CHECK_FALSE(solve_block_column(a, {0, 1}, 4.5).has_value());
}

TEST_CASE("witness picks the minimal diagonal anchor for k = 1") {
  auto x = witness_isometry(kTwoByTwo, 1, 1.0);
  REQUIRE(x.has_value());
  NonnegMatrix xm = x->to_matrix();
  CHECK(xm(1, 0) == 1.0);  // min diagonal sits at index 1
  NonnegMatrix d = otimes(otimes(transpose(xm), kTwoByTwo), xm);
  CHECK(d == NonnegMatrix{{1.0}});
}

TEST_CASE("lambda_radius") {
  NonnegMatrix a = NonnegMatrix::diagonal(NonnegVector{5, 8, 10, 12});
  CHECK(lambda_radius(a, 2) == RadiusValue{10.0});
  NonnegMatrix alpha_i = scale(1.75, NonnegMatrix::identity(3));
  for (std::size_t k = 1; k <= 3; ++k) CHECK(lambda_radius(alpha_i, k) == RadiusValue{1.75});
  NonnegMatrix t4 = build_banded_toeplitz(NonnegVector{2, 5, 3, 4, 2}, 4);
  CHECK(lambda_radius(t4, 3).is_bottom());
}

TEST_CASE("rank one sum bound") {
  auto e1 = NonnegVector{1.0, 0.0};
  auto b = rank_one_sum_bound({{e1, e1}}, 1);
  CHECK(b.cover == set_of(Interval::closed(0, 1)));
  CHECK(b.radius_bound == 1.0);

  auto ones = NonnegVector{1.0, 1.0};
  auto u = rank_one_sum_bound({{ones, ones}}, 1);
  CHECK(u.cover == set_of(Interval::singleton(1.0)));
  CHECK(u.radius_bound == 1.0);

  auto c = rank_one_sum_bound({{NonnegVector{1.0, 0.0}, NonnegVector{0.0, 1.0}}}, 1);
  CHECK(c.cover == set_of(Interval::closed(0, 1)));
  CHECK(c.radius_bound == 1.0);

  CHECK_THROWS_AS(rank_one_sum_bound({{e1, NonnegVector{1.0, 0.0, 0.0}}}, 1),
                  std::invalid_argument);
  // The cover contains the rank-k range of the assembled sum.
  NonnegMatrix z = oplus(outer_product(e1, e1),
                         outer_product(NonnegVector{0.0, 1.0}, NonnegVector{1.0, 0.0}));
  auto full = rank_one_sum_bound({{e1, e1}, {NonnegVector{0.0, 1.0}, NonnegVector{1.0, 0.0}}}, 1);
  IntervalSet range = lambda_k(z, 1);
  for (const Interval& part : range.parts()) {
    CHECK(full.cover.contains(part.lo));
    CHECK(full.cover.contains(part.hi));
  }
}
