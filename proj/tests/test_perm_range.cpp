#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "maxalg/errors.hpp"
#include "maxalg/matrix.hpp"
#include "maxalg/perm_range.hpp"

using namespace maxalg;

namespace {

PointSet scalar_set(std::vector<double> vals) {
  std::vector<std::vector<double>> pts;
  for (double v : vals) pts.push_back({v});
  return make_point_set(std::move(pts));
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("point sets deduplicate and sort") {
  PointSet s = make_point_set({{2, 1}, {1, 3}, {2, 1}, {1, 2}});
  REQUIRE(s.cardinality() == 3);
  CHECK(s.points[0] == std::vector<double>{1, 2});
  CHECK(s.points[2] == std::vector<double>{2, 1});
  CHECK(s.contains({1, 3}));
  CHECK_FALSE(s.contains({3, 1}));
  CHECK(make_point_set({{1, 2}}).subset_of(s));
  CHECK_FALSE(s.subset_of(make_point_set({{1, 2}})));
  CHECK(scalar_set({4, 2, 4}).scalars() == std::vector<double>{2, 4});
  CHECK_THROWS_AS(s.scalars(), std::invalid_argument);
}

TEST_CASE("weighted diagonal range, pair of 2x2 matrices") {
  NonnegMatrix a1{{5, 2}, {7, 4}};
  NonnegMatrix a2{{3, 4}, {2, 8}};
  NonnegVector c{2, 8};

  CHECK(c_range(a1, c) == scalar_set({32, 40}));
  CHECK(c_range(a2, c) == scalar_set({24, 64}));
  CHECK(joint_c_range(MatrixTuple({a1, a2}), c) == make_point_set({{32, 64}, {40, 24}}));
  CHECK(c_range_hull(a1, c) == Interval::closed(32, 40));
  CHECK(c_range_hull(a2, c) == Interval::closed(24, 64));
}

TEST_CASE("weighted diagonal range, second weight vector") {
  NonnegMatrix a1{{5, 2}, {7, 4}};
  NonnegMatrix a2{{9, 4}, {8, 7}};
  NonnegVector c{4, 3};

  CHECK(c_range(a1, c) == scalar_set({20, 16}));
  CHECK(c_range(a2, c) == scalar_set({36, 28}));
  CHECK(joint_c_range(MatrixTuple({a1, a2}), c) == make_point_set({{20, 36}, {16, 28}}));
}

TEST_CASE("weighted diagonal range, triple of 3x3 matrices") {
  NonnegMatrix a1{{2, 3, 4}, {5, 7, 1}, {2, 6, 8}};
  NonnegMatrix a2{{3, 4, 5}, {0, 5, 2}, {1, 7, 2}};
  NonnegMatrix a3{{4, 3, 1}, {5, 6, 2}, {3, 4, 6}};
  NonnegVector c{3, 4, 5};

  CHECK(c_range(a1, c) == scalar_set({40, 35, 28, 32}));
  CHECK(c_range(a2, c) == scalar_set({20, 25, 15}));
  CHECK(c_range(a3, c) == scalar_set({30, 24}));
  PointSet joint = joint_c_range(MatrixTuple({a1, a2, a3}), c);
  CHECK(joint ==
        make_point_set({{40, 20, 30}, {35, 25, 30}, {40, 15, 30}, {28, 20, 24}, {32, 15, 24}}));
  // Distinct tuples never exceed n! and each coordinate projection is
  // covered by the per-matrix scalar range.
  CHECK(joint.cardinality() <= factorial(3));
  for (const auto& p : joint.points) CHECK(c_range(a1, c).contains({p[0]}));
}

TEST_CASE("matrix-weighted range with diagonal weights matches the vector form") {
  NonnegMatrix a{{2, 3, 4}, {5, 7, 1}, {2, 6, 8}};
  NonnegVector c{3, 4, 5};
  CHECK(C_range(a, NonnegMatrix::diagonal(c)) == c_range(a, c));

  MatrixTuple t({a, NonnegMatrix{{3, 4, 5}, {0, 5, 2}, {1, 7, 2}}});
  CHECK(joint_C_range(t, NonnegMatrix::diagonal(c)) == joint_c_range(t, c));
}

TEST_CASE("matrix-weighted range with off-diagonal weights") {
  NonnegMatrix a{{5, 2}, {7, 4}};
  NonnegMatrix c(2, 2);
  c.set(0, 1, 1.0);  // picks out entry a(sigma(1), sigma(0))
  CHECK(C_range(a, c) == scalar_set({7, 2}));

  // Identity weights reduce to the plain diagonal maximum, constant over S_n.
  CHECK(C_range(a, NonnegMatrix::identity(2)) == scalar_set({5}));
}

TEST_CASE("permutation similarity invariance of the weighted range") {
  NonnegMatrix a{{2, 3, 4}, {5, 7, 1}, {2, 6, 8}};
  NonnegVector c{3, 4, 5};
  Permutation rho({2, 0, 1});
  CHECK(c_range(conjugate_by_permutation(a, rho), c) == c_range(a, c));
}

TEST_CASE("input validation") {
  NonnegMatrix a{{5, 2}, {7, 4}};
  CHECK_THROWS_AS(c_range(a, NonnegVector{1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(C_range(a, NonnegMatrix::identity(3)), std::invalid_argument);
  NonnegMatrix big(kMaxPermDim + 1, kMaxPermDim + 1);
  NonnegVector ones(std::vector<double>(kMaxPermDim + 1, 1.0));
  CHECK_THROWS_AS(c_range(big, ones), limit_exceeded);
}
