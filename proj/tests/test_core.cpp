#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "maxalg/matrix.hpp"

using namespace maxalg;

TEST_CASE("matrix construction validates entries") {
  CHECK_THROWS_AS(NonnegMatrix({{1.0, -2.0}, {0.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(NonnegMatrix({{std::nan("")}}), std::invalid_argument);
  CHECK_THROWS_AS(NonnegMatrix({{1.0, 2.0}, {3.0}}), std::invalid_argument);
  NonnegMatrix a{{0.0, 2.5}, {3.0, 1.0}};
  CHECK(a.rows() == 2);
  CHECK(a(0, 1) == 2.5);
}

TEST_CASE("otimes is the max-times product") {
  NonnegMatrix a{{2, 3}, {0, 1}};
  NonnegMatrix b{{1, 0.5}, {4, 2}};
  NonnegMatrix p = otimes(a, b);
  // (0,0): max(2*1, 3*4) = 12, (0,1): max(2*0.5, 3*2) = 6
  CHECK(p(0, 0) == 12.0);
  CHECK(p(0, 1) == 6.0);
  CHECK(p(1, 0) == 4.0);
  CHECK(p(1, 1) == 2.0);

  NonnegMatrix id = NonnegMatrix::identity(2);
  CHECK(otimes(a, id) == a);
  CHECK(otimes(id, a) == a);
}

TEST_CASE("otimes_power composes") {
  NonnegMatrix a{{0, 2}, {3, 0}};
  CHECK(otimes_power(a, 1) == a);
  CHECK(otimes_power(a, 2) == otimes(a, a));
  CHECK(otimes_power(a, 3) == otimes(a, otimes(a, a)));
}

TEST_CASE("trace and norms") {
  NonnegMatrix a{{1, 9}, {2, 4}};
  CHECK(max_trace(a) == 4.0);
  CHECK(sup_norm(a) == 9.0);
  CHECK(sup_norm(NonnegVector{0.0, 2.0, 1.5}) == 2.0);
}

TEST_CASE("permutation matrix maps e_i to e_sigma(i)") {
  Permutation s({1, 2, 0});
  NonnegMatrix u = s.to_matrix();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(u(i, j) == (s(j) == i ? 1.0 : 0.0));
  CHECK(s.inverse()(1) == 0);
  Permutation composed = Permutation::identity(3);
  CHECK(composed.to_matrix() == NonnegMatrix::identity(3));
}

TEST_CASE("conjugation by permutation relabels indices") {
  NonnegMatrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  Permutation s({2, 0, 1});
  NonnegMatrix c = conjugate_by_permutation(a, s);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(c(i, j) == a(s(i), s(j)));
  // Same thing through the product definition.
  NonnegMatrix u = s.to_matrix();
  CHECK(c == otimes(otimes(transpose(u), a), u));
}

TEST_CASE("outer product and block diagonal") {
  NonnegMatrix r = outer_product(NonnegVector{1.0, 0.0}, NonnegVector{0.0, 1.0});
  CHECK(r == NonnegMatrix{{0, 1}, {0, 0}});
  NonnegMatrix b = block_diag({NonnegMatrix{{1}}, NonnegMatrix{{2, 3}, {4, 5}}});
  CHECK(b.rows() == 3);
  CHECK(b(0, 0) == 1.0);
  CHECK(b(1, 2) == 3.0);
  CHECK(b(0, 1) == 0.0);
  CHECK(b(2, 0) == 0.0);
}

TEST_CASE("banded toeplitz builder matches the band layout") {
  // n = 4, bands a_2..a_-2 = 2,5,3,4,2 with zero corners.
  NonnegMatrix a = build_banded_toeplitz(NonnegVector{2, 5, 3, 4, 2}, 4);
  NonnegMatrix expect{{3, 4, 2, 0}, {5, 3, 4, 2}, {2, 5, 3, 4}, {0, 2, 5, 3}};
  CHECK(a == expect);
  CHECK_THROWS_AS(build_banded_toeplitz(NonnegVector{1, 2, 3}, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_banded_toeplitz(NonnegVector{1, 2}, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_banded_toeplitz(NonnegVector{0, 1, 1, 1, 1}, 4), std::invalid_argument);
}

TEST_CASE("max eigenvalue is the largest geometric cycle mean") {
  // Single 2-cycle 0->1->0 with weights 4 and 1: mean sqrt(4*1) = 2.
  NonnegMatrix a{{0, 4}, {1, 0}};
  CHECK(max_eigenvalue(a) == doctest::Approx(2.0).epsilon(1e-12));
  // Loops dominate: diag entry 5 is a cycle of length one.
  NonnegMatrix b{{5, 9}, {0, 3}};
  CHECK(max_eigenvalue(b) == doctest::Approx(5.0).epsilon(1e-12));
  // Nilpotent pattern: no cycle at all.
  NonnegMatrix n{{0, 7}, {0, 0}};
  CHECK(max_eigenvalue(n) == 0.0);
  // Two components with different means.
  NonnegMatrix c = block_diag({a, b});
  CHECK(max_eigenvalue(c) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("scale and oplus") {
  NonnegMatrix a{{1, 2}, {3, 4}};
  NonnegMatrix b{{4, 1}, {2, 8}};
  CHECK(oplus(a, b) == NonnegMatrix{{4, 2}, {3, 8}});
  CHECK(scale(0.5, a) == NonnegMatrix{{0.5, 1}, {1.5, 2}});
  CHECK_THROWS_AS(scale(-1.0, a), std::invalid_argument);
}
