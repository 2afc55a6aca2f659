#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "maxalg/errors.hpp"
#include "maxalg/matrix.hpp"
#include "maxalg/oracle.hpp"
#include "maxalg/single_range.hpp"

using namespace maxalg;

TEST_CASE("rng draws are deterministic and in range") {
  Rng a(7), b(7), c(8);
  for (int i = 0; i < 200; ++i) {
    CHECK(a.next() == b.next());
    double u = c.unit_open();
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
    double v = c.unit_closed_open();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
    CHECK(c.index(13) < 13);
  }
  CHECK(mix_seed(0, 1) != mix_seed(0, 2));
  CHECK(mix_seed(0, 1) == mix_seed(0, 1));
}

TEST_CASE("dyadic generators produce quarter-grid entries") {
  Rng rng(3);
  NonnegMatrix m = random_dyadic_matrix(rng, 3, 4, 0.0);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 4);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      double e = m(i, j);
      CHECK(e > 0.0);
      CHECK(e <= 16.0);
      CHECK(e * 4.0 == std::floor(e * 4.0));
    }
  NonnegMatrix z = random_dyadic_matrix(rng, 2, 2, 1.0);
  CHECK(z == NonnegMatrix(2, 2));

  Rng r1(5), r2(5);
  CHECK(random_permutation(r1, 6) == random_permutation(r2, 6));
}

TEST_CASE("sampled trace hull matches the closed form on worked examples") {
  NonnegMatrix d{{3, 2, 4}, {5, 7, 8}, {2, 3, 6}};
  NonnegMatrix c{{5, 3, 10}, {2, 4, 9}, {3, 8, 7}};
  CHECK(oracle_wmax_k(d, 2, 300, 1) == wmax_k(d, 2));
  CHECK(oracle_wmax_k(c, 2, 300, 1) == wmax_k(c, 2));
  NonnegMatrix a = block_diag({d, c});
  for (std::size_t k = 1; k <= 6; ++k) CHECK(oracle_wmax_k(a, k, 200, 2) == wmax_k(a, k));
  CHECK_THROWS_AS(oracle_wmax_k(d, 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(oracle_wmax_k(d, 4, 10), std::invalid_argument);
}

TEST_CASE("membership oracle on the block diagonal example") {
  NonnegMatrix a = block_diag({NonnegMatrix::diagonal(NonnegVector{5, 8}),
                               NonnegMatrix::diagonal(NonnegVector{10, 12})});
  CHECK(oracle_lambda_membership(a, 2, 9.0, 2000) == Membership::member);
  CHECK(oracle_lambda_membership(a, 2, 8.0, 2000) == Membership::member);
  CHECK(oracle_lambda_membership(a, 2, 10.0, 2000) == Membership::member);
  CHECK(oracle_lambda_membership(a, 2, 11.0, 200) == Membership::non_member_proved);
  CHECK(oracle_lambda_membership(a, 2, 7.5, 200) == Membership::non_member_proved);
}

TEST_CASE("membership oracle distinguishes proof from failed search") {
  NonnegMatrix a = NonnegMatrix::diagonal(NonnegVector{9, 0});
  CHECK(oracle_lambda_membership(a, 1, 2.25, 200) == Membership::member);
  CHECK(oracle_lambda_membership(a, 1, 10.0, 200) == Membership::non_member_proved);
  // 4.5 lies in the real-arithmetic range but the squaring map never hits it
  // in doubles, so the constructive search comes back empty-handed without a
  // disproof.
  CHECK(oracle_lambda_membership(a, 1, 4.5, 200) == Membership::unknown);
}

TEST_CASE("achievable-value grid sampling") {
  NonnegMatrix a{{20, 9}, {7, 1}};
  auto vals = oracle_achievable_grid(a, {0, 1}, 200);
  REQUIRE_FALSE(vals.empty());
  CHECK(*std::max_element(vals.begin(), vals.end()) == 20.0);
  CHECK(*std::min_element(vals.begin(), vals.end()) == 1.0);

  NonnegMatrix h{{0, 5}, {5, 5}};
  auto hv = oracle_achievable_grid(h, {0, 1}, 200);
  CHECK(*std::max_element(hv.begin(), hv.end()) == 5.0);
  for (double v : hv) CHECK(v > 0.0);

  CHECK_THROWS_AS(oracle_achievable_grid(a, {}, 200), std::invalid_argument);
  CHECK_THROWS_AS(oracle_achievable_grid(NonnegMatrix::identity(4), {0, 1, 2, 3}, 200),
                  std::invalid_argument);
  CHECK_THROWS_AS(oracle_achievable_grid(a, {0}, 1), std::invalid_argument);
}

TEST_CASE("claim failures are counted fully and stored capped") {
  Claim fake{"test.fake", [](ClaimContext& ctx) {
               for (int t = 0; t < ctx.trials; ++t) ctx.check(false, "in", "exp", "obs");
             }};
  OracleReport r = run_claim(fake, 5, 9);
  CHECK_FALSE(r.passed());
  CHECK(r.failure_count == 9);
  CHECK(r.failures.size() == 5);
  CHECK(r.to_line() == "fail test.fake trials=9 seed=5 failures=9 first=in");

  Claim good{"test.good", [](ClaimContext&) {}};
  CHECK(run_claim(good, 0, 3).to_line() == "pass test.good trials=3 seed=0 failures=0");
  CHECK_THROWS_AS(run_claim(good, 0, 0), std::invalid_argument);
}

TEST_CASE("claim registry is populated with unique ids") {
  const auto& claims = claim_registry();
  CHECK(claims.size() >= 40);
  std::set<std::string> ids;
  for (const auto& c : claims) {
    CHECK_FALSE(c.id.empty());
    CHECK(ids.insert(c.id).second);
  }
}

TEST_CASE("claim suite passes and reruns bit for bit") {
  auto first = run_claim_suite(0, 2);
  auto second = run_claim_suite(0, 2);
  REQUIRE(first.size() == second.size());
  CHECK(first.size() == claim_registry().size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].passed());
    CHECK(first[i].to_line() == second[i].to_line());
  }
  CHECK_THROWS_AS(run_claim_suite(0, 0), std::invalid_argument);
}
