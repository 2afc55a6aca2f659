#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "maxalg/errors.hpp"
#include "maxalg/isometry.hpp"
#include "maxalg/matrix.hpp"

using namespace maxalg;

TEST_CASE("validator accepts exactly the max isometries") {
  // Disjoint supports, entries in (0,1], each column attains 1.
  NonnegMatrix good{{1.0, 0.0}, {0.0, 0.25}, {0.0, 1.0}};
  CHECK(static_cast<bool>(validate_isometry(good)));

  NonnegMatrix overlap{{1.0, 0.5}, {0.0, 1.0}};
  CHECK_FALSE(static_cast<bool>(validate_isometry(overlap)));

  NonnegMatrix no_unit{{0.5, 0.0}, {0.0, 1.0}};
  CHECK_FALSE(static_cast<bool>(validate_isometry(no_unit)));

  NonnegMatrix too_big{{1.5, 0.0}, {0.0, 1.0}};
  CHECK_FALSE(static_cast<bool>(validate_isometry(too_big)));

  NonnegMatrix empty_col(2, 2);
  empty_col.set(0, 0, 1.0);
  CHECK_FALSE(static_cast<bool>(validate_isometry(empty_col)));
}

TEST_CASE("validator equivalence with the defining identity") {
  // X^t otimes X = I_k exactly characterizes validity.
  NonnegMatrix x{{1.0, 0.0}, {0.25, 0.0}, {0.0, 1.0}};
  NonnegMatrix gram = otimes(transpose(x), x);
  CHECK(gram == NonnegMatrix::identity(2));
  CHECK(static_cast<bool>(validate_isometry(x)));

  NonnegMatrix y{{1.0, 0.0}, {0.25, 0.5}, {0.0, 1.0}};
  CHECK(otimes(transpose(y), y) != NonnegMatrix::identity(2));
  CHECK_FALSE(static_cast<bool>(validate_isometry(y)));
}

TEST_CASE("square max isometries are permutation matrices") {
  NonnegMatrix p{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  CHECK(static_cast<bool>(validate_isometry(p)));
  // A square isometry with a non-unit positive entry fails: some column
  // would have to share support or miss its unit.
  NonnegMatrix q{{0.5, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  CHECK_FALSE(static_cast<bool>(validate_isometry(q)));
}

TEST_CASE("support pattern canonicalization and indices") {
  SupportPattern p(4, {0b1100u, 0b0001u});
  REQUIRE(p.k() == 2);
  // Blocks are ordered by lowest element.
  CHECK(p.blocks[0] == 0b0001u);
  CHECK(p.blocks[1] == 0b1100u);
  CHECK(p.block_indices(1) == std::vector<std::size_t>{2, 3});
  CHECK_THROWS_AS(SupportPattern(2, {0b01u, 0b01u}), std::invalid_argument);
  CHECK_THROWS_AS(SupportPattern(2, {0b00u}), std::invalid_argument);
}

TEST_CASE("adjacency graph reads the symmetrized zero pattern") {
  NonnegMatrix a{{1, 0, 3}, {0, 2, 0}, {0, 0, 1}};
  AdjacencyGraph g(a);
  CHECK(g.edge(0, 2));  // a_02 = 3
  CHECK(g.edge(2, 0));  // symmetrized
  CHECK_FALSE(g.edge(0, 1));
  CHECK_FALSE(g.edge(1, 2));
  CHECK(blocks_orthogonal(g, 0b010u, 0b100u));
  CHECK_FALSE(blocks_orthogonal(g, 0b001u, 0b100u));
}

TEST_CASE("family enumeration on an edgeless graph counts set partitions into k parts") {
  // No orthogonality constraints: families = unordered partitions of
  // subsets. For n = 3, k = 2 the families are {1}{2}, {1}{3}, {2}{3},
  // {1,2}{3}, {1,3}{2}, {1}{2,3}: six.
  AdjacencyGraph g = AdjacencyGraph::edgeless(3);
  std::set<std::vector<std::uint32_t>> seen;
  for_each_support_family(g, 2, 1000, [&](const std::vector<std::uint32_t>& blocks) {
    CHECK(blocks.size() == 2);
    seen.insert(blocks);
  });
  CHECK(seen.size() == 6);
}

TEST_CASE("family enumeration respects orthogonality") {
  // Path 0-1-2: only {0},{2} survives for k = 2.
  NonnegMatrix a{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  auto fams = enumerate_support_families(a, 2, 1000);
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].blocks == std::vector<std::uint32_t>{0b001u, 0b100u});

  // Complete zero pattern: no pair of disjoint orthogonal blocks.
  NonnegMatrix full{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
  CHECK(enumerate_support_families(full, 2, 1000).empty());
  // k = 1 always has every nonempty subset.
  CHECK(enumerate_support_families(full, 1, 1000).size() == 7);
}

TEST_CASE("enumeration limit throws") {
  AdjacencyGraph g = AdjacencyGraph::edgeless(8);
  CHECK_THROWS_AS(
      for_each_support_family(g, 2, 3, [](const std::vector<std::uint32_t>&) {}),
      limit_exceeded);
}

TEST_CASE("sampled isometries validate and are deterministic") {
  SupportPattern p(5, {0b00011u, 0b11000u});
  MaxIsometry a = sample_isometry(p, 42);
  MaxIsometry b = sample_isometry(p, 42);
  MaxIsometry c = sample_isometry(p, 43);
  CHECK(static_cast<bool>(validate_isometry(a)));
  CHECK(a.to_matrix() == b.to_matrix());
  CHECK(a.to_matrix() != c.to_matrix());
  CHECK(a.pattern == p);
}

TEST_CASE("isometry to_matrix places block values at ascending indices") {
  SupportPattern p(3, {0b101u});
  MaxIsometry x;
  x.pattern = p;
  x.values = {{0.5, 1.0}};
  NonnegMatrix m = x.to_matrix();
  CHECK(m(0, 0) == 0.5);
  CHECK(m(1, 0) == 0.0);
  CHECK(m(2, 0) == 1.0);
}
