#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "maxalg/matrix.hpp"

namespace maxalg {

/// Column supports of a max isometry: k nonempty, pairwise disjoint subsets
/// of {0..n-1} stored as bitmasks. Canonical order: ascending lowest element.
struct SupportPattern {
  std::size_t n = 0;
  std::vector<std::uint32_t> blocks;

  SupportPattern() = default;
  SupportPattern(std::size_t n, std::vector<std::uint32_t> blocks);  // canonicalizes

  std::size_t k() const { return blocks.size(); }
  std::vector<std::size_t> block_indices(std::size_t b) const;
  bool operator==(const SupportPattern&) const = default;
};

/// n x k nonnegative matrix X with X^t otimes X = I_k: columns have pairwise
/// disjoint supports, entries in (0,1] on the support, and each column
/// attains 1. values[b] holds the entries of block b in ascending index
/// order.
struct MaxIsometry {
  SupportPattern pattern;
  std::vector<std::vector<double>> values;

  NonnegMatrix to_matrix() const;
};

struct IsometryCheck {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Checks disjoint supports, entries within [0,1], and per-column max
/// exactly 1; these three conditions are equivalent to X^t otimes X = I_k.
IsometryCheck validate_isometry(const NonnegMatrix& x);
IsometryCheck validate_isometry(const MaxIsometry& x);

/// Symmetrized zero pattern of a square matrix: vertices 0..n-1 with an edge
/// {i,j}, i != j, whenever a_ij != 0 or a_ji != 0. Two index sets are
/// orthogonal when no edge joins them; rank-k range blocks must be pairwise
/// orthogonal.
class AdjacencyGraph {
 public:
  explicit AdjacencyGraph(const NonnegMatrix& a);
  static AdjacencyGraph edgeless(std::size_t n);

  std::size_t size() const { return adj_.size(); }
  bool edge(std::size_t i, std::size_t j) const { return (adj_[i] >> j) & 1u; }
  std::uint32_t neighbors(std::size_t i) const { return adj_[i]; }
  std::uint32_t neighbors_of(std::uint32_t mask) const;

 private:
  AdjacencyGraph() = default;
  std::vector<std::uint32_t> adj_;
};

bool blocks_orthogonal(const AdjacencyGraph& g, std::uint32_t s, std::uint32_t t);

/// Visits every canonical family of k nonempty, pairwise disjoint, pairwise
/// orthogonal blocks. Throws limit_exceeded after `limit` families.
void for_each_support_family(const AdjacencyGraph& g, std::size_t k, std::uint64_t limit,
                             const std::function<void(const std::vector<std::uint32_t>&)>& visit);

/// Collected version of the above, driven by the zero pattern of A.
std::vector<SupportPattern> enumerate_support_families(const NonnegMatrix& a, std::size_t k,
                                                       std::uint64_t limit);

/// Deterministic random isometry on a fixed pattern: per block one uniformly
/// chosen index is set to 1, the rest are uniform in (0,1].
MaxIsometry sample_isometry(const SupportPattern& pattern, std::uint64_t seed);

}  // namespace maxalg
