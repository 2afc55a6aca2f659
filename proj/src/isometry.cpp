#include "maxalg/isometry.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "maxalg/errors.hpp"

namespace maxalg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SupportPattern::SupportPattern(std::size_t n_, std::vector<std::uint32_t> blocks_)
    : n(n_), blocks(std::move(blocks_)) {
  if (n > 32) throw std::invalid_argument("support pattern: n too large");
  std::uint32_t seen = 0;
  const std::uint32_t universe = n == 32 ? ~0u : ((1u << n) - 1u);
  for (std::uint32_t b : blocks) {
    if (b == 0) throw std::invalid_argument("support pattern: empty block");
    if (b & ~universe) throw std::invalid_argument("support pattern: index out of range");
    if (b & seen) throw std::invalid_argument("support pattern: blocks overlap");
    seen |= b;
  }
  std::sort(blocks.begin(), blocks.end(),
            [](std::uint32_t a, std::uint32_t b) { return std::countr_zero(a) < std::countr_zero(b); });
}

std::vector<std::size_t> SupportPattern::block_indices(std::size_t b) const {
  std::vector<std::size_t> idx;
  for (std::uint32_t m = blocks[b]; m; m &= m - 1) idx.push_back(std::countr_zero(m));
  return idx;
}

NonnegMatrix MaxIsometry::to_matrix() const {
  NonnegMatrix x(pattern.n, pattern.k());
  for (std::size_t b = 0; b < pattern.k(); ++b) {
    auto idx = pattern.block_indices(b);
    for (std::size_t t = 0; t < idx.size(); ++t) x.set(idx[t], b, values[b][t]);
  }
  return x;
}

IsometryCheck validate_isometry(const NonnegMatrix& x) {
  const std::size_t n = x.rows(), k = x.cols();
  if (k == 0 || n == 0) return {false, "no columns"};
  std::vector<bool> used(n, false);
  for (std::size_t c = 0; c < k; ++c) {
    double colmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double v = x(i, c);
      if (v > 1.0)
        return {false, "entry (" + std::to_string(i) + "," + std::to_string(c) + ") exceeds 1"};
      if (v > 0.0) {
        if (used[i])
          return {false, "row " + std::to_string(i) + " is shared by two column supports"};
        used[i] = true;
      }
      colmax = std::max(colmax, v);
    }
    if (colmax != 1.0)
      return {false, "column " + std::to_string(c) + " does not attain 1"};
  }
  return {};
}

IsometryCheck validate_isometry(const MaxIsometry& x) {
  if (x.values.size() != x.pattern.k()) return {false, "value rows do not match pattern"};
  for (std::size_t b = 0; b < x.pattern.k(); ++b) {
    if (x.values[b].size() != static_cast<std::size_t>(std::popcount(x.pattern.blocks[b])))
      return {false, "block " + std::to_string(b) + " value count mismatch"};
    for (double v : x.values[b])
      if (!(v > 0.0)) return {false, "block " + std::to_string(b) + " has a non-positive entry"};
  }
  return validate_isometry(x.to_matrix());
}

AdjacencyGraph::AdjacencyGraph(const NonnegMatrix& a) {
  if (!a.square()) throw std::invalid_argument("adjacency graph: matrix not square");
  const std::size_t n = a.rows();
  if (n > 32) throw std::invalid_argument("adjacency graph: n too large");
  adj_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (a(i, j) != 0.0 || a(j, i) != 0.0)) adj_[i] |= 1u << j;
}

AdjacencyGraph AdjacencyGraph::edgeless(std::size_t n) {
  if (n > 32) throw std::invalid_argument("adjacency graph: n too large");
  AdjacencyGraph g;
  g.adj_.assign(n, 0);
  return g;
}

std::uint32_t AdjacencyGraph::neighbors_of(std::uint32_t mask) const {
  std::uint32_t r = 0;
  for (std::uint32_t m = mask; m; m &= m - 1) r |= adj_[std::countr_zero(m)];
  return r & ~mask;
}

bool blocks_orthogonal(const AdjacencyGraph& g, std::uint32_t s, std::uint32_t t) {
  return (g.neighbors_of(s) & t) == 0;
}

namespace {

struct FamilyEnum {
  const AdjacencyGraph& g;
  std::size_t k;
  std::uint64_t limit;
  const std::function<void(const std::vector<std::uint32_t>&)>& visit;
  std::vector<std::uint32_t> current;
  std::uint64_t count = 0;

  // Picks block `level` with minimum element above all previous block minima;
  // `free` excludes used indices and neighbors of used blocks.
  void recurse(std::size_t level, std::uint32_t free) {
    if (level == k) {
      if (++count > limit)
        throw limit_exceeded("support family enumeration exceeded limit of " +
                             std::to_string(limit));
      visit(current);
      return;
    }
    if (static_cast<std::size_t>(std::popcount(free)) < k - level) return;
    for (std::uint32_t cand = free; cand;) {
      std::size_t lowest = std::countr_zero(cand);
      cand &= cand - 1;
      // Remaining choices for this block: the lowest element plus any subset
      // of higher free indices.
      std::uint32_t high = free & ~((2u << lowest) - 1u);
      std::uint32_t base = 1u << lowest;
      std::uint32_t sub = 0;
      for (;;) {
        std::uint32_t block = base | sub;
        current.push_back(block);
        std::uint32_t next_free = free & ~block & ~g.neighbors_of(block) & ~(base - 1u) & ~base;
        recurse(level + 1, next_free);
        current.pop_back();
        if (sub == high) break;
        sub = (sub - high) & high;  // next subset of high
      }
    }
  }
};

}  // namespace

void for_each_support_family(const AdjacencyGraph& g, std::size_t k, std::uint64_t limit,
                             const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  if (k == 0 || k > g.size()) throw std::invalid_argument("family enumeration: k out of range");
  FamilyEnum e{g, k, limit, visit, {}, 0};
  const std::uint32_t all = g.size() == 32 ? ~0u : ((1u << g.size()) - 1u);
  e.recurse(0, all);
}

std::vector<SupportPattern> enumerate_support_families(const NonnegMatrix& a, std::size_t k,
                                                       std::uint64_t limit) {
  AdjacencyGraph g(a);
  std::vector<SupportPattern> out;
  for_each_support_family(g, k, limit, [&](const std::vector<std::uint32_t>& blocks) {
    out.push_back(SupportPattern(a.rows(), blocks));
  });
  return out;
}

MaxIsometry sample_isometry(const SupportPattern& pattern, std::uint64_t seed) {
  MaxIsometry x;
  x.pattern = pattern;
  x.values.resize(pattern.k());
  std::uint64_t state = seed;
  auto draw = [&state] { return state = splitmix64(state); };
  for (std::size_t b = 0; b < pattern.k(); ++b) {
    const std::size_t sz = static_cast<std::size_t>(std::popcount(pattern.blocks[b]));
    std::size_t unit = static_cast<std::size_t>(draw() % sz);
    x.values[b].resize(sz);
    for (std::size_t t = 0; t < sz; ++t) {
      if (t == unit) {
        x.values[b][t] = 1.0;
      } else {
        // (0,1]: (r>>11)+1 over 2^53.
        x.values[b][t] = static_cast<double>((draw() >> 11) + 1) * 0x1.0p-53;
      }
    }
  }
  return x;
}

}  // namespace maxalg
