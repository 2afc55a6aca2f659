#include "maxalg/single_range.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "maxalg/errors.hpp"

namespace maxalg {

namespace {

void require_square(const NonnegMatrix& a, const char* who) {
  if (!a.square() || a.rows() == 0)
    throw std::invalid_argument(std::string(who) + ": matrix must be square and nonempty");
}

void require_exact_dim(const NonnegMatrix& a, const char* who) {
  if (a.rows() > kMaxExactDim)
    throw limit_exceeded(std::string(who) + ": exact mode refuses n > " +
                         std::to_string(kMaxExactDim));
}

Interval achievable_of_mask(const NonnegMatrix& a, std::uint32_t mask) {
  double m = std::numeric_limits<double>::infinity();
  double big = 0.0;
  for (std::uint32_t mi = mask; mi; mi &= mi - 1) {
    std::size_t i = std::countr_zero(mi);
    m = std::min(m, a(i, i));
    for (std::uint32_t mj = mask; mj; mj &= mj - 1) {
      std::size_t j = std::countr_zero(mj);
      big = std::max(big, a(i, j));
    }
  }
  if (big == 0.0) return Interval::singleton(0.0);
  if (m == 0.0) return Interval::half_open_below(0.0, big);
  return Interval::closed(m, big);
}

}  // namespace

Interval wmax(const NonnegMatrix& a) {
  require_square(a, "wmax");
  double lo = a(0, 0);
  for (std::size_t i = 1; i < a.rows(); ++i) lo = std::min(lo, a(i, i));
  return Interval::closed(lo, sup_norm(a));
}

Interval wmax_k(const NonnegMatrix& a, std::size_t k) {
  require_square(a, "wmax_k");
  const std::size_t n = a.rows();
  if (k == 0 || k > n) throw std::invalid_argument("wmax_k: k out of range");
  if (k == n) {
    double t = max_trace(a);
    return Interval::singleton(t);
  }
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i);
  std::nth_element(diag.begin(), diag.begin() + (k - 1), diag.end());
  return Interval::closed(diag[k - 1], sup_norm(a));
}

Interval achievable_diag_set(const NonnegMatrix& a, const std::vector<std::size_t>& support) {
  require_square(a, "achievable_diag_set");
  if (support.empty()) throw std::invalid_argument("achievable_diag_set: empty support");
  std::uint32_t mask = 0;
  for (std::size_t i : support) {
    if (i >= a.rows()) throw std::invalid_argument("achievable_diag_set: index out of range");
    mask |= 1u << i;
  }
  return achievable_of_mask(a, mask);
}

IntervalSet lambda_k(const NonnegMatrix& a, std::size_t k, std::uint64_t limit) {
  require_square(a, "lambda_k");
  require_exact_dim(a, "lambda_k");
  const std::size_t n = a.rows();
  if (k == 0 || k > n) throw std::invalid_argument("lambda_k: k out of range");

  AdjacencyGraph g(a);
  std::unordered_map<std::uint32_t, Interval> cache;
  std::vector<Interval> pieces;
  for_each_support_family(g, k, limit, [&](const std::vector<std::uint32_t>& blocks) {
    std::optional<Interval> acc;
    for (std::uint32_t b : blocks) {
      auto it = cache.find(b);
      if (it == cache.end()) it = cache.emplace(b, achievable_of_mask(a, b)).first;
      acc = acc ? intersect(*acc, it->second) : it->second;
      if (!acc) return;
    }
    pieces.push_back(*acc);
    if (pieces.size() >= 4096) {
      IntervalSet packed{std::move(pieces)};
      pieces = packed.parts();
    }
  });
  return IntervalSet(std::move(pieces));
}

double column_diag_value(const NonnegMatrix& a, const std::vector<std::size_t>& block,
                         const std::vector<double>& x) {
  double v = 0.0;
  for (std::size_t s = 0; s < block.size(); ++s)
    for (std::size_t t = 0; t < block.size(); ++t)
      v = std::max(v, (x[s] * a(block[s], block[t])) * x[t]);
  return v;
}

namespace {

// Largest power of two eps with eps <= 1, eps * big <= lambda / 2 and
// eps^2 * big <= lambda / 2; used to park non-carrier coordinates where they
// cannot disturb the block maximum. Returns 0 when no such power exists.
double small_filler(double lambda, double big) {
  if (big == 0.0) return 0.5;
  double eps = 0.5;
  for (int i = 0; i < 2000 && (eps * big > lambda / 2 || (eps * big) * eps > lambda / 2); ++i)
    eps /= 2;
  if (eps * big > lambda / 2 || (eps * big) * eps > lambda / 2) return 0.0;
  return eps;
}

// All block entries <= lambda once scaled: verification helper. x aligned
// with `idx`.
bool block_hits_exactly(const NonnegMatrix& a, const std::vector<std::size_t>& idx,
                        const std::vector<double>& x, double lambda) {
  for (double v : x)
    if (!(v > 0.0 && v <= 1.0)) return false;
  if (*std::max_element(x.begin(), x.end()) != 1.0) return false;
  return column_diag_value(a, idx, x) == lambda;
}

// With every coordinate of x fixed except x[slot], the column value is a
// nondecreasing step function of x[slot]. Walking upward from a point below
// the first crossing of lambda therefore decides exact attainability for
// this configuration: the first value >= lambda either equals it or proves
// the rounding grid skips it. `seeds` lists approximate crossing points of
// the individual product terms.
bool tune_slot(const NonnegMatrix& a, const std::vector<std::size_t>& idx,
               std::vector<double>& x, std::size_t slot, double lambda,
               const std::vector<double>& seeds) {
  double start = 1.0;
  for (double s : seeds)
    if (s > 0.0) start = std::min(start, s);
  if (!(start > 0.0) || start > 1.0) return false;
  for (int i = 0; i < 8 && start > 0.0; ++i) start = std::nextafter(start, 0.0);
  if (start <= 0.0) start = std::numeric_limits<double>::denorm_min();
  double q = start;
  for (int step = 0; step < 96; ++step) {
    x[slot] = q;
    double v = column_diag_value(a, idx, x);
    if (v == lambda) return true;
    if (v > lambda) return false;
    if (q == 1.0) return false;
    q = std::nextafter(q, 2.0);
    if (q > 1.0) q = 1.0;
  }
  return false;
}

// Fixed mantissa-phase values for a secondary arm coordinate, coarse to
// fine. Scaling the arm shifts which rounding lattice the tuned slot walks
// on, so a miss at one phase can be a hit at another.
const double kArmPhases[] = {
    1.0,        0.5,         0.25,       0x1.0p-4,   0x1.0p-8,    0x1.0p-16,  0.75,
    0.875,      0.625,       0.5625,     0.6875,     0.8125,      0.9375,     0x1.9p-1,
    0x1.bp-1,   0x1.dp-1,    0x1.fp-1,   0x1.e8p-1,  0x1.f8p-1,   0x1.fcp-1,  0x1.11p-1,
    0x1.33p-1,  0x1.55p-1,   0x1.77p-1,  0x1.99p-1,  0x1.bbp-1,   0x1.ddp-1,  0x1.ffp-1};

}  // namespace

std::optional<std::vector<double>> solve_block_column(const NonnegMatrix& a,
                                                      const std::vector<std::size_t>& block,
                                                      double lambda) {
  require_square(a, "solve_block_column");
  const std::size_t sz = block.size();
  if (sz == 0) throw std::invalid_argument("solve_block_column: empty block");
  std::vector<std::size_t> idx = block;
  std::sort(idx.begin(), idx.end());

  double big = 0.0, mindiag = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < sz; ++s) {
    mindiag = std::min(mindiag, a(idx[s], idx[s]));
    for (std::size_t t = 0; t < sz; ++t) big = std::max(big, a(idx[s], idx[t]));
  }

  // The whole block at 1 attains the maximum entry.
  if (lambda == big) return std::vector<double>(sz, 1.0);
  if (lambda > big || lambda < mindiag || lambda <= 0.0) return std::nullopt;

  double eps = small_filler(lambda, big);
  if (eps == 0.0) return std::nullopt;
  std::vector<double> x(sz);
  auto park = [&](std::size_t p) {
    for (std::size_t s = 0; s < sz; ++s) x[s] = (s == p) ? 1.0 : eps;
  };

  // Anchor alone: exact when lambda sits on a diagonal entry.
  for (std::size_t p = 0; p < sz; ++p) {
    if (a(idx[p], idx[p]) != lambda) continue;
    park(p);
    if (block_hits_exactly(a, idx, x, lambda)) return x;
  }

  for (std::size_t p = 0; p < sz; ++p) {
    if (a(idx[p], idx[p]) > lambda) continue;
    // One tuned coordinate against the unit anchor.
    for (std::size_t j = 0; j < sz; ++j) {
      if (j == p) continue;
      std::vector<double> seeds;
      if (a(idx[p], idx[j]) >= lambda) seeds.push_back(lambda / a(idx[p], idx[j]));
      if (a(idx[j], idx[p]) >= lambda) seeds.push_back(lambda / a(idx[j], idx[p]));
      if (a(idx[j], idx[j]) >= lambda) seeds.push_back(std::sqrt(lambda / a(idx[j], idx[j])));
      if (seeds.empty()) continue;
      park(p);
      if (tune_slot(a, idx, x, j, lambda, seeds) && block_hits_exactly(a, idx, x, lambda))
        return x;
    }
    // A fixed arm plus a tuned coordinate: covers carriers that avoid the
    // anchor and retunes the rounding phase when the direct walk misses.
    for (std::size_t i = 0; i < sz; ++i) {
      if (i == p) continue;
      for (std::size_t j = 0; j < sz; ++j) {
        if (j == p || j == i) continue;
        for (double arm : kArmPhases) {
          park(p);
          x[i] = arm;
          x[j] = eps;
          if (column_diag_value(a, idx, x) > lambda) continue;
          std::vector<double> seeds;
          double cij = (arm * a(idx[i], idx[j]));
          double cji = (a(idx[j], idx[i]) * arm);
          if (cij >= lambda) seeds.push_back(lambda / cij);
          if (cji >= lambda) seeds.push_back(lambda / cji);
          if (a(idx[p], idx[j]) >= lambda) seeds.push_back(lambda / a(idx[p], idx[j]));
          if (a(idx[j], idx[p]) >= lambda) seeds.push_back(lambda / a(idx[j], idx[p]));
          if (a(idx[j], idx[j]) >= lambda) seeds.push_back(std::sqrt(lambda / a(idx[j], idx[j])));
          if (seeds.empty()) continue;
          if (tune_slot(a, idx, x, j, lambda, seeds) && block_hits_exactly(a, idx, x, lambda))
            return x;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<MaxIsometry> witness_isometry(const NonnegMatrix& a, std::size_t k, double lambda,
                                            std::uint64_t limit) {
  require_square(a, "witness_isometry");
  require_exact_dim(a, "witness_isometry");
  if (k == 0 || k > a.rows()) throw std::invalid_argument("witness_isometry: k out of range");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) return std::nullopt;

  AdjacencyGraph g(a);
  std::unordered_map<std::uint32_t, Interval> cache;
  std::optional<MaxIsometry> found;
  struct stop_search {};
  try {
    for_each_support_family(g, k, limit, [&](const std::vector<std::uint32_t>& blocks) {
      for (std::uint32_t b : blocks) {
        auto it = cache.find(b);
        if (it == cache.end()) it = cache.emplace(b, achievable_of_mask(a, b)).first;
        if (!it->second.contains(lambda)) return;
      }
      MaxIsometry x;
      x.pattern = SupportPattern(a.rows(), blocks);
      x.values.resize(blocks.size());
      for (std::size_t b = 0; b < x.pattern.k(); ++b) {
        auto idx = x.pattern.block_indices(b);
        auto col = solve_block_column(a, idx, lambda);
        if (!col) return;
        x.values[b] = std::move(*col);
      }
      // Definition-level verification of the assembled witness.
      NonnegMatrix xm = x.to_matrix();
      NonnegMatrix d = otimes(otimes(transpose(xm), a), xm);
      for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
          if (d(i, j) != (i == j ? lambda : 0.0)) return;
      found = std::move(x);
      throw stop_search{};
    });
  } catch (const stop_search&) {
  } catch (const limit_exceeded&) {
    if (!found) throw;
  }
  return found;
}

RadiusValue lambda_radius(const NonnegMatrix& a, std::size_t k, std::uint64_t limit) {
  IntervalSet s = lambda_k(a, k, limit);
  if (s.empty()) return {};
  return {s.sup()};
}

RankOneSumBound rank_one_sum_bound(
    const std::vector<std::pair<NonnegVector, NonnegVector>>& factors, std::size_t k) {
  if (factors.empty()) throw std::invalid_argument("rank_one_sum_bound: no factors");
  const std::size_t n = factors[0].first.size();
  if (k == 0 || k > n) throw std::invalid_argument("rank_one_sum_bound: k out of range");
  std::vector<Interval> covers;
  double bound = 0.0;
  for (const auto& [x, y] : factors) {
    if (x.size() != n || y.size() != n)
      throw std::invalid_argument("rank_one_sum_bound: factor length mismatch");
    NonnegMatrix r = outer_product(x, y);
    covers.push_back(wmax(r));
    bound = std::max(bound, sup_norm(r));
  }
  return {IntervalSet(std::move(covers)), bound};
}

}  // namespace maxalg
