#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "maxalg/interval.hpp"
#include "maxalg/isometry.hpp"
#include "maxalg/matrix.hpp"

namespace maxalg {

inline constexpr std::uint64_t kDefaultFamilyLimit = 10'000'000;
inline constexpr std::size_t kMaxExactDim = 16;

/// Radius of a possibly empty value set; bottom (no value) for the empty set.
struct RadiusValue {
  std::optional<double> value;
  bool is_bottom() const { return !value.has_value(); }
  bool operator==(const RadiusValue&) const = default;
};

/// Numerical range over all rank-one isometries: [min diagonal, max entry].
Interval wmax(const NonnegMatrix& a);

/// Rank-k numerical range. For 1 <= k < n the interval [c, d] where c is the
/// k-th smallest diagonal entry and d the largest entry; for k = n the
/// degenerate interval at the max trace.
Interval wmax_k(const NonnegMatrix& a, std::size_t k);

/// Values max_{i,j in T} x_i a_ij x_j over vectors supported exactly on T
/// with entries in (0,1] attaining 1. With m = min diagonal and M = max
/// entry over T: {0} when M = 0, (0, M] when m = 0 < M, else [m, M].
Interval achievable_diag_set(const NonnegMatrix& a, const std::vector<std::size_t>& support);

/// Rank-k interval range: all lambda with X^t otimes A otimes X = lambda I_k
/// for some max isometry X. Union over orthogonal support families of the
/// intersection of per-block achievable sets. Exact mode refuses n > 16.
IntervalSet lambda_k(const NonnegMatrix& a, std::size_t k,
                     std::uint64_t limit = kDefaultFamilyLimit);

/// A max isometry reproducing lambda exactly (X^t otimes A otimes X equals
/// lambda I_k in double arithmetic), or nullopt when lambda is not in the
/// range or no exactly-reproducing witness was found.
std::optional<MaxIsometry> witness_isometry(const NonnegMatrix& a, std::size_t k, double lambda,
                                            std::uint64_t limit = kDefaultFamilyLimit);

/// Largest element of lambda_k, bottom when the range is empty.
RadiusValue lambda_radius(const NonnegMatrix& a, std::size_t k,
                          std::uint64_t limit = kDefaultFamilyLimit);

/// For Z = oplus_j x_j otimes y_j^t: interval cover union_j wmax(x_j y_j^t)
/// containing every rank-k range of Z, and the radius bound oplus_j of the
/// factor norms.
struct RankOneSumBound {
  IntervalSet cover;
  double radius_bound = 0.0;
};
RankOneSumBound rank_one_sum_bound(const std::vector<std::pair<NonnegVector, NonnegVector>>& factors,
                                   std::size_t k);

/// Diagonal value contributed by one column: max over i,j in the block of
/// (x_i * a_ij) * x_j, evaluated left to right. All range computations and
/// witnesses use this association order.
double column_diag_value(const NonnegMatrix& a, const std::vector<std::size_t>& block,
                         const std::vector<double>& x);

/// Column entries over `block` whose diagonal value is exactly lambda, all
/// within (0,1] and attaining 1; nullopt when no exactly-reproducing column
/// was found. Building block of witness_isometry.
std::optional<std::vector<double>> solve_block_column(const NonnegMatrix& a,
                                                      const std::vector<std::size_t>& block,
                                                      double lambda);

}  // namespace maxalg
