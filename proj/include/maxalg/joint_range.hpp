#pragma once

#include <cstdint>
#include <vector>

#include "maxalg/interval.hpp"
#include "maxalg/isometry.hpp"
#include "maxalg/matrix.hpp"
#include "maxalg/single_range.hpp"

namespace maxalg {

/// Tuple of same-size square nonnegative matrices evaluated over a shared
/// isometry.
struct MatrixTuple {
  std::vector<NonnegMatrix> mats;

  MatrixTuple() = default;
  explicit MatrixTuple(std::vector<NonnegMatrix> ms);

  std::size_t arity() const { return mats.size(); }
  std::size_t dim() const { return mats.empty() ? 0 : mats[0].rows(); }
};

/// Axis-aligned product of coordinate intervals.
struct BoxRegion {
  std::vector<Interval> coords;
  bool contains(const std::vector<double>& p) const;
};

struct PointCloud {
  std::vector<std::vector<double>> points;
  std::uint64_t seed = 0;
  /// True when pattern enumeration proved that no k-column isometry exists.
  bool proven_empty = false;
};

/// Trace tuple (tr(X^t A_1 X), ..., tr(X^t A_m X)).
std::vector<double> joint_eval(const MatrixTuple& t, const MaxIsometry& x);
std::vector<double> joint_eval(const MatrixTuple& t, const NonnegMatrix& x);

/// Outer bound: the product of per-coordinate rank-k ranges.
BoxRegion joint_bounding_box(const MatrixTuple& t, std::size_t k);

/// The single point of the full-rank joint range: the max trace tuple.
std::vector<double> joint_exact_full(const MatrixTuple& t);

/// Inner approximation by sampling: support patterns (k disjoint nonempty
/// blocks, no orthogonality constraint) drawn uniformly from enumeration
/// when feasible, otherwise by rejection; isometry values per sample.
PointCloud joint_sample_cloud(const MatrixTuple& t, std::size_t k, std::size_t samples,
                              std::uint64_t seed, std::uint64_t limit = kDefaultFamilyLimit);

/// Both sides of the evaluation Lipschitz bound
/// |f(X) - f(Y)|_sup <= norm(oplus_i A_i) * (|X| + |Y|) * |X - Y|.
struct LipschitzCert {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds() const { return lhs <= rhs; }
};
LipschitzCert lipschitz_certificate(const MatrixTuple& t, const NonnegMatrix& x,
                                    const NonnegMatrix& y);

}  // namespace maxalg
