#pragma once

#include <cstddef>
#include <vector>

#include "maxalg/interval.hpp"
#include "maxalg/joint_range.hpp"
#include "maxalg/matrix.hpp"

namespace maxalg {

/// Exact enumeration over S_n is refused beyond this dimension.
inline constexpr std::size_t kMaxPermDim = 10;

/// Finite set of m-tuples, deduplicated exactly and kept in lexicographic
/// order.
struct PointSet {
  std::vector<std::vector<double>> points;

  std::size_t cardinality() const { return points.size(); }
  bool contains(const std::vector<double>& p) const;
  bool subset_of(const PointSet& other) const;
  /// Values of a set of 1-tuples.
  std::vector<double> scalars() const;
  bool operator==(const PointSet&) const = default;
};

PointSet make_point_set(std::vector<std::vector<double>> raw);

/// {max_i c_i * a_{sigma(i) sigma(i)} : sigma in S_n}, as 1-tuples.
PointSet c_range(const NonnegMatrix& a, const NonnegVector& c);

/// {tr(C otimes P^t otimes A otimes P) : P permutation}, as 1-tuples.
PointSet C_range(const NonnegMatrix& a, const NonnegMatrix& c);

/// Joint versions: the m-tuples collected over a shared permutation.
PointSet joint_c_range(const MatrixTuple& t, const NonnegVector& c);
PointSet joint_C_range(const MatrixTuple& t, const NonnegMatrix& c);

/// Max-convex hull [min, max] of the c-range values.
Interval c_range_hull(const NonnegMatrix& a, const NonnegVector& c);

}  // namespace maxalg
