#include "maxalg/perm_range.hpp"

#include <algorithm>
#include <stdexcept>

#include "maxalg/errors.hpp"

namespace maxalg {

namespace {

void require_perm_dim(std::size_t n, const char* who) {
  if (n > kMaxPermDim)
    throw limit_exceeded(std::string(who) + ": exact enumeration over S_n refuses n > " +
                         std::to_string(kMaxPermDim));
}

// max_i c_i * a_{sigma(i) sigma(i)}.
double c_value(const NonnegMatrix& a, const NonnegVector& c, const std::vector<std::size_t>& sigma) {
  double v = 0.0;
  for (std::size_t i = 0; i < sigma.size(); ++i) v = std::max(v, c[i] * a(sigma[i], sigma[i]));
  return v;
}

// tr(C otimes sigma^t A sigma) = max_{i,k} c_ik * a(sigma(k), sigma(i)).
double big_c_value(const NonnegMatrix& a, const NonnegMatrix& c,
                   const std::vector<std::size_t>& sigma) {
  double v = 0.0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t k = 0; k < sigma.size(); ++k)
      v = std::max(v, c(i, k) * a(sigma[k], sigma[i]));
  return v;
}

template <typename Eval>
PointSet enumerate_sn(std::size_t n, Eval&& eval) {
  std::vector<std::size_t> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
  std::vector<std::vector<double>> pts;
  do {
    pts.push_back(eval(sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return make_point_set(std::move(pts));
}

}  // namespace

PointSet make_point_set(std::vector<std::vector<double>> raw) {
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  return PointSet{std::move(raw)};
}

bool PointSet::contains(const std::vector<double>& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

bool PointSet::subset_of(const PointSet& other) const {
  return std::all_of(points.begin(), points.end(),
                     [&](const auto& p) { return other.contains(p); });
}

std::vector<double> PointSet::scalars() const {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != 1) throw std::invalid_argument("point set does not hold scalars");
    out.push_back(p[0]);
  }
  return out;
}

PointSet c_range(const NonnegMatrix& a, const NonnegVector& c) {
  return joint_c_range(MatrixTuple({a}), c);
}

PointSet C_range(const NonnegMatrix& a, const NonnegMatrix& c) {
  return joint_C_range(MatrixTuple({a}), c);
}

PointSet joint_c_range(const MatrixTuple& t, const NonnegVector& c) {
  const std::size_t n = t.dim();
  if (c.size() != n) throw std::invalid_argument("joint_c_range: weight length mismatch");
  require_perm_dim(n, "joint_c_range");
  return enumerate_sn(n, [&](const std::vector<std::size_t>& sigma) {
    std::vector<double> p;
    p.reserve(t.arity());
    for (const auto& a : t.mats) p.push_back(c_value(a, c, sigma));
    return p;
  });
}

PointSet joint_C_range(const MatrixTuple& t, const NonnegMatrix& c) {
  const std::size_t n = t.dim();
  if (!c.square() || c.rows() != n)
    throw std::invalid_argument("joint_C_range: weight matrix size mismatch");
  require_perm_dim(n, "joint_C_range");
  return enumerate_sn(n, [&](const std::vector<std::size_t>& sigma) {
    std::vector<double> p;
    p.reserve(t.arity());
    for (const auto& a : t.mats) p.push_back(big_c_value(a, c, sigma));
    return p;
  });
}

Interval c_range_hull(const NonnegMatrix& a, const NonnegVector& c) {
  return max_convex_hull(c_range(a, c).scalars());
}

}  // namespace maxalg
