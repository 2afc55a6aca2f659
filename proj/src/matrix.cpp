#include "maxalg/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace maxalg {

namespace {

void check_entry(double v, std::size_t i, std::size_t j) {
  if (!std::isfinite(v) || v < 0.0) {
    throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") is not a finite nonnegative number");
  }
}

}  // namespace

NonnegVector::NonnegVector(std::vector<double> entries) : v_(std::move(entries)) {
  for (std::size_t i = 0; i < v_.size(); ++i) check_entry(v_[i], 0, i);
}

NonnegVector::NonnegVector(std::initializer_list<double> entries)
    : NonnegVector(std::vector<double>(entries)) {}

NonnegMatrix::NonnegMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

NonnegMatrix::NonnegMatrix(const std::vector<std::vector<double>>& rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows[0].size();
  a_.reserve(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (rows[i].size() != cols_) {
      throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(cols_));
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      check_entry(rows[i][j], i, j);
      a_.push_back(rows[i][j]);
    }
  }
}

NonnegMatrix::NonnegMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : NonnegMatrix(std::vector<std::vector<double>>(rows.begin(), rows.end())) {}

NonnegMatrix NonnegMatrix::identity(std::size_t n) {
  NonnegMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1.0;
  return m;
}

NonnegMatrix NonnegMatrix::diagonal(const NonnegVector& d) {
  NonnegMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.a_[i * d.size() + i] = d[i];
  return m;
}

void NonnegMatrix::set(std::size_t i, std::size_t j, double v) {
  check_entry(v, i, j);
  a_[i * cols_ + j] = v;
}

Permutation::Permutation(std::vector<std::size_t> image) : map_(std::move(image)) {
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t v : map_) {
    if (v >= map_.size() || seen[v]) throw std::invalid_argument("not a permutation image");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> im(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) im[map_[i]] = i;
  return Permutation(std::move(im));
}

NonnegMatrix Permutation::to_matrix() const {
  NonnegMatrix u(map_.size(), map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) u.set(map_[i], i, 1.0);
  return u;
}

NonnegMatrix oplus(const NonnegMatrix& a, const NonnegMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("oplus: shape mismatch");
  NonnegMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, std::max(a(i, j), b(i, j)));
  return r;
}

NonnegMatrix otimes(const NonnegMatrix& a, const NonnegMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("otimes: inner dimension mismatch");
  NonnegMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = std::max(acc, a(i, k) * b(k, j));
      r.set(i, j, acc);
    }
  }
  return r;
}

NonnegMatrix otimes_power(const NonnegMatrix& a, std::size_t m) {
  if (!a.square()) throw std::invalid_argument("otimes_power: matrix not square");
  if (m == 0) throw std::invalid_argument("otimes_power: exponent must be >= 1");
  NonnegMatrix r = a;
  for (std::size_t i = 1; i < m; ++i) r = otimes(r, a);
  return r;
}

NonnegMatrix transpose(const NonnegMatrix& a) {
  NonnegMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.set(j, i, a(i, j));
  return r;
}

NonnegMatrix scale(double alpha, const NonnegMatrix& a) {
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw std::invalid_argument("scale: factor must be finite and nonnegative");
  NonnegMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, alpha * a(i, j));
  return r;
}

double max_trace(const NonnegMatrix& a) {
  if (!a.square()) throw std::invalid_argument("max_trace: matrix not square");
  double t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t = std::max(t, a(i, i));
  return t;
}

double sup_norm(const NonnegMatrix& a) {
  double m = 0.0;
  for (double v : a.data()) m = std::max(m, v);
  return m;
}

double sup_norm(const NonnegVector& x) {
  double m = 0.0;
  for (double v : x.entries()) m = std::max(m, v);
  return m;
}

NonnegMatrix conjugate_by_permutation(const NonnegMatrix& a, const Permutation& sigma) {
  if (!a.square() || a.rows() != sigma.size())
    throw std::invalid_argument("conjugate_by_permutation: size mismatch");
  NonnegMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a(sigma(i), sigma(j)));
  return r;
}

NonnegMatrix outer_product(const NonnegVector& x, const NonnegVector& y) {
  NonnegMatrix r(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r.set(i, j, x[i] * y[j]);
  return r;
}

NonnegMatrix block_diag(const std::vector<NonnegMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.square()) throw std::invalid_argument("block_diag: blocks must be square");
    n += b.rows();
  }
  NonnegMatrix r(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r.set(off + i, off + j, b(i, j));
    off += b.rows();
  }
  return r;
}

NonnegMatrix build_banded_toeplitz(const NonnegVector& diags, std::size_t n) {
  if (n < 3) throw std::invalid_argument("build_banded_toeplitz: n must be >= 3");
  if (diags.size() != 2 * n - 3)
    throw std::invalid_argument("build_banded_toeplitz: expected " + std::to_string(2 * n - 3) +
                                " bands, got " + std::to_string(diags.size()));
  for (std::size_t t = 0; t < diags.size(); ++t)
    if (diags[t] == 0.0)
      throw std::invalid_argument("build_banded_toeplitz: band " + std::to_string(t) + " is zero");
  NonnegMatrix r(n, n);
  // diags[t] is the band a_{n-2-t}; entry (i,j) = a_{i-j} except the two
  // zero corners.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::ptrdiff_t off = static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(j);
      if (off == static_cast<std::ptrdiff_t>(n) - 1 || -off == static_cast<std::ptrdiff_t>(n) - 1)
        continue;
      r.set(i, j, diags[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(n) - 2 - off)]);
    }
  }
  return r;
}

}  // namespace maxalg
