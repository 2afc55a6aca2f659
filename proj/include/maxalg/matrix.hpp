#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace maxalg {

/// Nonnegative finite vector; the x, y, c of max-algebra formulas.
class NonnegVector {
 public:
  NonnegVector() = default;
  explicit NonnegVector(std::vector<double> entries);
  NonnegVector(std::initializer_list<double> entries);

  std::size_t size() const { return v_.size(); }
  double operator[](std::size_t i) const { return v_[i]; }
  const std::vector<double>& entries() const { return v_; }
  bool operator==(const NonnegVector&) const = default;

 private:
  std::vector<double> v_;
};

/// Dense row-major matrix over the max-times semiring (R+, max, *).
/// Entries are validated nonnegative and finite at construction; structural
/// zeros are exactly 0.0.
class NonnegMatrix {
 public:
  NonnegMatrix() = default;
  NonnegMatrix(std::size_t rows, std::size_t cols);  // zero-filled
  explicit NonnegMatrix(const std::vector<std::vector<double>>& rows);
  NonnegMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static NonnegMatrix identity(std::size_t n);
  static NonnegMatrix diagonal(const NonnegVector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, double v);

  const std::vector<double>& data() const { return a_; }
  bool operator==(const NonnegMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

/// Element of S_n stored as the image list sigma(0), ..., sigma(n-1).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> image);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return map_.size(); }
  std::size_t operator()(std::size_t i) const { return map_[i]; }
  Permutation inverse() const;

  /// 0/1 matrix U with U * e_i = e_{sigma(i)}.
  NonnegMatrix to_matrix() const;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> map_;
};

// Semiring operations. oplus is entrywise max; otimes is the max-times
// product (A otimes B)_ij = max_k a_ik * b_kj.
NonnegMatrix oplus(const NonnegMatrix& a, const NonnegMatrix& b);
NonnegMatrix otimes(const NonnegMatrix& a, const NonnegMatrix& b);
NonnegMatrix otimes_power(const NonnegMatrix& a, std::size_t m);  // m >= 1
NonnegMatrix transpose(const NonnegMatrix& a);
NonnegMatrix scale(double alpha, const NonnegMatrix& a);  // alpha >= 0

/// Max trace: the largest diagonal entry.
double max_trace(const NonnegMatrix& a);

/// Sup norm: the largest entry.
double sup_norm(const NonnegMatrix& a);
double sup_norm(const NonnegVector& x);

/// Entry (i,j) of the result equals a(sigma(i), sigma(j)); pure relabeling,
/// identical to U^t otimes A otimes U for U = sigma.to_matrix().
NonnegMatrix conjugate_by_permutation(const NonnegMatrix& a, const Permutation& sigma);

/// Rank-one product x otimes y^t.
NonnegMatrix outer_product(const NonnegVector& x, const NonnegVector& y);

NonnegMatrix block_diag(const std::vector<NonnegMatrix>& blocks);

/// Banded Toeplitz matrix with entry (i,j) = band a_{i-j} and zero corners
/// (0,n-1), (n-1,0). `diags` lists the 2n-3 bands by descending offset,
/// from the lowest subdiagonal a_{n-2} to the highest superdiagonal
/// a_{-(n-2)}; every band must be positive. Requires n >= 3.
NonnegMatrix build_banded_toeplitz(const NonnegVector& diags, std::size_t n);

/// Largest geometric cycle mean of the weighted digraph of A (edge i->j when
/// a_ij > 0). Returns 0 when the digraph has no cycle through positive
/// entries. Computed on log weights with a maximum-cycle-mean routine run per
/// strongly connected component.
double max_eigenvalue(const NonnegMatrix& a);

}  // namespace maxalg
