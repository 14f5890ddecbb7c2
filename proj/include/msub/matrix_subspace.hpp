#ifndef MSUB_MATRIX_SUBSPACE_HPP
#define MSUB_MATRIX_SUBSPACE_HPP

#include "msub/exactcore.hpp"

#include <vector>

namespace msub {

/// Row-major vectorization Mat_n(K) -> K^{n^2}.
Vector vectorize(const DenseMatrix& m);
DenseMatrix unvectorize(Field f, std::size_t n, std::span<const Scalar> v);

/// A K-subspace of Mat_n(K), held as a canonical subspace of K^{n^2}.
class MatrixSubspace {
 public:
  MatrixSubspace() = default;
  MatrixSubspace(std::size_t n, VectorSubspace vectorized);

  static MatrixSubspace span(Field f, std::size_t n, const std::vector<DenseMatrix>& generators);
  static MatrixSubspace zero(Field f, std::size_t n);
  static MatrixSubspace full(Field f, std::size_t n);
  static MatrixSubspace scalars(Field f, std::size_t n);
  /// The trace-zero hyperplane.
  static MatrixSubspace trace_zero(Field f, std::size_t n);

  Field field() const { return vec_.field(); }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return vec_.dim(); }
  std::size_t codim() const { return n_ * n_ - vec_.dim(); }
  const VectorSubspace& vectorized() const { return vec_; }

  /// Canonical basis (unvectorized RREF rows).
  std::vector<DenseMatrix> basis() const;
  bool contains(const DenseMatrix& m) const;
  bool contains(const MatrixSubspace& o) const { return vec_.contains(o.vec_); }
  bool contains_identity() const;

  /// Element with the given coordinates against the canonical basis.
  DenseMatrix element(std::span<const Scalar> coords) const;

  friend bool operator==(const MatrixSubspace& a, const MatrixSubspace& b) = default;

 private:
  std::size_t n_ = 0;
  VectorSubspace vec_;
};

MatrixSubspace sum(const MatrixSubspace& a, const MatrixSubspace& b);
MatrixSubspace intersect(const MatrixSubspace& a, const MatrixSubspace& b);

}  // namespace msub

#endif  // MSUB_MATRIX_SUBSPACE_HPP
