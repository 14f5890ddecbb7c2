#include "msub/matrix_subspace.hpp"

namespace msub {

Vector vectorize(const DenseMatrix& m) { return m.entries(); }

DenseMatrix unvectorize(Field f, std::size_t n, std::span<const Scalar> v) {
  if (v.size() != n * n) throw DimensionMismatch("vector length is not n^2");
  return DenseMatrix(f, n, n, std::vector<Scalar>(v.begin(), v.end()));
}

MatrixSubspace::MatrixSubspace(std::size_t n, VectorSubspace vectorized) : n_(n), vec_(std::move(vectorized)) {
  if (vec_.ambient_dim() != n * n) throw DimensionMismatch("matrix subspace ambient dimension is not n^2");
}

MatrixSubspace MatrixSubspace::span(Field f, std::size_t n, const std::vector<DenseMatrix>& generators) {
  std::vector<Vector> vs;
  vs.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("generator is not n x n");
    vs.push_back(vectorize(g));
  }
  return MatrixSubspace(n, VectorSubspace::span(f, n * n, vs));
}

MatrixSubspace MatrixSubspace::zero(Field f, std::size_t n) {
  return MatrixSubspace(n, VectorSubspace::zero(f, n * n));
}

MatrixSubspace MatrixSubspace::full(Field f, std::size_t n) {
  return MatrixSubspace(n, VectorSubspace::full(f, n * n));
}

MatrixSubspace MatrixSubspace::scalars(Field f, std::size_t n) {
  return span(f, n, {DenseMatrix::identity(f, n)});
}

MatrixSubspace MatrixSubspace::trace_zero(Field f, std::size_t n) {
  DenseMatrix tr(f, 1, n * n);
  for (std::size_t i = 0; i < n; ++i) tr(0, i * n + i) = Scalar::one(f);
  return MatrixSubspace(n, kernel(tr));
}

std::vector<DenseMatrix> MatrixSubspace::basis() const {
  std::vector<DenseMatrix> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(unvectorize(field(), n_, vec_.basis().row(i)));
  return out;
}

bool MatrixSubspace::contains(const DenseMatrix& m) const {
  if (m.rows() != n_ || m.cols() != n_) throw DimensionMismatch("matrix is not n x n");
  return vec_.contains(m.entries());
}

bool MatrixSubspace::contains_identity() const { return contains(DenseMatrix::identity(field(), n_)); }

DenseMatrix MatrixSubspace::element(std::span<const Scalar> coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("coordinate count differs from dimension");
  Vector v = zero_vector(field(), n_ * n_);
  const DenseMatrix& b = vec_.basis();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_ * n_; ++j) {
      if (!b(i, j).is_zero()) v[j] += coords[i] * b(i, j);
    }
  }
  return unvectorize(field(), n_, v);
}

MatrixSubspace sum(const MatrixSubspace& a, const MatrixSubspace& b) {
  if (a.n() != b.n()) throw DimensionMismatch("matrix subspaces of different sizes");
  return MatrixSubspace(a.n(), sum(a.vectorized(), b.vectorized()));
}

MatrixSubspace intersect(const MatrixSubspace& a, const MatrixSubspace& b) {
  if (a.n() != b.n()) throw DimensionMismatch("matrix subspaces of different sizes");
  return MatrixSubspace(a.n(), intersect(a.vectorized(), b.vectorized()));
}

}  // namespace msub
