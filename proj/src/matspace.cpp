#include "msub/matspace.hpp"

#include "msub/multipoly.hpp"

namespace msub {

Scalar trace_pairing(const DenseMatrix& c, const DenseMatrix& m) {
  const std::size_t n = c.rows();
  if (!c.is_square() || m.rows() != n || m.cols() != n) throw DimensionMismatch("trace pairing shape mismatch");
  Scalar s = Scalar::zero(c.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!c(i, j).is_zero() && !m(j, i).is_zero()) s += c(i, j) * m(j, i);
    }
  return s;
}

MatrixSubspace constraint_space(const MatrixSubspace& m) {
  const Field f = m.field();
  const std::size_t n = m.n();
  const auto basis = m.basis();
  if (basis.empty()) return MatrixSubspace::full(f, n);
  // Row l of the system holds the coefficients of vec(C) in tr(C M_l).
  DenseMatrix sys(f, basis.size(), n * n);
  for (std::size_t l = 0; l < basis.size(); ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sys(l, i * n + j) = basis[l](j, i);
  return MatrixSubspace(n, kernel(sys));
}

MatrixSubspace conjugate(const MatrixSubspace& v, const DenseMatrix& t) {
  if (t.rows() != v.n() || t.cols() != v.n()) throw DimensionMismatch("conjugator has wrong size");
  const DenseMatrix t_inv = invert(t);
  std::vector<DenseMatrix> gens;
  for (const auto& m : v.basis()) gens.push_back(t_inv * m * t);
  return MatrixSubspace::span(v.field(), v.n(), gens);
}

MatrixSubspace block_zero_subspace(const MatrixSubspace& v, std::size_t r0, std::size_t c0, std::size_t nr,
                                   std::size_t nc) {
  const std::size_t n = v.n();
  if (r0 + nr > n || c0 + nc > n) throw std::out_of_range("block outside the matrix");
  const auto basis = v.basis();
  if (basis.empty() || nr == 0 || nc == 0) return v;
  DenseMatrix sys(v.field(), nr * nc, basis.size());
  for (std::size_t l = 0; l < basis.size(); ++l)
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) sys(i * nc + j, l) = basis[l](r0 + i, c0 + j);
  std::vector<DenseMatrix> gens;
  for (const auto& lambda : kernel(sys).basis_vectors()) gens.push_back(v.element(lambda));
  return MatrixSubspace::span(v.field(), n, gens);
}

MatrixSubspace filtration_level(const MatrixSubspace& c_n, std::size_t k) {
  const std::size_t n = c_n.n();
  if (k > n) throw std::out_of_range("filtration level above n");
  if (k == 0) return MatrixSubspace::zero(c_n.field(), n);
  return block_zero_subspace(c_n, 0, k, n, n - k);
}

VectorSubspace column_space(const MatrixSubspace& v, std::span<const Scalar> vec) {
  if (vec.size() != v.n()) throw DimensionMismatch("vector length differs from n");
  std::vector<Vector> cols;
  for (const auto& c : v.basis()) cols.push_back(c * vec);
  return VectorSubspace::span(v.field(), v.n(), cols);
}

std::size_t rightmost_nonzero_column(const DenseMatrix& m) {
  for (std::size_t j = m.cols(); j > 0; --j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (!m(i, j - 1).is_zero()) return j;
    }
  }
  return 0;
}

BinaryProfile binary_profile(const MatrixSubspace& c_n) {
  const std::size_t n = c_n.n();
  const Field f = c_n.field();
  BinaryProfile p;
  p.n = n;
  p.B.assign(n, std::vector<int>(n, 0));
  p.b.assign(n, 0);
  p.col_dims.assign(n, 0);
  p.d.assign(n + 1, 0);
  for (std::size_t j = 1; j <= n; ++j) {
    const MatrixSubspace level = filtration_level(c_n, j);
    const VectorSubspace cs = column_space(level, unit_vector(f, n, j - 1));
    p.col_dims[j - 1] = cs.dim();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t r = 0; r < cs.dim(); ++r) {
        if (!cs.basis()(r, i).is_zero()) {
          p.B[i][j - 1] = 1;
          break;
        }
      }
      p.b[j - 1] += static_cast<std::size_t>(p.B[i][j - 1]);
    }
    p.d[j] = generic_rank_of_action(level);
  }
  return p;
}

DenseMatrix rct(const DenseMatrix& m, std::size_t r) {
  const std::size_t n = m.rows();
  if (!m.is_square()) throw DimensionMismatch("rct of a non-square matrix");
  if (r < 1 || r + 1 > n) throw std::out_of_range("rct: r must lie in 1..n-1");
  return m.block(0, r, r, n - r);
}

bool is_rct_zero(const DenseMatrix& m, std::size_t r) { return rct(m, r).is_zero(); }

Vector canonical_grid(Field f, std::size_t s) {
  Vector g;
  g.reserve(s);
  for (std::size_t i = 0; i < s; ++i) g.push_back(Scalar::element(f, i));
  return g;
}

Vector find_generic_vector(const MatrixSubspace& c_n, std::size_t k, bool require_pivot_one) {
  const std::size_t n = c_n.n();
  const Field f = c_n.field();
  if (k < 1 || k > n) throw std::out_of_range("level must lie in 1..n");
  const MatrixSubspace level = filtration_level(c_n, k);
  const std::size_t d = generic_rank_of_action(level);
  if (d == 0) return unit_vector(f, n, k - 1);
  if (!f.has_at_least(d)) {
    throw FieldTooSmall(d, "generic vector at level " + std::to_string(k) + " needs #K >= d_k = " +
                               std::to_string(d));
  }
  const std::uint64_t grid_size = f.is_rationals() ? d + 1 : std::min<std::uint64_t>(*f.size(), d + 1);
  const Vector grid = canonical_grid(f, grid_size);

  // Lexicographic odometer over grid^k, first coordinate most significant.
  std::vector<std::size_t> idx(k, 0);
  Vector v = zero_vector(f, n);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) v[i] = grid[idx[i]];
    if (!require_pivot_one || !v[k - 1].is_zero()) {
      if (column_space(level, v).dim() == d) {
        if (require_pivot_one) {
          const Scalar inv = v[k - 1].inverse();
          for (auto& x : v) x *= inv;
        }
        return v;
      }
    }
    std::size_t pos = k;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < grid.size()) {
        done = false;
        break;
      }
      idx[pos] = 0;
    }
    if (done) break;
  }
  // The grid argument guarantees success when #K >= d (resp. #K > d with a
  // pivot); reaching this point otherwise is a bug.
  if (require_pivot_one && !f.has_at_least(d + 1)) {
    throw FieldTooSmall(d + 1, "no generic vector with v_k = 1 at level " + std::to_string(k) + " over " +
                                   f.name() + " (needs #K > d_k = " + std::to_string(d) + ")");
  }
  throw std::logic_error("grid scan failed to find a generic vector at level " + std::to_string(k));
}

}  // namespace msub
