#ifndef MSUB_MATSPACE_HPP
#define MSUB_MATSPACE_HPP

// Subspaces of Mat_n(K): trace duality, conjugation, the column filtration
// C_1 <= ... <= C_n and its binary profile.
//
// Filtration levels and coordinate indices are 1-based (level k keeps the
// first k columns, e_k is the k-th unit vector); all matrix storage is 0-based.

#include "msub/errors.hpp"
#include "msub/exactcore.hpp"
#include "msub/matrix_subspace.hpp"

namespace msub {

/// tr(C M) computed as the Hadamard sum sum_{ij} C_ij M_ji.
Scalar trace_pairing(const DenseMatrix& c, const DenseMatrix& m);

/// { C : tr(C M) = 0 for all M in m }.
MatrixSubspace constraint_space(const MatrixSubspace& m);

/// span{ t^-1 M t : M in v }. Throws SingularMatrix for singular t.
MatrixSubspace conjugate(const MatrixSubspace& v, const DenseMatrix& t);

/// C_k = { C in c_n : C e_{k+1} = ... = C e_n = 0 }, k in 0..n.
MatrixSubspace filtration_level(const MatrixSubspace& c_n, std::size_t k);

/// span{ C vec : C in v }.
VectorSubspace column_space(const MatrixSubspace& v, std::span<const Scalar> vec);

/// { C in v : the block rows [r0, r0+nr) x cols [c0, c0+nc) of C vanishes } (0-based).
MatrixSubspace block_zero_subspace(const MatrixSubspace& v, std::size_t r0, std::size_t c0, std::size_t nr,
                                   std::size_t nc);

/// 1-based index of the rightmost nonzero column; 0 for the zero matrix.
std::size_t rightmost_nonzero_column(const DenseMatrix& m);

struct BinaryProfile {
  std::size_t n = 0;
  /// B(i, j) = dim e_i^t C_j e_j, stored 0-based.
  std::vector<std::vector<int>> B;
  /// b[j] = number of ones in column j (0-based).
  std::vector<std::size_t> b;
  /// col_dims[j] = dim C_{j+1} e_{j+1}.
  std::vector<std::size_t> col_dims;
  /// d[k] = generic dimension of C_k, k = 0..n.
  std::vector<std::size_t> d;

  int at(std::size_t i, std::size_t j) const { return B.at(i - 1).at(j - 1); }  // 1-based
  std::size_t b_at(std::size_t j) const { return b.at(j - 1); }                   // 1-based
  std::size_t col_dim_at(std::size_t j) const { return col_dims.at(j - 1); }      // 1-based

  friend bool operator==(const BinaryProfile&, const BinaryProfile&) = default;
};

BinaryProfile binary_profile(const MatrixSubspace& c_n);

/// The top-right r x (n-r) block: first r rows, last n-r columns.
DenseMatrix rct(const DenseMatrix& m, std::size_t r);
bool is_rct_zero(const DenseMatrix& m, std::size_t r);

/// The first s elements of K in canonical order.
Vector canonical_grid(Field f, std::size_t s);

/// A v with v_{k+1} = ... = v_n = 0 and dim C_k v = d_k (and v_k = 1 when
/// require_pivot_one), found by a lexicographic scan of S^k where S holds the
/// first min(#K, d_k + 1) elements of K. Throws FieldTooSmall when #K < d_k,
/// or #K <= d_k with require_pivot_one.
Vector find_generic_vector(const MatrixSubspace& c_n, std::size_t k, bool require_pivot_one);

}  // namespace msub

#endif  // MSUB_MATSPACE_HPP
