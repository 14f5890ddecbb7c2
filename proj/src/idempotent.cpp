#include "msub/idempotent.hpp"

#include "msub/normalize.hpp"

namespace msub {

const char* to_string(IdempotentForm f) { return f == IdempotentForm::upper ? "upper" : "lower"; }

DenseMatrix AffineFamily::member(std::span<const Scalar> coords) const {
  if (coords.size() != directions.dim()) throw DimensionMismatch("coordinate count differs from family dimension");
  DenseMatrix e = particular;
  const DenseMatrix& b = directions.basis();
  for (std::size_t l = 0; l < coords.size(); ++l) {
    if (coords[l].is_zero()) continue;
    for (std::size_t i = 0; i + r < n; ++i)
      for (std::size_t j = 0; j < r; ++j) e(r + i, j) += coords[l] * b(l, i * r + j);
  }
  return e;
}

bool is_idempotent(const DenseMatrix& e) { return e * e == e; }

bool is_nilpotent(const DenseMatrix& a) { return a.pow(a.rows()).is_zero(); }

bool is_unipotent(const DenseMatrix& u) {
  return is_nilpotent(u - DenseMatrix::identity(u.field(), u.rows()));
}

MatrixSubspace lower_left_part(const MatrixSubspace& m, std::size_t r) {
  const std::size_t n = m.n();
  if (r < 1 || r + 1 > n) throw std::out_of_range("r must lie in 1..n-1");
  // Zero out the top r rows and the right n-r columns.
  const MatrixSubspace top = block_zero_subspace(m, 0, 0, r, n);
  return block_zero_subspace(top, r, r, n - r, n - r);
}

AffineFamily idempotent_family(const MatrixSubspace& m, std::size_t r, IdempotentForm form) {
  const std::size_t n = m.n();
  const Field f = m.field();
  if (r < 1 || r + 1 > n) throw std::out_of_range("r must lie in 1..n-1");
  const bool upper = form == IdempotentForm::upper;
  const MatrixSubspace c = constraint_space(m);

  for (const auto& z : block_zero_subspace(c, 0, r, r, n - r).basis()) {
    Scalar tr = Scalar::zero(f);
    for (std::size_t a = upper ? 0 : r; a < (upper ? r : n); ++a) tr += z(a, a);
    if (!tr.is_zero()) {
      throw HypothesisFailed(z, std::string("a constraint with vanishing rct has a ") +
                                    (upper ? "leading" : "trailing") + " principal block of nonzero trace");
    }
  }

  // tr(C E) = sum_{a<r, b>=r} C_ab X_(b-r)a + (trace of the fixed identity block of C).
  const auto cons = c.basis();
  const std::size_t unknowns = (n - r) * r;
  DenseMatrix sys(f, cons.size(), unknowns);
  Vector rhs = zero_vector(f, cons.size());
  for (std::size_t l = 0; l < cons.size(); ++l) {
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = r; b < n; ++b) sys(l, (b - r) * r + a) = cons[l](a, b);
    Scalar fixed = Scalar::zero(f);
    for (std::size_t a = upper ? 0 : r; a < (upper ? r : n); ++a) fixed += cons[l](a, a);
    rhs[l] = -fixed;
  }
  auto sol = solve_affine(sys, rhs);
  if (!sol) {
    // Unreachable under the criterion above; the system is always consistent then.
    throw InternalError("idempotent system inconsistent although the trace criterion holds");
  }

  AffineFamily fam;
  fam.n = n;
  fam.r = r;
  fam.form = form;
  fam.particular = DenseMatrix(f, n, n);
  for (std::size_t a = upper ? 0 : r; a < (upper ? r : n); ++a) fam.particular(a, a) = Scalar::one(f);
  for (std::size_t i = 0; i < n - r; ++i)
    for (std::size_t j = 0; j < r; ++j) fam.particular(r + i, j) = sol->particular[i * r + j];
  fam.directions = std::move(sol->directions);
  return fam;
}

FullSpaceCertificate full_space_certificate(const MatrixSubspace& m, std::size_t r) {
  const std::size_t n = m.n();
  const Field f = m.field();
  if (r < 1 || r + 1 > n) throw std::out_of_range("r must lie in 1..n-1");
  const MatrixSubspace c = constraint_space(m);
  if (c.contains_identity()) throw PreconditionViolated("the identity lies in the constraint space");
  if (!main2_conclusion_holds(c, r)) {
    const MatrixSubspace c_n = sum(c, MatrixSubspace::scalars(f, n));
    const MatrixSubspace scalars = MatrixSubspace::scalars(f, n);
    for (const auto& z : block_zero_subspace(c_n, 0, r, r, n - r).basis()) {
      if (!scalars.contains(z)) {
        throw HypothesisFailed(z, "a non-scalar element of C + K I has vanishing rct");
      }
    }
    throw InternalError("rct-zero part of C + K I is not scalar but no witness found");
  }

  FullSpaceCertificate cert{idempotent_family(m, r, IdempotentForm::upper).particular,
                            idempotent_family(m, r, IdempotentForm::lower).particular, r};
  const DenseMatrix s = cert.e + cert.e_prime;
  if (!is_idempotent(cert.e) || !is_idempotent(cert.e_prime) || !m.contains(cert.e) ||
      !m.contains(cert.e_prime) || !is_unipotent(s)) {
    throw InternalError("certificate idempotents fail their defining properties");
  }
  const DenseMatrix a = DenseMatrix::unit(f, n, 0, 0);
  const DenseMatrix s_inv = invert(s);
  if (!(a * s_inv * cert.e + a * s_inv * cert.e_prime == a)) {
    throw InternalError("A (E + E')^-1 E + A (E + E')^-1 E' != A");
  }
  return cert;
}

}  // namespace msub
