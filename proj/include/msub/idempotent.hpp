#ifndef MSUB_IDEMPOTENT_HPP
#define MSUB_IDEMPOTENT_HPP

#include "msub/errors.hpp"
#include "msub/matspace.hpp"

namespace msub {

/// upper: [[I_r, 0], [X, 0]] (rank r); lower: [[0, 0], [X, I_{n-r}]] (rank n-r).
enum class IdempotentForm { upper, lower };

const char* to_string(IdempotentForm f);

/// The affine space of idempotents of a fixed block form inside m. Members are
/// particular + (lower-left block from directions).
struct AffineFamily {
  std::size_t n = 0;
  std::size_t r = 0;
  IdempotentForm form = IdempotentForm::upper;
  DenseMatrix particular;
  /// Vectorized (row-major) (n-r) x r lower-left blocks.
  VectorSubspace directions;

  std::size_t dim() const { return directions.dim(); }
  /// particular + the block with the given coordinates against directions.
  DenseMatrix member(std::span<const Scalar> coords) const;
  /// Idempotent rank of every member.
  std::size_t member_rank() const { return form == IdempotentForm::upper ? r : n - r; }
};

/// Idempotents of the given form in m. Throws HypothesisFailed (witness: a
/// constraint C with rct_r(C) = 0 whose relevant principal block has nonzero
/// trace) when the existence criterion does not apply.
AffineFamily idempotent_family(const MatrixSubspace& m, std::size_t r, IdempotentForm form);

/// N = { M in m : M vanishes outside its lower-left (n-r) x r block }.
MatrixSubspace lower_left_part(const MatrixSubspace& m, std::size_t r);

struct FullSpaceCertificate {
  DenseMatrix e;
  DenseMatrix e_prime;
  std::size_t r = 0;
};

/// Idempotents e (rank r) and e' (rank n-r) in m with e + e' unipotent.
/// Throws PreconditionViolated if I lies in the constraint space and
/// HypothesisFailed if some C in C + K I with rct_r(C) = 0 is not scalar.
FullSpaceCertificate full_space_certificate(const MatrixSubspace& m, std::size_t r);

bool is_idempotent(const DenseMatrix& e);
bool is_nilpotent(const DenseMatrix& a);
bool is_unipotent(const DenseMatrix& u);

}  // namespace msub

#endif  // MSUB_IDEMPOTENT_HPP
