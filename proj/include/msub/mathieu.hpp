#ifndef MSUB_MATHIEU_HPP
#define MSUB_MATHIEU_HPP

// Exhaustive Mathieu-subspace semantics over prime fields, plus the radical
// and left-ideal structure of subspaces of Mat_n(K).
//
// "b a^m in M for m >> 0" is decided exactly via the eventual cycle of the
// powers of a. Conditions linear in b (or c) are checked on the matrix units
// E_ij, which span Mat_n(K).

#include "msub/errors.hpp"
#include "msub/matspace.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace msub {

/// Largest p^{n^2} any exhaustive routine will enumerate.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 20;

enum class MathieuType { left, right, pre_two_sided, two_sided };

const char* to_string(MathieuType t);
/// Accepts left | right | pre2 | pre_two_sided | two | two_sided.
MathieuType parse_mathieu_type(const std::string& s);

/// Powers a^1..a^t (tail) followed by the periodic part a^{t+1}..a^{t+period}.
struct PowerTrajectory {
  DenseMatrix a;
  std::vector<DenseMatrix> tail;
  std::vector<DenseMatrix> cycle;

  std::size_t tail_length() const { return tail.size(); }
  std::size_t period() const { return cycle.size(); }
  /// a^m for m >= 1, read off the trajectory.
  const DenseMatrix& power(std::uint64_t m) const;
};

/// Minimal tail and period with a^{m + period} = a^m for all m > tail.
/// Only over prime fields.
PowerTrajectory power_trajectory(const DenseMatrix& a);

/// Every element of s, in lexicographic order of the row-major entries.
std::vector<DenseMatrix> elements(const MatrixSubspace& s);

/// { a : a^m in s for all m >> 0 }, in lexicographic order.
std::vector<DenseMatrix> radical(const MatrixSubspace& s);

/// { a : a^m in s for all m >= 1 }, in lexicographic order.
std::vector<DenseMatrix> full_power_set(const MatrixSubspace& s);

struct MathieuWitness {
  DenseMatrix a;
  std::optional<DenseMatrix> b;  // left factor
  std::optional<DenseMatrix> c;  // right factor
  /// A power of a whose product escapes M; so do exponent + k * period.
  std::uint64_t exponent = 0;
};

struct MathieuVerdict {
  MathieuType type = MathieuType::left;
  bool holds = true;
  std::optional<MathieuWitness> witness;
};

/// Exhaustive check over all a with every power in m. The witness, if any, is
/// the first failure in lexicographic order of a.
MathieuVerdict verify_mathieu(const MatrixSubspace& m, MathieuType type);

/// Re-derives a failure from scratch by direct power iteration.
bool replay_witness(const MatrixSubspace& m, const MathieuWitness& w);

/// { M : M_n1 = ... = M_n(n-1) = 0 = tr M + a M_nn }.
MatrixSubspace proposition_family(Field f, std::size_t n, const Scalar& a_param);

/// Coefficients (constant term first) of det(tI - a), obtained from the power
/// sums tr(a^k) through Newton's identities. Requires chr K = 0 or chr K > n.
Vector newton_char_poly(const DenseMatrix& a);

struct PrelmReport {
  bool chr_outside_1_to_n = false;               // 1)
  bool chr_outside_1_to_n_minus_1_and_i_notin = false;  // 2)
  bool radical_nilpotent = false;                // 3)
  bool two_sided_mathieu = false;                // 4)
  bool implications_hold = false;
  /// max over the radical of n * N, with N the first exponent from which all
  /// powers stay in M.
  std::uint64_t nilpotency_bound = 0;
  /// A^{nN} = 0 for every radical element (meaningful when 2) holds).
  bool bound_verified = false;
};

/// Evaluates the four predicates for a trace-zero m and checks 1)=>2)=>3)=>4).
PrelmReport prelm_chain_check(const MatrixSubspace& m);

/// The unique maximal left ideal inside m: { A : E_ij A in m for all i, j }.
MatrixSubspace max_left_ideal(const MatrixSubspace& m);

class NotLeftIdeal : public PreconditionViolated {
 public:
  NotLeftIdeal() : PreconditionViolated("subspace is not a left ideal") {}
};

struct RadNormalForm {
  DenseMatrix t;
  std::size_t k = 0;
  /// t diag(I_k, 0) t^-1, which generates the ideal.
  DenseMatrix idempotent;
};

/// t with t^-1 I t = { M : M e_{k+1} = ... = M e_n = 0 }.
RadNormalForm rad_normal_form(const MatrixSubspace& ideal);

struct RadReport {
  MatrixSubspace ideal;
  std::size_t k = 0;
  bool left_mathieu = false;                 // 1)
  bool ideal_contains_idempotents = false;   // 2)
  bool radicals_equal = false;               // 3)
  bool equivalent = false;
};

RadReport rad_equivalences(const MatrixSubspace& m);

struct Cor62Report {
  bool left_mathieu = false;
  bool two_sided_mathieu = false;
  bool field_larger_than_two = false;
  /// left => (two-sided and #K > 2).
  bool consistent = false;
};

/// Requires 0 < codim m < n.
Cor62Report cor62_check(const MatrixSubspace& m);

/// Idempotents of m by exhaustive enumeration.
std::vector<DenseMatrix> idempotents_of(const MatrixSubspace& m);

}  // namespace msub

#endif  // MSUB_MATHIEU_HPP
