#ifndef MSUB_MULTIPOLY_HPP
#define MSUB_MULTIPOLY_HPP

// Sparse multivariate polynomials over K and exact rank computations over the
// rational function field K(x_1, ..., x_n).

#include "msub/exactcore.hpp"
#include "msub/matrix_subspace.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace msub {

/// Raised when an exact polynomial division leaves a remainder.
class InexactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Exponent = std::vector<std::uint32_t>;

/// Sparse polynomial in nvars variables. Terms are keyed by exponent vector in
/// lex order (x_1 > x_2 > ...); zero coefficients are never stored.
class MultiPoly {
 public:
  MultiPoly(Field f, std::size_t nvars) : field_(f), nvars_(nvars) {}

  static MultiPoly constant(Field f, std::size_t nvars, const Scalar& c);
  /// x_{i+1} (0-based variable index).
  static MultiPoly variable(Field f, std::size_t nvars, std::size_t i);
  static MultiPoly monomial(Field f, const Exponent& e, const Scalar& c);

  Field field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Max total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  /// Adds c * x^e to the polynomial.
  void add_term(const Exponent& e, const Scalar& c);

  Scalar evaluate(std::span<const Scalar> point) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Scalar& s, const MultiPoly& a);

  /// Quotient of an exact division; throws InexactDivision on a nonzero
  /// remainder and std::domain_error when dividing by zero.
  MultiPoly exact_div(const MultiPoly& divisor) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;

  Field field_;
  std::size_t nvars_;
  std::map<Exponent, Scalar> terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

MultiPoly add(const MultiPoly& a, const MultiPoly& b);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly scalar_mul(const Scalar& s, const MultiPoly& a);
Scalar evaluate(const MultiPoly& f, std::span<const Scalar> point);

/// Matrix of polynomials sharing a field and variable count.
class PolyMatrix {
 public:
  PolyMatrix(Field f, std::size_t nvars, std::size_t rows, std::size_t cols);
  /// Constant matrix embedded in K[x].
  static PolyMatrix from_constant(const DenseMatrix& m, std::size_t nvars);

  Field field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  MultiPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  DenseMatrix evaluate(std::span<const Scalar> point) const;

 private:
  Field field_;
  std::size_t nvars_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MultiPoly> entries_;
};

/// Rank over K(x) by fraction-free (Bareiss) elimination in K[x].
std::size_t poly_matrix_rank(const PolyMatrix& m);

/// First point of s^{x nvars} (lexicographic in the order of s) where f is
/// nonzero, or nullopt when f vanishes on the whole grid.
std::optional<Vector> find_nonvanishing(const MultiPoly& f, std::span<const Scalar> s);

/// The n x D matrix with columns C^(i) x for the canonical basis C^(i) of v.
PolyMatrix action_matrix(const MatrixSubspace& v);

/// dim over K(x) of the span of { C x : C in v }.
std::size_t generic_rank_of_action(const MatrixSubspace& v);

/// dim over K(x_j) of the span of { C (e_k + x_j e_j) : C in v }; k, j are
/// 1-based coordinate indices.
std::size_t generic_rank_univariate(const MatrixSubspace& v, std::size_t k, std::size_t j);

}  // namespace msub

#endif  // MSUB_MULTIPOLY_HPP
