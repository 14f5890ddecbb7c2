#ifndef MSUB_EXACTCORE_HPP
#define MSUB_EXACTCORE_HPP

// Exact scalars (prime fields and arbitrary precision rationals) and dense
// exact linear algebra over them.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace msub {

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

/// The base field K: either F_p for a prime p < 2^31, or Q.
class Field {
 public:
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  static Field rationals() { return Field(0); }

  bool is_prime_field() const { return p_ != 0; }
  bool is_rationals() const { return p_ == 0; }
  /// p for F_p, 0 for Q.
  std::uint32_t characteristic() const { return p_; }
  /// Number of elements; nullopt for Q.
  std::optional<std::uint64_t> size() const;
  /// #K >= count, treating Q as infinite.
  bool has_at_least(std::uint64_t count) const;

  std::string name() const;

  friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, Field f);

/// An element of a Field in canonical form: a residue in [0, p) or a reduced
/// fraction. Structural equality is field equality.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), value_(mpq_class(0)) {}
  Scalar(Field f, long v);
  /// num/den reduced into the field. Throws std::domain_error if den is zero
  /// in the field.
  Scalar(Field f, const mpz_class& num, const mpz_class& den);

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  /// The idx-th element in canonical order: residues 0,1,...,p-1 for F_p, the
  /// integers 0,1,2,... for Q.
  static Scalar element(Field f, std::uint64_t idx);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p); only valid over a prime field.
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  /// Rational value; only valid over Q.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Canonical total order (residue order for F_p, numeric order for Q).
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void check_same_field(const Scalar& o) const;

  Field field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Vector = std::vector<Scalar>;

Vector zero_vector(Field f, std::size_t n);
Vector unit_vector(Field f, std::size_t n, std::size_t i);
bool is_zero_vector(std::span<const Scalar> v);

/// Row-major dense matrix over a single field.
class DenseMatrix {
 public:
  DenseMatrix() : field_(Field::rationals()) {}
  DenseMatrix(Field f, std::size_t rows, std::size_t cols);
  /// Throws DimensionMismatch if entries.size() != rows * cols.
  DenseMatrix(Field f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static DenseMatrix identity(Field f, std::size_t n);
  /// E_{ij}: the n x n matrix unit (0-based indices).
  static DenseMatrix unit(Field f, std::size_t n, std::size_t i, std::size_t j);
  /// Integer entries reduced into the field, given row by row.
  static DenseMatrix from_ints(Field f, const std::vector<std::vector<long>>& rows);
  static DenseMatrix from_rows(Field f, const std::vector<Vector>& rows);
  static DenseMatrix column(std::span<const Scalar> v);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Scalar>& entries() const { return entries_; }
  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  void set_col(std::size_t j, std::span<const Scalar> v);
  void swap_rows(std::size_t a, std::size_t b);

  bool is_zero() const;
  Scalar trace() const;
  DenseMatrix transpose() const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  DenseMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Vertical concatenation; column counts must agree.
  DenseMatrix stacked(const DenseMatrix& below) const;
  DenseMatrix pow(std::uint64_t e) const;

  DenseMatrix& operator+=(const DenseMatrix& o);
  DenseMatrix& operator-=(const DenseMatrix& o);
  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(const Scalar& s, DenseMatrix a);
  friend Vector operator*(const DenseMatrix& a, std::span<const Scalar> v);

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) = default;
  /// Lexicographic comparison of row-major entries (same shape assumed).
  friend bool lex_less(const DenseMatrix& a, const DenseMatrix& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

std::ostream& operator<<(std::ostream& os, const DenseMatrix& m);

struct RrefResult {
  DenseMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const DenseMatrix& m);
std::size_t rank(const DenseMatrix& m);

/// Inverse of a square matrix; throws SingularMatrix if rank < n.
DenseMatrix invert(const DenseMatrix& m);
std::optional<DenseMatrix> try_invert(const DenseMatrix& m);

/// A subspace of K^ambient_dim stored as its canonical RREF basis, so equality
/// is structural.
class VectorSubspace {
 public:
  VectorSubspace() : basis_(Field::rationals(), 0, 0) {}
  static VectorSubspace zero(Field f, std::size_t ambient_dim);
  static VectorSubspace full(Field f, std::size_t ambient_dim);
  /// Row span of `rows`.
  static VectorSubspace row_span(const DenseMatrix& rows);
  static VectorSubspace span(Field f, std::size_t ambient_dim, const std::vector<Vector>& vectors);

  Field field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  /// RREF basis, one vector per row, no zero rows.
  const DenseMatrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const;
  std::vector<std::size_t> pivots() const;

  bool contains(std::span<const Scalar> v) const;
  bool contains(const VectorSubspace& o) const;

  friend bool operator==(const VectorSubspace& a, const VectorSubspace& b) = default;

 private:
  explicit VectorSubspace(DenseMatrix basis) : basis_(std::move(basis)) {}
  DenseMatrix basis_;
};

/// {v : m v = 0}.
VectorSubspace kernel(const DenseMatrix& m);

struct AffineSolution {
  Vector particular;
  VectorSubspace directions;
};

/// All solutions of a x = b as particular + directions; nullopt when the system
/// is inconsistent.
std::optional<AffineSolution> solve_affine(const DenseMatrix& a, std::span<const Scalar> b);

bool member(const VectorSubspace& v, std::span<const Scalar> x);
VectorSubspace sum(const VectorSubspace& v, const VectorSubspace& w);
VectorSubspace intersect(const VectorSubspace& v, const VectorSubspace& w);
bool equals(const VectorSubspace& v, const VectorSubspace& w);

}  // namespace msub

#endif  // MSUB_EXACTCORE_HPP
