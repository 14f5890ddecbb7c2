#include "msub/exactcore.hpp"

#include <algorithm>
#include <sstream>

namespace msub {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field Field::prime(std::uint32_t p) {
  if (p >= (1U << 31U) || !is_prime(p)) {
    throw std::invalid_argument("not a prime below 2^31: " + std::to_string(p));
  }
  return Field(p);
}

std::optional<std::uint64_t> Field::size() const {
  if (p_ == 0) return std::nullopt;
  return p_;
}

bool Field::has_at_least(std::uint64_t count) const { return p_ == 0 || p_ >= count; }

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

std::ostream& operator<<(std::ostream& os, Field f) { return os << f.name(); }

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(Field f, long v) : field_(f) {
  if (f.is_rationals()) {
    value_ = mpq_class(v);
  } else {
    const auto p = static_cast<long>(f.characteristic());
    long r = v % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint32_t>(r);
  }
}

Scalar::Scalar(Field f, const mpz_class& num, const mpz_class& den) : field_(f) {
  if (f.is_rationals()) {
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    value_ = std::move(q);
  } else {
    const std::uint32_t p = f.characteristic();
    const std::uint32_t d = reduce(den, p);
    if (d == 0) throw std::domain_error("denominator vanishes in " + f.name());
    value_ = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(reduce(num, p)) * mod_pow(d, p - 2, p) % p);
  }
}

Scalar Scalar::element(Field f, std::uint64_t idx) {
  if (f.is_prime_field() && idx >= f.characteristic()) {
    throw std::out_of_range("field element index out of range");
  }
  return Scalar(f, mpz_class(static_cast<unsigned long>(idx)), mpz_class(1));
}

bool Scalar::is_zero() const {
  if (field_.is_prime_field()) return std::get<std::uint32_t>(value_) == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime_field()) return std::get<std::uint32_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw FieldMismatch("scalar field mismatch: " + field_.name() + " vs " + o.field_.name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar r = *this;
  if (field_.is_prime_field()) {
    const std::uint32_t p = field_.characteristic();
    r.value_ = mod_pow(residue(), p - 2, p);
  } else {
    r.value_ = mpq_class(1) / rational();
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_prime_field()) {
    const std::uint32_t v = residue();
    r.value_ = v == 0 ? 0U : field_.characteristic() - v;
  } else {
    r.value_ = mpq_class(-rational());
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_prime_field()) {
    const std::uint64_t s = static_cast<std::uint64_t>(residue()) + o.residue();
    value_ = static_cast<std::uint32_t>(s % field_.characteristic());
  } else {
    std::get<mpq_class>(value_) += o.rational();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_prime_field()) {
    const std::uint32_t p = field_.characteristic();
    const std::uint64_t s = static_cast<std::uint64_t>(residue()) + p - o.residue();
    value_ = static_cast<std::uint32_t>(s % p);
  } else {
    std::get<mpq_class>(value_) -= o.rational();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_prime_field()) {
    const std::uint64_t s = static_cast<std::uint64_t>(residue()) * o.residue();
    value_ = static_cast<std::uint32_t>(s % field_.characteristic());
  } else {
    std::get<mpq_class>(value_) *= o.rational();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.is_prime_field()) return a.residue() == b.residue();
  return a.rational() == b.rational();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.field_.is_prime_field()) return a.residue() <=> b.residue();
  const int c = cmp(a.rational(), b.rational());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(residue());
  return rational().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Vector zero_vector(Field f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(Field f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero_vector(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// ---------------------------------------------------------------------------
// DenseMatrix

DenseMatrix::DenseMatrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {}

DenseMatrix::DenseMatrix(Field f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(f), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionMismatch("entry count does not match matrix shape");
  }
  for (const auto& s : entries_) {
    if (!(s.field() == f)) throw FieldMismatch("matrix entry from a different field");
  }
}

DenseMatrix DenseMatrix::identity(Field f, std::size_t n) {
  DenseMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

DenseMatrix DenseMatrix::unit(Field f, std::size_t n, std::size_t i, std::size_t j) {
  DenseMatrix m(f, n, n);
  m(i, j) = Scalar::one(f);
  return m;
}

DenseMatrix DenseMatrix::from_ints(Field f, const std::vector<std::vector<long>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.front().size();
  DenseMatrix m(f, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw DimensionMismatch("ragged integer matrix");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = Scalar(f, rows[i][j]);
  }
  return m;
}

DenseMatrix DenseMatrix::from_rows(Field f, const std::vector<Vector>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.front().size();
  std::vector<Scalar> entries;
  entries.reserve(nr * nc);
  for (const auto& r : rows) {
    if (r.size() != nc) throw DimensionMismatch("ragged row list");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return DenseMatrix(f, nr, nc, std::move(entries));
}

DenseMatrix DenseMatrix::column(std::span<const Scalar> v) {
  if (v.empty()) throw DimensionMismatch("empty column vector");
  return DenseMatrix(v.front().field(), v.size(), 1, std::vector<Scalar>(v.begin(), v.end()));
}

Vector DenseMatrix::row(std::size_t i) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector DenseMatrix::col(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void DenseMatrix::set_col(std::size_t j, std::span<const Scalar> v) {
  if (v.size() != rows_) throw DimensionMismatch("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void DenseMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

bool DenseMatrix::is_zero() const { return is_zero_vector(entries_); }

Scalar DenseMatrix::trace() const {
  if (!is_square()) throw DimensionMismatch("trace of a non-square matrix");
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix DenseMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  DenseMatrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

DenseMatrix DenseMatrix::stacked(const DenseMatrix& below) const {
  if (cols_ != below.cols_) throw DimensionMismatch("stacking matrices of different widths");
  if (!(field_ == below.field_)) throw FieldMismatch("stacking matrices over different fields");
  std::vector<Scalar> e = entries_;
  e.insert(e.end(), below.entries_.begin(), below.entries_.end());
  return DenseMatrix(field_, rows_ + below.rows_, cols_, std::move(e));
}

DenseMatrix DenseMatrix::pow(std::uint64_t e) const {
  if (!is_square()) throw DimensionMismatch("power of a non-square matrix");
  DenseMatrix result = identity(field_, rows_);
  DenseMatrix base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  if (!(a.field_ == b.field_)) throw FieldMismatch("matrix product over different fields");
  DenseMatrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

DenseMatrix operator*(const Scalar& s, DenseMatrix a) {
  for (auto& e : a.entries_) e *= s;
  return a;
}

Vector operator*(const DenseMatrix& a, std::span<const Scalar> v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector r = zero_vector(a.field_, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
  return r;
}

bool lex_less(const DenseMatrix& a, const DenseMatrix& b) {
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                      b.entries_.end());
}

std::string DenseMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DenseMatrix& m) { return os << m.to_string(); }

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref(const DenseMatrix& m) {
  RrefResult res{m, 0, {}};
  DenseMatrix& a = res.reduced;
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && a(piv, c).is_zero()) ++piv;
    if (piv == nr) continue;
    a.swap_rows(r, piv);
    const Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < nc; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c);
      for (std::size_t j = c; j < nc; ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
      }
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const DenseMatrix& m) { return rref(m).rank; }

std::optional<DenseMatrix> try_invert(const DenseMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  DenseMatrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  const RrefResult r = rref(aug);
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  return r.reduced.block(0, n, n, n);
}

DenseMatrix invert(const DenseMatrix& m) {
  auto inv = try_invert(m);
  if (!inv) throw SingularMatrix();
  return *std::move(inv);
}

// ---------------------------------------------------------------------------
// VectorSubspace

VectorSubspace VectorSubspace::zero(Field f, std::size_t ambient_dim) {
  return VectorSubspace(DenseMatrix(f, 0, ambient_dim));
}

VectorSubspace VectorSubspace::full(Field f, std::size_t ambient_dim) {
  return VectorSubspace(DenseMatrix::identity(f, ambient_dim));
}

VectorSubspace VectorSubspace::row_span(const DenseMatrix& rows) {
  const RrefResult r = rref(rows);
  return VectorSubspace(r.reduced.block(0, 0, r.rank, rows.cols()));
}

VectorSubspace VectorSubspace::span(Field f, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return zero(f, ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw DimensionMismatch("spanning vector has wrong length");
  }
  return row_span(DenseMatrix::from_rows(f, vectors));
}

std::vector<Vector> VectorSubspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

std::vector<std::size_t> VectorSubspace::pivots() const {
  std::vector<std::size_t> p;
  for (std::size_t i = 0; i < dim(); ++i) {
    std::size_t j = 0;
    while (basis_(i, j).is_zero()) ++j;
    p.push_back(j);
  }
  return p;
}

bool VectorSubspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("membership test with wrong vector length");
  // Reduce v against the RREF basis; it is a member iff the remainder vanishes.
  Vector rem(v.begin(), v.end());
  const auto piv = pivots();
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar c = rem[piv[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = piv[i]; j < ambient_dim(); ++j) rem[j] -= c * basis_(i, j);
  }
  return is_zero_vector(rem);
}

bool VectorSubspace::contains(const VectorSubspace& o) const {
  for (std::size_t i = 0; i < o.dim(); ++i) {
    if (!contains(o.basis_.row(i))) return false;
  }
  return true;
}

VectorSubspace kernel(const DenseMatrix& m) {
  const std::size_t nc = m.cols();
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(nc, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), nc);
    v[free] = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
    gens.push_back(std::move(v));
  }
  return VectorSubspace::span(m.field(), nc, gens);
}

std::optional<AffineSolution> solve_affine(const DenseMatrix& a, std::span<const Scalar> b) {
  if (a.rows() != b.size()) throw DimensionMismatch("right-hand side length mismatch");
  const std::size_t nc = a.cols();
  DenseMatrix aug(a.field(), a.rows(), nc + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < nc; ++j) aug(i, j) = a(i, j);
    aug(i, nc) = b[i];
  }
  const RrefResult r = rref(aug);
  if (r.rank > 0 && r.pivots.back() == nc) return std::nullopt;
  Vector x = zero_vector(a.field(), nc);
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, nc);
  return AffineSolution{std::move(x), kernel(a)};
}

namespace {
void check_compatible(const VectorSubspace& v, const VectorSubspace& w) {
  if (!(v.field() == w.field())) throw FieldMismatch("subspaces over different fields");
  if (v.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("subspaces of different ambient spaces");
}
}  // namespace

bool member(const VectorSubspace& v, std::span<const Scalar> x) { return v.contains(x); }

VectorSubspace sum(const VectorSubspace& v, const VectorSubspace& w) {
  check_compatible(v, w);
  return VectorSubspace::row_span(v.basis().stacked(w.basis()));
}

VectorSubspace intersect(const VectorSubspace& v, const VectorSubspace& w) {
  check_compatible(v, w);
  const Field f = v.field();
  const std::size_t n = v.ambient_dim();
  if (v.dim() == 0 || w.dim() == 0) return VectorSubspace::zero(f, n);
  // c with sum_i c_i v_i + sum_j c'_j w_j = 0; the v-part of c spans the meet.
  const DenseMatrix stacked = v.basis().stacked(w.basis()).transpose();
  const VectorSubspace rel = kernel(stacked);
  std::vector<Vector> gens;
  for (const auto& c : rel.basis_vectors()) {
    Vector x = zero_vector(f, n);
    for (std::size_t i = 0; i < v.dim(); ++i) {
      if (c[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) x[j] += c[i] * v.basis()(i, j);
    }
    gens.push_back(std::move(x));
  }
  return VectorSubspace::span(f, n, gens);
}

bool equals(const VectorSubspace& v, const VectorSubspace& w) {
  check_compatible(v, w);
  return v == w;
}

}  // namespace msub
