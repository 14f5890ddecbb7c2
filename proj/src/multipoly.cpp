#include "msub/multipoly.hpp"

#include <sstream>

namespace msub {

MultiPoly MultiPoly::constant(Field f, std::size_t nvars, const Scalar& c) {
  MultiPoly p(f, nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(Field f, std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::out_of_range("variable index out of range");
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(f, e, Scalar::one(f));
}

MultiPoly MultiPoly::monomial(Field f, const Exponent& e, const Scalar& c) {
  MultiPoly p(f, e.size());
  p.add_term(e, c);
  return p;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int td = 0;
    for (auto x : e) td += static_cast<int>(x);
    d = std::max(d, td);
  }
  return d;
}

bool MultiPoly::is_homogeneous() const {
  const int d = degree();
  for (const auto& [e, c] : terms_) {
    int td = 0;
    for (auto x : e) td += static_cast<int>(x);
    if (td != d) return false;
  }
  return true;
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != nvars_) throw DimensionMismatch("exponent arity mismatch");
  if (!(c.field() == field_)) throw FieldMismatch("coefficient from a different field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluation point arity mismatch");
  Scalar acc = Scalar::zero(field_);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < nvars_ && !t.is_zero(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch("polynomials over different fields");
  if (nvars_ != o.nvars_) throw DimensionMismatch("polynomials in different numbers of variables");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(field_, nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.field_, a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly operator*(const Scalar& s, const MultiPoly& a) {
  MultiPoly r(a.field_, a.nvars_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
  return r;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  // Leading-term division in lex order: when the division is exact, the
  // leading monomial of the divisor divides that of every intermediate
  // remainder.
  const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
  const Scalar lead_inv = lead_c.inverse();
  MultiPoly rem = *this;
  MultiPoly quot(field_, nvars_);
  Exponent qe(nvars_);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (re[i] < lead_e[i]) {
        throw InexactDivision("polynomial division leaves a remainder: " + to_string() + " / " +
                              divisor.to_string());
      }
      qe[i] = re[i] - lead_e[i];
    }
    const MultiPoly t = monomial(field_, qe, rc * lead_inv);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool has_var = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      mono << (has_var ? "*" : "") << "x" << (i + 1);
      if (e[i] > 1) mono << "^" << e[i];
      has_var = true;
    }
    if (!has_var) {
      os << c;
    } else if (c.is_one()) {
      os << mono.str();
    } else {
      os << c << "*" << mono.str();
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

MultiPoly add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
MultiPoly scalar_mul(const Scalar& s, const MultiPoly& a) { return s * a; }
Scalar evaluate(const MultiPoly& f, std::span<const Scalar> point) { return f.evaluate(point); }

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(Field f, std::size_t nvars, std::size_t rows, std::size_t cols)
    : field_(f), nvars_(nvars), rows_(rows), cols_(cols), entries_(rows * cols, MultiPoly(f, nvars)) {}

PolyMatrix PolyMatrix::from_constant(const DenseMatrix& m, std::size_t nvars) {
  PolyMatrix p(m.field(), nvars, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = MultiPoly::constant(m.field(), nvars, m(i, j));
  return p;
}

DenseMatrix PolyMatrix::evaluate(std::span<const Scalar> point) const {
  DenseMatrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).evaluate(point);
  return m;
}

std::size_t poly_matrix_rank(const PolyMatrix& m) {
  PolyMatrix a = m;
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();
  MultiPoly prev = MultiPoly::constant(a.field(), a.nvars(), Scalar::one(a.field()));
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && a(piv, c).is_zero()) ++piv;
    if (piv == nr) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < nc; ++j) std::swap(a(r, j), a(piv, j));
    }
    // Every updated entry is a minor of the original matrix, so the division
    // by the previous pivot is exact.
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        MultiPoly num = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        a(i, j) = num.exact_div(prev);
      }
      a(i, c) = MultiPoly(a.field(), a.nvars());
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

std::optional<Vector> find_nonvanishing(const MultiPoly& f, std::span<const Scalar> s) {
  const std::size_t nv = f.nvars();
  if (f.is_zero() || s.empty()) return std::nullopt;
  std::vector<std::size_t> idx(nv, 0);
  Vector point(nv, s.front());
  while (true) {
    for (std::size_t i = 0; i < nv; ++i) point[i] = s[idx[i]];
    if (!f.evaluate(point).is_zero()) return point;
    std::size_t pos = nv;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < s.size()) break;
      idx[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
    if (nv == 0) return std::nullopt;
  }
}

PolyMatrix action_matrix(const MatrixSubspace& v) {
  const Field f = v.field();
  const std::size_t n = v.n();
  const auto basis = v.basis();
  PolyMatrix m(f, n, n, basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    for (std::size_t i = 0; i < n; ++i) {
      MultiPoly entry(f, n);
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& c = basis[col](i, j);
        if (!c.is_zero()) entry += c * MultiPoly::variable(f, n, j);
      }
      m(i, col) = std::move(entry);
    }
  }
  return m;
}

std::size_t generic_rank_of_action(const MatrixSubspace& v) {
  if (v.dim() == 0) return 0;
  return poly_matrix_rank(action_matrix(v));
}

std::size_t generic_rank_univariate(const MatrixSubspace& v, std::size_t k, std::size_t j) {
  const std::size_t n = v.n();
  if (k < 1 || k > n || j < 1 || j > n) throw std::out_of_range("coordinate index out of range");
  if (v.dim() == 0) return 0;
  const Field f = v.field();
  const auto basis = v.basis();
  const MultiPoly x = MultiPoly::variable(f, 1, 0);
  PolyMatrix m(f, 1, n, basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    for (std::size_t i = 0; i < n; ++i) {
      m(i, col) = MultiPoly::constant(f, 1, basis[col](i, k - 1)) + basis[col](i, j - 1) * x;
    }
  }
  return poly_matrix_rank(m);
}

}  // namespace msub
