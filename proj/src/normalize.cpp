#include "msub/normalize.hpp"

#include "msub/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace msub {

const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::generic_vector: return "generic_vector";
    case MoveKind::unit_triangular: return "unit_triangular";
    case MoveKind::permutation: return "permutation";
  }
  return "?";
}

const char* to_string(Branch b) { return b == Branch::double_pass ? "double_pass" : "single_pass"; }

std::string describe_log(const std::vector<Move>& log) {
  std::ostringstream os;
  for (std::size_t i = 0; i < log.size(); ++i) {
    os << "  #" << i << " " << to_string(log[i].kind) << " k=" << log[i].level << " T=" << log[i].t << "\n";
  }
  return os.str();
}

bool zeroL_condition(const MatrixSubspace& c_n, std::size_t j, std::size_t k) {
  const std::size_t n = c_n.n();
  if (j < 1 || j > n || k < 1 || k > n) throw std::out_of_range("index out of range");
  const MatrixSubspace level = filtration_level(c_n, j);
  const std::size_t col_dim = column_space(level, unit_vector(c_n.field(), n, j - 1)).dim();
  return col_dim >= generic_rank_univariate(level, k, j);
}

namespace {

std::size_t col_dim(const MatrixSubspace& c_n, std::size_t k) {
  return column_space(filtration_level(c_n, k), unit_vector(c_n.field(), c_n.n(), k - 1)).dim();
}

MoveOutcome identity_move(const MatrixSubspace& c_n) {
  return {DenseMatrix::identity(c_n.field(), c_n.n()), c_n};
}

}  // namespace

MoveOutcome move_generic_vector(const MatrixSubspace& c_n, std::size_t k, GenericForm form) {
  const std::size_t n = c_n.n();
  const Field f = c_n.field();
  if (k < 1 || k > n) throw std::out_of_range("level must lie in 1..n");
  const std::size_t d = generic_rank_of_action(filtration_level(c_n, k));
  if (col_dim(c_n, k) == d) return identity_move(c_n);

  const bool pivot = form == GenericForm::pivot_column;
  const Vector v = find_generic_vector(c_n, k, pivot);
  DenseMatrix t = DenseMatrix::identity(f, n);
  t.set_col(k - 1, v);
  if (v[k - 1].is_zero()) {
    // v_k = 0: move e_k into the slot of the last nonzero coordinate of v so
    // that the columns stay a basis. Columns right of k remain untouched.
    std::size_t p = k - 1;
    while (p > 0 && v[p - 1].is_zero()) --p;
    if (p == 0) throw InternalError("generic vector is zero");
    t.set_col(p - 1, unit_vector(f, n, k - 1));
  }
  MatrixSubspace out = conjugate(c_n, t);
  if (col_dim(out, k) != d) {
    throw InternalError("generic-vector move at level " + std::to_string(k) + " did not reach d_k");
  }
  return {std::move(t), std::move(out)};
}

MoveOutcome move_unit_triangular(const MatrixSubspace& c_n, std::size_t k) {
  const std::size_t n = c_n.n();
  const Field f = c_n.field();
  if (k < 1 || k > n) throw std::out_of_range("level must lie in 1..n");
  const VectorSubspace cs = column_space(filtration_level(c_n, k), unit_vector(f, n, k - 1));
  // RREF rows have pairwise distinct leading positions; each becomes the
  // diagonal column of T at its leading position, keeping T lower triangular.
  DenseMatrix t = DenseMatrix::identity(f, n);
  const auto pivots = cs.pivots();
  for (std::size_t r = cs.dim(); r > 0; --r) {
    const Vector w = cs.basis().row(r - 1);
    if (!w[pivots[r - 1]].is_one()) throw InternalError("RREF basis vector without unit leading entry");
    t.set_col(pivots[r - 1], w);
  }
  if (t == DenseMatrix::identity(f, n)) return identity_move(c_n);
  MatrixSubspace out = conjugate(c_n, t);
  std::vector<Vector> units;
  for (auto p : pivots) units.push_back(unit_vector(f, n, p));
  if (!(column_space(filtration_level(out, k), unit_vector(f, n, k - 1)) == VectorSubspace::span(f, n, units))) {
    throw InternalError("unit-triangular move at level " + std::to_string(k) + " left C_k e_k non-unit");
  }
  return {std::move(t), std::move(out)};
}

MoveOutcome move_permutation(const MatrixSubspace& c_n, std::size_t k) {
  const std::size_t n = c_n.n();
  const Field f = c_n.field();
  if (k < 1 || k > n) throw std::out_of_range("level must lie in 1..n");
  const VectorSubspace cs = column_space(filtration_level(c_n, k), unit_vector(f, n, k - 1));
  std::vector<int> col(n, 0);
  for (std::size_t r = 0; r < cs.dim(); ++r)
    for (std::size_t i = 0; i < n; ++i)
      if (!cs.basis()(r, i).is_zero()) col[i] = 1;

  std::size_t s = 0;  // 1-based; 0 when no one sits above the diagonal
  for (std::size_t i = 1; i < k; ++i)
    if (col[i - 1] == 1) s = i;
  if (s == 0) return identity_move(c_n);

  // Stable partition of coordinates 1..s: ones first, then zeros.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < s; ++i)
    if (col[i] == 1) order.push_back(i);
  for (std::size_t i = 0; i < s; ++i)
    if (col[i] == 0) order.push_back(i);
  DenseMatrix p = DenseMatrix::identity(f, n);
  for (std::size_t i = 0; i < s; ++i) {
    p(i, i) = Scalar::zero(f);
  }
  for (std::size_t pos = 0; pos < s; ++pos) p(pos, order[pos]) = Scalar::one(f);
  if (p == DenseMatrix::identity(f, n)) return identity_move(c_n);
  DenseMatrix t = p.transpose();  // P^-1
  MatrixSubspace out = conjugate(c_n, t);
  return {std::move(t), std::move(out)};
}

bool rows_increasing(const BinaryProfile& p) {
  for (std::size_t i = 0; i < p.n; ++i)
    for (std::size_t j = 1; j < p.n; ++j)
      if (p.B[i][j] == 0 && p.B[i][j - 1] != 0) return false;
  return true;
}

bool columns_decreasing_above_diagonal(const BinaryProfile& p) {
  // 1-based: B_ij = 0 implies B_(i+1)j = 0 whenever i + 1 < j.
  for (std::size_t j = 1; j <= p.n; ++j)
    for (std::size_t i = 1; i + 1 < j; ++i)
      if (p.at(i, j) == 0 && p.at(i + 1, j) != 0) return false;
  return true;
}

std::vector<std::string> main3_violations(const BinaryProfile& p, Field f, bool identity_in_c_n) {
  std::vector<std::string> out;
  const std::size_t n = p.n;
  for (std::size_t j = 1; j <= n; ++j) {
    if (p.b_at(j) != p.col_dim_at(j) || p.col_dim_at(j) != p.d.at(j)) {
      out.push_back("b_j = dim C_j e_j = d_j fails at j = " + std::to_string(j));
    }
  }
  if (!rows_increasing(p)) out.emplace_back("B is not increasing in every row");
  if (n >= 2) {
    const std::size_t m = std::min(p.b_at(n - 1), n - 1);
    if (f.has_at_least(m + 1) && !columns_decreasing_above_diagonal(p)) {
      out.emplace_back("B is not decreasing above the diagonal although #K > min{b_(n-1), n-1}");
    }
    if (identity_in_c_n) {
      if (!(p.b_at(n) > m)) out.emplace_back("b_n > min{b_(n-1), n-1} fails");
      if (p.at(n - 1, n) < p.at(n, n - 1)) out.emplace_back("B_(n-1)n >= B_n(n-1) fails");
      if (p.b_at(n) <= n - 1 && !(p.b_at(n - 1) < p.d.at(n))) out.emplace_back("b_(n-1) < d_n fails");
    }
  }
  return out;
}

NormalizationResult normalize_main3(const MatrixSubspace& c_n) {
  const std::size_t n = c_n.n();
  const Field f = c_n.field();
  const std::size_t d_n = generic_rank_of_action(c_n);
  if (!f.has_at_least(d_n)) {
    throw FieldTooSmall(d_n, "normalization needs #K >= d_n = " + std::to_string(d_n) + " over " + f.name());
  }

  NormalizationResult res{DenseMatrix::identity(f, n), c_n, {}, Branch::single_pass, {}};
  auto apply = [&](MoveKind kind, std::size_t k, MoveOutcome mv) {
    if (mv.t == DenseMatrix::identity(f, n)) return;
    res.t_total = res.t_total * mv.t;
    res.c_n_final = std::move(mv.c_n);
    res.log.push_back({kind, k, std::move(mv.t)});
  };
  auto fail = [&](const std::string& what) {
    throw InternalError("normalization invariant violated: " + what + "\nmove log:\n" + describe_log(res.log));
  };

  if (n == 0) {
    res.profile = binary_profile(c_n);
    return res;
  }

  apply(MoveKind::generic_vector, n, move_generic_vector(res.c_n_final, n, GenericForm::pass_one));

  // The branch is fixed once: d_(n-1) no longer changes after the first move.
  const std::size_t d_prev = n >= 2 ? generic_rank_of_action(filtration_level(res.c_n_final, n - 1)) : 0;
  res.branch = f.has_at_least(std::min(d_prev, n - 1) + 1) ? Branch::single_pass : Branch::double_pass;

  if (res.branch == Branch::double_pass) {
    for (std::size_t k = n - 1; k >= 1; --k) {
      apply(MoveKind::generic_vector, k, move_generic_vector(res.c_n_final, k, GenericForm::pass_one));
    }
    for (std::size_t k = n; k >= 1; --k) {
      apply(MoveKind::unit_triangular, k, move_unit_triangular(res.c_n_final, k));
    }
  } else {
    for (std::size_t k = n; k >= 1; --k) {
      if (k < n) {
        const std::size_t d_k = generic_rank_of_action(filtration_level(res.c_n_final, k));
        const GenericForm form = d_k == n ? GenericForm::pass_one : GenericForm::pivot_column;
        apply(MoveKind::generic_vector, k, move_generic_vector(res.c_n_final, k, form));
      }
      apply(MoveKind::unit_triangular, k, move_unit_triangular(res.c_n_final, k));
      apply(MoveKind::permutation, k, move_permutation(res.c_n_final, k));
    }
  }

  res.profile = binary_profile(res.c_n_final);
  if (!(conjugate(c_n, res.t_total) == res.c_n_final)) fail("accumulated conjugator does not replay the moves");
  if (res.profile.d[n] != d_n) fail("d_n changed");
  const auto violations = main3_violations(res.profile, f, c_n.contains_identity());
  if (!violations.empty()) fail(violations.front());
  return res;
}

bool main2_conclusion_holds(const MatrixSubspace& c, std::size_t r) {
  const std::size_t n = c.n();
  if (r < 1 || r + 1 > n) throw std::out_of_range("r must lie in 1..n-1");
  const MatrixSubspace c_n = sum(c, MatrixSubspace::scalars(c.field(), n));
  return block_zero_subspace(c_n, 0, r, r, n - r) == MatrixSubspace::scalars(c.field(), n);
}

Main2Certificate apply_main2(const MatrixSubspace& m) {
  const std::size_t n = m.n();
  const Field f = m.field();
  const MatrixSubspace c = constraint_space(m);
  if (c.contains_identity()) throw PreconditionViolated("the identity lies in the constraint space");
  if (c.dim() == 0 || c.dim() >= n) {
    throw PreconditionViolated("constraint space dimension " + std::to_string(c.dim()) + " is not in 1..n-1");
  }
  const MatrixSubspace c_n = sum(c, MatrixSubspace::scalars(f, n));
  const NormalizationResult res = normalize_main3(c_n);
  const std::size_t d_n = res.profile.d[n];
  if (d_n < 2 || d_n > n) throw InternalError("generic dimension of C + K I outside 2..n");
  const std::size_t r = d_n - 1;
  if (!main2_conclusion_holds(conjugate(c, res.t_total), r)) {
    throw InternalError("rct is not injective after normalization (r = " + std::to_string(r) + ")\nmove log:\n" +
                        describe_log(res.log));
  }
  return {res.t_total, r};
}

}  // namespace msub
