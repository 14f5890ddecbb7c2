#include "doctest.h"
#include "oracles.hpp"

#include "msub/idempotent.hpp"
#include "msub/normalize.hpp"

using namespace msub;

namespace {

DenseMatrix E(Field f, std::size_t n, std::size_t i, std::size_t j) { return DenseMatrix::unit(f, n, i - 1, j - 1); }

// All idempotents of the given block form lying in m, by enumerating blocks.
std::vector<DenseMatrix> brute_family(const MatrixSubspace& m, std::size_t r, IdempotentForm form) {
  const Field f = m.field();
  const std::size_t n = m.n();
  const auto cons = oracle::brute_constraints(f, n, m.basis());
  std::vector<DenseMatrix> out;
  for (const auto& x : oracle::all_vectors(f, (n - r) * r)) {
    DenseMatrix e(f, n, n);
    if (form == IdempotentForm::upper)
      for (std::size_t i = 0; i < r; ++i) e(i, i) = Scalar::one(f);
    else
      for (std::size_t i = r; i < n; ++i) e(i, i) = Scalar::one(f);
    for (std::size_t i = 0; i < n - r; ++i)
      for (std::size_t j = 0; j < r; ++j) e(r + i, j) = x[i * r + j];
    bool in = true;
    for (const auto& c : cons) in = in && oracle::trace_product(c, e).is_zero();
    if (in) out.push_back(std::move(e));
  }
  return out;
}

std::vector<Scalar> coords_of(Field f, std::uint64_t idx, std::size_t len) {
  std::vector<Scalar> c(len, Scalar::zero(f));
  for (std::size_t k = len; k-- > 0;) {
    c[k] = Scalar(f, static_cast<long>(idx % f.characteristic()));
    idx /= f.characteristic();
  }
  return c;
}

}  // namespace

TEST_CASE("idempotent_family examples") {
  const Field f3 = Field::prime(3);
  const auto m = MatrixSubspace::span(f3, 2, {E(f3, 2, 1, 1), E(f3, 2, 2, 1), E(f3, 2, 2, 2)});
  const auto fam = idempotent_family(m, 1, IdempotentForm::upper);
  CHECK(fam.dim() == 1);
  CHECK(fam.dim() == lower_left_part(m, 1).dim());
  CHECK(fam.member_rank() == 1);
  for (long cval = 0; cval < 3; ++cval) {
    const std::vector<Scalar> coords{Scalar(f3, cval)};
    const DenseMatrix e = fam.member(coords);
    CHECK(e(0, 0).is_one());
    CHECK(e(0, 1).is_zero());
    CHECK(e(1, 1).is_zero());
    CHECK(is_idempotent(e));
  }

  const Field f5 = Field::prime(5);
  try {
    idempotent_family(MatrixSubspace::trace_zero(f5, 2), 1, IdempotentForm::upper);
    FAIL("expected HypothesisFailed");
  } catch (const HypothesisFailed& e) {
    CHECK(MatrixSubspace::scalars(f5, 2).contains(e.witness()));
    CHECK_FALSE(e.witness().is_zero());
  }

  const Field f2 = Field::prime(2);
  for (std::size_t r = 1; r < 3; ++r)
    for (auto form : {IdempotentForm::upper, IdempotentForm::lower})
      CHECK(idempotent_family(MatrixSubspace::full(f2, 3), r, form).dim() == (3 - r) * r);

  CHECK_THROWS_AS(idempotent_family(MatrixSubspace::full(f2, 3), 0, IdempotentForm::upper), std::out_of_range);
  CHECK_THROWS_AS(idempotent_family(MatrixSubspace::full(f2, 3), 3, IdempotentForm::upper), std::out_of_range);
}

TEST_CASE("families coincide with exhaustive enumeration over F2 and F3") {
  std::mt19937_64 rng(51);
  std::size_t checked = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = p == 2 ? 3 : 2;
      // Codimension at most 2 keeps the hypothesis satisfiable often enough.
      const auto c = oracle::random_subspace(f, n, 1 + trial % 2, rng);
      const auto m = constraint_space(c);
      for (std::size_t r = 1; r < n; ++r)
        for (auto form : {IdempotentForm::upper, IdempotentForm::lower}) {
          const auto brute = brute_family(m, r, form);
          AffineFamily fam;
          try {
            fam = idempotent_family(m, r, form);
          } catch (const HypothesisFailed& e) {
            // The witness is a constraint with vanishing rct.
            CHECK(c.contains(e.witness()));
            CHECK(is_rct_zero(e.witness(), r));
            continue;
          }
          ++checked;
          CHECK(brute.size() == oracle::ipow(p, fam.dim()));
          CHECK(fam.dim() == lower_left_part(m, r).dim());
          for (std::uint64_t idx = 0; idx < oracle::ipow(p, fam.dim()); ++idx) {
            const DenseMatrix e = fam.member(coords_of(f, idx, fam.dim()));
            CHECK(is_idempotent(e));
            CHECK(rank(e) == fam.member_rank());
            CHECK(m.contains(e));
          }
        }
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("lower form agrees with the transpose-and-reverse reduction") {
  std::mt19937_64 rng(52);
  const Field f = Field::prime(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3;
    const auto c = oracle::random_subspace(f, n, 1 + trial % 2, rng);
    const auto m = constraint_space(c);
    DenseMatrix rev(f, n, n);
    for (std::size_t i = 0; i < n; ++i) rev(i, n - 1 - i) = Scalar::one(f);
    // X -> J X^t J maps the lower form at r onto the upper form at n - r.
    std::vector<DenseMatrix> g;
    for (const auto& b : m.basis()) g.push_back(rev * b.transpose() * rev);
    const auto m_rev = MatrixSubspace::span(f, n, g);
    for (std::size_t r = 1; r < n; ++r) {
      bool lower_ok = true, upper_ok = true;
      std::size_t lower_dim = 0, upper_dim = 0;
      try {
        lower_dim = idempotent_family(m, r, IdempotentForm::lower).dim();
      } catch (const HypothesisFailed&) {
        lower_ok = false;
      }
      try {
        upper_dim = idempotent_family(m_rev, n - r, IdempotentForm::upper).dim();
      } catch (const HypothesisFailed&) {
        upper_ok = false;
      }
      CHECK(lower_ok == upper_ok);
      if (lower_ok && upper_ok) CHECK(lower_dim == upper_dim);
    }
  }
}

TEST_CASE("full_space_certificate examples") {
  const Field f3 = Field::prime(3);
  const auto cert = full_space_certificate(MatrixSubspace::full(f3, 2), 1);
  CHECK(cert.e == E(f3, 2, 1, 1));
  CHECK(cert.e_prime == E(f3, 2, 2, 2));
  CHECK(is_unipotent(cert.e + cert.e_prime));

  const auto m = MatrixSubspace::span(f3, 2, {E(f3, 2, 1, 1), E(f3, 2, 2, 1), E(f3, 2, 2, 2)});
  try {
    full_space_certificate(m, 1);
    FAIL("expected HypothesisFailed");
  } catch (const HypothesisFailed& e) {
    CHECK(is_rct_zero(e.witness(), 1));
    CHECK_FALSE(MatrixSubspace::scalars(f3, 2).contains(e.witness()));
  }

  CHECK_THROWS_AS(full_space_certificate(MatrixSubspace::trace_zero(f3, 3), 1), PreconditionViolated);

  const auto m3 = constraint_space(oracle::running_example(f3));
  const auto main2 = apply_main2(m3);
  const auto conj = conjugate(m3, main2.t);
  const auto c2 = full_space_certificate(conj, main2.r);
  const DenseMatrix n3 = c2.e + c2.e_prime - DenseMatrix::identity(f3, 3);
  CHECK((n3 * n3 * n3).is_zero());
  CHECK(conj.contains(c2.e));
  CHECK(conj.contains(c2.e_prime));
  CHECK(rank(c2.e) == main2.r);
  CHECK(rank(c2.e_prime) == 3 - main2.r);
}

TEST_CASE("certificates on random spaces satisfy the decomposition") {
  std::mt19937_64 rng(53);
  const Field f = Field::prime(7);
  std::size_t built = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 2;
    const auto c = oracle::random_subspace(f, n, 1 + trial % (n - 1), rng);
    if (c.contains_identity() || c.dim() >= n) continue;
    const auto m = constraint_space(c);
    const auto main2 = apply_main2(m);
    const auto conj = conjugate(m, main2.t);
    const auto cert = full_space_certificate(conj, main2.r);
    ++built;
    const DenseMatrix s = cert.e + cert.e_prime;
    CHECK(is_nilpotent(s - DenseMatrix::identity(f, n)));
    const DenseMatrix si = invert(s);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const DenseMatrix a = DenseMatrix::unit(f, n, i, j);
        CHECK(a * si * cert.e + a * si * cert.e_prime == a);
      }
  }
  CHECK(built > 10);
}
