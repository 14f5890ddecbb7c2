#include "doctest.h"
#include "oracles.hpp"

#include "msub/multipoly.hpp"

using namespace msub;

namespace {

MultiPoly x(Field f, std::size_t nvars, std::size_t i) { return MultiPoly::variable(f, nvars, i); }
MultiPoly c(Field f, std::size_t nvars, long v) { return MultiPoly::constant(f, nvars, Scalar(f, v)); }

Vector pt(Field f, std::initializer_list<long> xs) {
  Vector v;
  for (long a : xs) v.emplace_back(f, a);
  return v;
}

MultiPoly random_poly(Field f, std::size_t nvars, int max_deg, int terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> coef(-4, 4);
  MultiPoly p(f, nvars);
  for (int t = 0; t < terms; ++t) {
    Exponent e(nvars, 0);
    for (auto& a : e) a = static_cast<std::uint32_t>(deg(rng));
    p.add_term(e, Scalar(f, coef(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic examples") {
  const Field q = Field::rationals();
  const auto x1 = x(q, 2, 0), x2 = x(q, 2, 1);
  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);

  const Field f2 = Field::prime(2);
  const auto f = x(f2, 2, 0) * x(f2, 2, 1) + c(f2, 2, 1);
  CHECK(evaluate(f, pt(f2, {1, 1})).is_zero());
  CHECK(add(f, MultiPoly(f2, 2)) == f);
  CHECK(mul(f, c(f2, 2, 1)) == f);
  CHECK(scalar_mul(Scalar::zero(f2), f).is_zero());
}

TEST_CASE("degree and homogeneity") {
  const Field f = Field::prime(5);
  CHECK(MultiPoly(f, 3).degree() == -1);
  const auto p = x(f, 3, 0) * x(f, 3, 1) + x(f, 3, 2) * x(f, 3, 2);
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK_FALSE((p + c(f, 3, 1)).is_homogeneous());
  // 4 x1 + x1 = 0 over F5: no zero coefficients stay behind.
  auto z = scalar_mul(Scalar(f, 4), x(f, 3, 0)) + x(f, 3, 0);
  CHECK(z.is_zero());
  CHECK(z.terms().empty());
}

TEST_CASE("ring laws and evaluation homomorphism on random polynomials") {
  std::mt19937_64 rng(21);
  for (Field f : {Field::prime(3), Field::prime(7), Field::rationals()}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_poly(f, 3, 2, 4, rng);
      const auto b = random_poly(f, 3, 2, 3, rng);
      const auto d = random_poly(f, 3, 1, 3, rng);
      CHECK(a * b == b * a);
      CHECK(a * (b + d) == a * b + a * d);
      CHECK(a - a == MultiPoly(f, 3));
      const Vector point = pt(f, {trial % 3, 2, -1});
      CHECK(evaluate(a * b, point) == evaluate(a, point) * evaluate(b, point));
      CHECK(evaluate(a + b, point) == evaluate(a, point) + evaluate(b, point));
      if (!b.is_zero()) CHECK((a * b).exact_div(b) == a);
    }
  }
}

TEST_CASE("exact division rejects remainders") {
  const Field q = Field::rationals();
  const auto x1 = x(q, 2, 0), x2 = x(q, 2, 1);
  CHECK_THROWS_AS((x1 * x1 + x2).exact_div(x1), InexactDivision);
  CHECK_THROWS_AS(x1.exact_div(MultiPoly(q, 2)), std::domain_error);
  CHECK((x1 * x1 - x2 * x2).exact_div(x1 + x2) == x1 - x2);
}

TEST_CASE("poly_matrix_rank examples") {
  const Field q = Field::rationals();
  PolyMatrix d(q, 3, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) d(i, i) = x(q, 3, i);
  CHECK(poly_matrix_rank(d) == 3);

  const Field f2 = Field::prime(2);
  const auto x1 = x(f2, 3, 0), x2 = x(f2, 3, 1), x3 = x(f2, 3, 2);
  PolyMatrix m(f2, 3, 3, 3);
  m(0, 0) = x2;
  m(1, 0) = x2;
  m(1, 1) = x2 + x3;
  m(0, 2) = x1;
  m(1, 2) = x2;
  m(2, 2) = x3;
  CHECK(poly_matrix_rank(m) == 3);
  std::vector<std::vector<MultiPoly>> grid(3, std::vector<MultiPoly>(3, MultiPoly(f2, 3)));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) grid[i][j] = m(i, j);
  CHECK(oracle::det(grid, f2, 3) == x3 * x2 * (x2 + x3));

  PolyMatrix prop(q, 2, 2, 2);
  prop(0, 0) = x(q, 2, 0);
  prop(1, 0) = x(q, 2, 1);
  prop(0, 1) = scalar_mul(Scalar(q, 2), x(q, 2, 0));
  prop(1, 1) = scalar_mul(Scalar(q, 2), x(q, 2, 1));
  CHECK(poly_matrix_rank(prop) == 1);
}

TEST_CASE("poly_matrix_rank of constant matrices matches dense rank") {
  std::mt19937_64 rng(22);
  for (Field f : {Field::prime(2), Field::prime(5), Field::rationals()}) {
    for (int trial = 0; trial < 30; ++trial) {
      const DenseMatrix m = oracle::random_matrix(f, 1 + trial % 4, 1 + (trial / 4) % 4, rng, 0, 2);
      CHECK(poly_matrix_rank(PolyMatrix::from_constant(m, 2)) == rank(m));
    }
  }
}

TEST_CASE("find_nonvanishing examples") {
  const Field f2 = Field::prime(2);
  const Vector s2 = pt(f2, {0, 1});
  auto w = find_nonvanishing(x(f2, 2, 0), s2);
  REQUIRE(w);
  CHECK((*w)[0].is_one());

  const auto x1 = x(f2, 1, 0);
  CHECK_FALSE(find_nonvanishing(x1 * x1 + x1, s2));

  const Field f3 = Field::prime(3);
  const auto y2 = x(f3, 3, 1), y3 = x(f3, 3, 2);
  const auto f = y3 * y2 * (y2 + y3);
  auto v = find_nonvanishing(f, pt(f3, {0, 1, 2}));
  REQUIRE(v);
  CHECK((*v)[1].is_one());
  CHECK((*v)[2].is_one());
  CHECK(f.evaluate(*v) == Scalar(f3, 2));

  CHECK_FALSE(find_nonvanishing(MultiPoly(f3, 2), pt(f3, {0, 1, 2})));
}

TEST_CASE("find_nonvanishing scans lexicographically") {
  const Field f5 = Field::prime(5);
  // Nonzero only where x1 = 2 and x2 = 3.
  MultiPoly f = c(f5, 2, 1);
  for (long a : {0, 1, 3, 4}) f = f * (x(f5, 2, 0) - c(f5, 2, a));
  for (long b : {0, 1, 2, 4}) f = f * (x(f5, 2, 1) - c(f5, 2, b));
  auto w = find_nonvanishing(f, pt(f5, {0, 1, 2, 3, 4}));
  REQUIRE(w);
  CHECK(*w == pt(f5, {2, 3}));
}

TEST_CASE("generic_rank_of_action examples") {
  const Field f5 = Field::prime(5);
  CHECK(generic_rank_of_action(MatrixSubspace::scalars(f5, 3)) == 1);
  CHECK(generic_rank_of_action(MatrixSubspace::zero(f5, 3)) == 0);

  const Field f2 = Field::prime(2);
  const auto c3 = sum(oracle::running_example(f2), MatrixSubspace::scalars(f2, 3));
  CHECK(generic_rank_of_action(c3) == 3);
  CHECK(generic_rank_of_action(oracle::running_example(f2)) == 2);
}

TEST_CASE("generic_rank_univariate examples") {
  const Field f5 = Field::prime(5);
  CHECK(generic_rank_univariate(MatrixSubspace::scalars(f5, 3), 1, 3) == 1);
  CHECK(generic_rank_univariate(MatrixSubspace::zero(f5, 3), 1, 3) == 0);
  const Field f2 = Field::prime(2);
  const auto c3 = sum(oracle::running_example(f2), MatrixSubspace::scalars(f2, 3));
  CHECK(generic_rank_univariate(c3, 2, 3) == 3);
}

TEST_CASE("generic rank bounds every specialization and is attained on a grid") {
  std::mt19937_64 rng(23);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t n = 2 + trial % 2;
      const auto v = oracle::random_subspace(f, n, 1 + trial % 3, rng);
      const std::size_t d = generic_rank_of_action(v);
      const auto basis = v.basis();
      std::size_t best = 0;
      for (const auto& point : oracle::all_vectors(f, n)) {
        DenseMatrix cols(f, n, basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) cols.set_col(i, basis[i] * std::span<const Scalar>(point));
        const std::size_t r = rank(cols);
        CHECK(r <= d);
        best = std::max(best, r);
      }
      if (f.has_at_least(d)) CHECK(best == d);
    }
  }
}

TEST_CASE("generic rank is basis independent") {
  std::mt19937_64 rng(24);
  const Field f = Field::prime(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<DenseMatrix> g;
    for (int i = 0; i < 3; ++i) g.push_back(oracle::random_matrix(f, 3, 3, rng));
    const auto v = MatrixSubspace::span(f, 3, g);
    const std::size_t d = generic_rank_of_action(v);
    // A shuffled, recombined generating set spans the same subspace.
    std::vector<DenseMatrix> h{g[0] + g[1], g[1] + Scalar(f, 2) * g[2], g[2]};
    const auto w = MatrixSubspace::span(f, 3, h);
    REQUIRE(w == v);
    PolyMatrix a(f, 3, 3, h.size());
    for (std::size_t c = 0; c < h.size(); ++c)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (!h[c](i, j).is_zero()) a(i, c) += scalar_mul(h[c](i, j), MultiPoly::variable(f, 3, j));
    CHECK(poly_matrix_rank(a) == d);
  }
}
