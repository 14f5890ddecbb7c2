#include "doctest.h"
#include "oracles.hpp"

#include "msub/exactcore.hpp"

using namespace msub;

namespace {

DenseMatrix ints(Field f, const std::vector<std::vector<long>>& rows) { return DenseMatrix::from_ints(f, rows); }

Vector vec(Field f, std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(f, x);
  return v;
}

}  // namespace

TEST_CASE("field construction") {
  CHECK(Field::prime(5).characteristic() == 5);
  CHECK(Field::rationals().characteristic() == 0);
  CHECK(Field::prime(2).size() == 2u);
  CHECK_FALSE(Field::rationals().size().has_value());
  CHECK(Field::rationals().has_at_least(1000000));
  CHECK_FALSE(Field::prime(3).has_at_least(4));
  CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
  CHECK(Field::prime(7).name() == "F7");
  CHECK(Field::rationals().name() == "Q");
}

TEST_CASE("scalar arithmetic is canonical") {
  const Field f5 = Field::prime(5);
  CHECK(Scalar(f5, -1) == Scalar(f5, 4));
  CHECK(Scalar(f5, 2).inverse() == Scalar(f5, 3));
  CHECK((Scalar(f5, 3) * Scalar(f5, 4)).residue() == 2);
  CHECK_THROWS(Scalar::zero(f5).inverse());

  const Field q = Field::rationals();
  const Scalar half(q, mpz_class(2), mpz_class(4));
  CHECK(half.rational() == mpq_class(1, 2));
  CHECK(half + half == Scalar::one(q));
  CHECK(Scalar(q, mpz_class(3), mpz_class(-6)) == -half);
  CHECK_THROWS_AS(Scalar(f5, mpz_class(1), mpz_class(5)), std::domain_error);
  CHECK(Scalar(f5, mpz_class(1), mpz_class(2)) == Scalar(f5, 3));

  CHECK_THROWS_AS(Scalar(f5, 1) + Scalar(Field::prime(7), 1), FieldMismatch);
}

TEST_CASE("rref examples") {
  const Field f5 = Field::prime(5);
  auto r = rref(DenseMatrix::identity(f5, 3));
  CHECK(r.reduced == DenseMatrix::identity(f5, 3));
  CHECK(r.rank == 3);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

  const Field q = Field::rationals();
  auto z = rref(DenseMatrix(q, 2, 4));
  CHECK(z.rank == 0);
  CHECK(z.pivots.empty());
  CHECK(z.reduced == DenseMatrix(q, 2, 4));

  const Field f2 = Field::prime(2);
  auto o = rref(ints(f2, {{1, 1}, {1, 1}}));
  CHECK(o.reduced == ints(f2, {{1, 1}, {0, 0}}));
  CHECK(o.rank == 1);
  CHECK(o.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel examples") {
  const Field f5 = Field::prime(5);
  CHECK(kernel(DenseMatrix::identity(f5, 3)).dim() == 0);
  CHECK(kernel(DenseMatrix(f5, 2, 3)) == VectorSubspace::full(f5, 3));
  CHECK(kernel(ints(f5, {{1, 2}})) == VectorSubspace::span(f5, 2, {vec(f5, {3, 1})}));
}

TEST_CASE("solve_affine examples") {
  const Field f3 = Field::prime(3);
  auto s = solve_affine(DenseMatrix::identity(f3, 2), vec(f3, {1, 2}));
  REQUIRE(s);
  CHECK(s->particular == vec(f3, {1, 2}));
  CHECK(s->directions.dim() == 0);

  const Field q = Field::rationals();
  CHECK_FALSE(solve_affine(DenseMatrix(q, 1, 2), vec(q, {1})));

  const Field f2 = Field::prime(2);
  auto t = solve_affine(ints(f2, {{1, 1}}), vec(f2, {1}));
  REQUIRE(t);
  CHECK(t->particular == vec(f2, {1, 0}));
  CHECK(t->directions == VectorSubspace::span(f2, 2, {vec(f2, {1, 1})}));
  // Exhaustive: exactly the vectors with x + y = 1.
  for (const auto& x : oracle::all_vectors(f2, 2)) {
    const bool solves = (x[0] + x[1]).is_one();
    Vector d = x;
    for (std::size_t i = 0; i < 2; ++i) d[i] -= t->particular[i];
    CHECK(solves == t->directions.contains(d));
  }
}

TEST_CASE("invert examples") {
  const Field f7 = Field::prime(7);
  CHECK(invert(DenseMatrix::identity(f7, 4)) == DenseMatrix::identity(f7, 4));
  const Field f2 = Field::prime(2);
  const DenseMatrix u = ints(f2, {{1, 1}, {0, 1}});
  CHECK(invert(u) == u);
  CHECK_THROWS_AS(invert(ints(Field::rationals(), {{1, 1}, {1, 1}})), SingularMatrix);
  CHECK_FALSE(try_invert(ints(Field::rationals(), {{1, 1}, {1, 1}})));
}

TEST_CASE("subspace lattice examples") {
  const Field q = Field::rationals();
  const auto e1 = VectorSubspace::span(q, 3, {unit_vector(q, 3, 0)});
  const auto e2 = VectorSubspace::span(q, 3, {unit_vector(q, 3, 1)});
  const auto e3 = VectorSubspace::span(q, 3, {unit_vector(q, 3, 2)});
  CHECK(sum(e1, e2) == VectorSubspace::span(q, 3, {unit_vector(q, 3, 0), unit_vector(q, 3, 1)}));
  CHECK(intersect(sum(e1, e2), sum(e2, e3)) == e2);
  CHECK(equals(sum(e1, e2), sum(e2, e1)));

  const Field f2 = Field::prime(2);
  const auto d = VectorSubspace::span(f2, 2, {vec(f2, {1, 1})});
  CHECK(member(d, vec(f2, {1, 1})));
  CHECK_FALSE(member(d, vec(f2, {1, 0})));
  CHECK_THROWS_AS(sum(d, VectorSubspace::full(f2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(sum(d, VectorSubspace::full(q, 2)), FieldMismatch);
}

TEST_CASE("rref is idempotent and inverses are two-sided on random matrices") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 101u}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 40; ++trial) {
      const DenseMatrix m = oracle::random_matrix(f, 1 + trial % 4, 1 + (trial / 4) % 5, rng);
      const auto r = rref(m);
      CHECK(rref(r.reduced).reduced == r.reduced);
      CHECK(r.rank == rank(m.transpose()));
      const DenseMatrix sq = oracle::random_matrix(f, 3, 3, rng);
      if (auto inv = try_invert(sq)) {
        CHECK(*inv * sq == DenseMatrix::identity(f, 3));
        CHECK(sq * *inv == DenseMatrix::identity(f, 3));
        CHECK_FALSE(oracle::det(sq).is_zero());
      } else {
        CHECK(oracle::det(sq).is_zero());
      }
    }
  }
  const Field q = Field::rationals();
  for (int trial = 0; trial < 30; ++trial) {
    const DenseMatrix sq = oracle::random_matrix(q, 4, 4, rng, -3, 3);
    if (auto inv = try_invert(sq)) CHECK(*inv * sq == DenseMatrix::identity(q, 4));
    else CHECK(oracle::det(sq).is_zero());
  }
}

TEST_CASE("rank and kernel agree with exhaustive enumeration over small fields") {
  std::mt19937_64 rng(12);
  for (std::uint32_t p : {2u, 3u}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t rows = 1 + trial % 3, cols = 1 + (trial / 3) % 3;
      const DenseMatrix m = oracle::random_matrix(f, rows, cols, rng);
      CHECK(rank(m) == oracle::brute_rank(m));
      std::size_t count = 0;
      for (const auto& v : oracle::all_vectors(f, cols))
        if (is_zero_vector(m * std::span<const Scalar>(v))) ++count;
      const auto k = kernel(m);
      CHECK(count == oracle::ipow(p, k.dim()));
      CHECK(k.dim() == cols - rank(m));
    }
  }
}

TEST_CASE("dimension formula for sum and intersection") {
  std::mt19937_64 rng(13);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 50; ++trial) {
      const auto v = VectorSubspace::row_span(oracle::random_matrix(f, 1 + trial % 3, 5, rng));
      const auto w = VectorSubspace::row_span(oracle::random_matrix(f, 1 + trial % 4, 5, rng));
      const auto s = sum(v, w);
      const auto i = intersect(v, w);
      CHECK(s.dim() + i.dim() == v.dim() + w.dim());
      CHECK(s.contains(v));
      CHECK(s.contains(w));
      CHECK(v.contains(i));
      CHECK(w.contains(i));
    }
  }
}
