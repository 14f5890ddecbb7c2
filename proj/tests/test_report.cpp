#include "doctest.h"

#include "report.hpp"

#include "msub/normalize.hpp"

using namespace msub;
using msub::cli::json;
using msub::cli::Report;

TEST_CASE("fnv1a reference values") {
  CHECK(cli::fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(cli::fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(cli::fnv1a("foobar") == 0x85944171f73967e8ULL);
  CHECK(cli::hex_digest("") == "cbf29ce484222325");
}

TEST_CASE("report round-trips through json") {
  const Field f3 = Field::prime(3);
  const auto c = MatrixSubspace::span(
      f3, 3,
      {DenseMatrix::unit(f3, 3, 0, 1) + DenseMatrix::unit(f3, 3, 1, 1),
       DenseMatrix::unit(f3, 3, 1, 1) + DenseMatrix::unit(f3, 3, 1, 2), DenseMatrix::identity(f3, 3)});
  const auto res = normalize_main3(c);
  Report r;
  r.command = "normalize";
  r.digest = cli::hex_digest("input");
  r.payload = json{{"t", cli::matrix_json(res.t_total)}, {"profile", cli::profile_json(res.profile)},
                   {"final", cli::subspace_json(res.c_n_final)}};
  r.moves = cli::moves_json(res.log);
  r.wall_seconds = 0.125;
  r.ok = true;

  const std::string text = json(r).dump();
  const Report back = json::parse(text).get<Report>();
  CHECK(back == r);
  CHECK(json(back).dump() == text);
  CHECK_FALSE(r.moves.empty());
}

TEST_CASE("rational entries serialize as exact strings") {
  const Field q = Field::rationals();
  DenseMatrix m(q, 1, 2, std::vector<Scalar>{Scalar(q, mpz_class(1), mpz_class(3)), Scalar(q, -2)});
  CHECK(cli::matrix_json(m) == json::array({json::array({"1/3", "-2"})}));
}

TEST_CASE("text rendering lists payload keys") {
  Report r;
  r.command = "profile";
  r.digest = "0";
  r.payload = json{{"b", {0, 2, 2}}};
  const auto text = cli::render_text(r);
  CHECK(text.find("b: [0,2,2]") != std::string::npos);
  CHECK(text.find("command: profile") != std::string::npos);
}
