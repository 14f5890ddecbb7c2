// msub_cli: command-line front end over the msub library.

#include "report.hpp"

#include "msub/idempotent.hpp"
#include "msub/mathieu.hpp"
#include "msub/normalize.hpp"
#include "msub/space_file.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace msub;
using msub::cli::json;
using msub::cli::Report;

namespace {

struct Options {
  std::string file;
  std::string field;
  std::uint64_t seed = 1;
  bool as_json = false;
  std::size_t r = 1;
  std::string form = "upper";
  std::string type = "left";
  std::string repro;
  std::size_t n = 2;
  std::size_t dim = 1;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpaceFileError(0, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Input {
  std::string text;
  SpaceFile file;
  MatrixSubspace space;
};

Input load(const Options& o) {
  Input in;
  in.text = slurp(o.file);
  in.file = parse_space_file(in.text);
  std::optional<Field> over;
  if (!o.field.empty()) over = parse_field(o.field);
  in.space = in.file.subspace(over);
  return in;
}

std::string digest_of(const std::string& command, const Options& o, const std::string& text) {
  std::ostringstream os;
  os << command << '\n' << "field=" << o.field << '\n';
  if (command == "idempotents") os << "r=" << o.r << " form=" << o.form << '\n';
  if (command == "verify") os << "type=" << o.type << '\n';
  if (command == "generate") os << "seed=" << o.seed << " n=" << o.n << " dim=" << o.dim << '\n';
  os << text;
  return cli::hex_digest(os.str());
}

void cmd_constraints(const Input& in, Report& rep) {
  const auto c = constraint_space(in.space);
  rep.payload = json{{"input_dim", in.space.dim()}, {"constraints", cli::subspace_json(c)}};
}

void cmd_profile(const Input& in, Report& rep) { rep.payload = cli::profile_json(binary_profile(in.space)); }

void cmd_normalize(const Input& in, Report& rep) {
  try {
    const auto res = normalize_main3(in.space);
    rep.payload = json{{"t", cli::matrix_json(res.t_total)},
                       {"branch", to_string(res.branch)},
                       {"profile", cli::profile_json(res.profile)},
                       {"final", cli::subspace_json(res.c_n_final)}};
    rep.moves = cli::moves_json(res.log);
  } catch (const FieldTooSmall& e) {
    rep.ok = false;
    rep.payload = json{{"error", "FieldTooSmall"}, {"d_n", e.required()}, {"message", e.what()}};
    std::cerr << "normalize: " << e.what() << '\n';
  }
}

void cmd_idempotents(const Input& in, const Options& o, Report& rep) {
  const auto form = o.form == "lower" ? IdempotentForm::lower : IdempotentForm::upper;
  try {
    const auto fam = idempotent_family(in.space, o.r, form);
    json dirs = json::array();
    for (const auto& v : fam.directions.basis_vectors()) {
      DenseMatrix d(fam.particular.field(), fam.n - fam.r, fam.r, v);
      dirs.push_back(cli::matrix_json(d));
    }
    rep.payload = json{{"r", fam.r},
                       {"form", to_string(fam.form)},
                       {"dim", fam.dim()},
                       {"member_rank", fam.member_rank()},
                       {"particular", cli::matrix_json(fam.particular)},
                       {"directions", dirs}};
  } catch (const HypothesisFailed& e) {
    rep.ok = false;
    rep.payload = json{{"error", "HypothesisFailed"}, {"witness", cli::matrix_json(e.witness())}, {"message", e.what()}};
    std::cerr << "idempotents: " << e.what() << '\n';
  }
}

void cmd_verify(const Input& in, const Options& o, Report& rep) {
  const auto v = verify_mathieu(in.space, parse_mathieu_type(o.type));
  rep.payload = cli::verdict_json(v);
  if (v.witness) rep.payload["witness_replays"] = replay_witness(in.space, *v.witness);
}

void cmd_radical(const Input& in, Report& rep) {
  json rad = json::array();
  for (const auto& a : radical(in.space)) rad.push_back(cli::matrix_json(a));
  rep.payload = json{{"radical_size", rad.size()},
                     {"full_power_set_size", full_power_set(in.space).size()},
                     {"radical", rad}};
}

void cmd_maxideal(const Input& in, Report& rep) {
  const auto report = rad_equivalences(in.space);
  const auto nf = rad_normal_form(report.ideal);
  rep.payload = json{{"ideal", cli::subspace_json(report.ideal)},
                     {"k", report.k},
                     {"t", cli::matrix_json(nf.t)},
                     {"idempotent", cli::matrix_json(nf.idempotent)},
                     {"left_mathieu", report.left_mathieu},
                     {"ideal_contains_idempotents", report.ideal_contains_idempotents},
                     {"radicals_equal", report.radicals_equal},
                     {"equivalent", report.equivalent}};
}

void cmd_main2(const Input& in, Report& rep) {
  try {
    const auto cert = apply_main2(in.space);
    rep.payload = json{{"r", cert.r}, {"t", cli::matrix_json(cert.t)}};
    const auto conj = conjugate(in.space, cert.t);
    try {
      const auto fs = full_space_certificate(conj, cert.r);
      rep.payload["e"] = cli::matrix_json(fs.e);
      rep.payload["e_prime"] = cli::matrix_json(fs.e_prime);
    } catch (const HypothesisFailed&) {
      rep.payload["e"] = nullptr;
    }
  } catch (const FieldTooSmall& e) {
    rep.ok = false;
    rep.payload = json{{"error", "FieldTooSmall"}, {"d_n", e.required()}, {"message", e.what()}};
    std::cerr << "main2: " << e.what() << '\n';
  }
}

void cmd_generate(const Options& o, Report& rep) {
  const Field f = parse_field(o.field.empty() ? "5" : o.field);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<long> entry(f.is_rationals() ? -3 : 0,
                                            f.is_rationals() ? 3 : static_cast<long>(f.characteristic()) - 1);
  std::vector<DenseMatrix> gens;
  for (std::size_t g = 0; g < o.dim; ++g) {
    std::vector<std::vector<long>> rows(o.n, std::vector<long>(o.n));
    for (auto& row : rows)
      for (auto& x : row) x = entry(rng);
    gens.push_back(DenseMatrix::from_ints(f, rows));
  }
  const auto space = MatrixSubspace::span(f, o.n, gens);
  const auto text = write_space_file(space_file_from(space, "seed " + std::to_string(o.seed)));
  rep.payload = json{{"dim", space.dim()}, {"file", text}};
}

// Canned reproductions. Each returns the observed outcome and whether it
// matches the expected one.

DenseMatrix unit(Field f, std::size_t n, std::size_t i, std::size_t j) { return DenseMatrix::unit(f, n, i - 1, j - 1); }

std::vector<DenseMatrix> all_matrices(Field f, std::size_t n) {
  std::vector<DenseMatrix> out;
  const std::uint64_t p = f.characteristic();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < n * n; ++k) total *= p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Scalar> e(n * n, Scalar::zero(f));
    std::uint64_t x = idx;
    for (std::size_t k = n * n; k-- > 0; x /= p) e[k] = Scalar(f, static_cast<long>(x % p));
    out.emplace_back(f, n, n, std::move(e));
  }
  return out;
}

void repro_counterexample(Report& rep) {
  const Field f2 = Field::prime(2);
  const auto c = MatrixSubspace::span(f2, 3, {unit(f2, 3, 1, 2) + unit(f2, 3, 2, 2), unit(f2, 3, 2, 2) + unit(f2, 3, 2, 3)});
  std::size_t conjugators = 0, successes = 0;
  for (const auto& t : all_matrices(f2, 3)) {
    if (!try_invert(t)) continue;
    ++conjugators;
    const auto ct = conjugate(c, t);
    for (std::size_t r : {1u, 2u}) successes += main2_conclusion_holds(ct, r) ? 1 : 0;
  }
  rep.ok = conjugators == 168 && successes == 0;
  rep.payload = json{{"conjugators", conjugators}, {"successes", successes},
                     {"summary", "all " + std::to_string(conjugators) + " conjugators fail for r in {1,2}"}};
}

void repro_proposition(Report& rep) {
  const Field f5 = Field::prime(5);
  const auto m = proposition_family(f5, 2, Scalar::one(f5));
  const auto v = verify_mathieu(m, MathieuType::two_sided);
  const auto idem = idempotents_of(m);
  const bool only_zero = idem.size() == 1 && idem.front().is_zero();
  rep.ok = v.holds && only_zero;
  rep.payload = json{{"space", cli::subspace_json(m)}, {"two_sided_mathieu", v.holds}, {"idempotents", idem.size()},
                     {"only_zero_idempotent", only_zero}};
}

void repro_codim1_trace_zero(Report& rep) {
  json rows = json::array();
  bool ok = true;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto h = MatrixSubspace::trace_zero(Field::prime(p), 2);
    const bool expected = p > 2;
    for (auto t : {MathieuType::left, MathieuType::right, MathieuType::pre_two_sided, MathieuType::two_sided}) {
      const auto v = verify_mathieu(h, t);
      const bool replayed = !v.witness || replay_witness(h, *v.witness);
      ok = ok && v.holds == expected && replayed;
      rows.push_back(json{{"p", p}, {"type", to_string(t)}, {"holds", v.holds}, {"expected", expected}});
    }
  }
  rep.ok = ok;
  rep.payload = json{{"cases", rows}};
}

void repro_cor62_f2(Report& rep) {
  const Field f2 = Field::prime(2);
  std::size_t hyperplanes = 0, left = 0;
  for (std::uint32_t mask = 1; mask < 16; ++mask) {
    std::vector<Scalar> normal;
    for (int k = 3; k >= 0; --k) normal.emplace_back(f2, static_cast<long>((mask >> k) & 1));
    const MatrixSubspace h(2, kernel(DenseMatrix(f2, 1, 4, normal)));
    ++hyperplanes;
    left += verify_mathieu(h, MathieuType::left).holds ? 1 : 0;
  }
  rep.ok = hyperplanes == 15 && left == 0;
  rep.payload = json{{"hyperplanes", hyperplanes}, {"left_mathieu", left},
                     {"summary", std::to_string(left) + " of " + std::to_string(hyperplanes) +
                                     " codim-1 subspaces of Mat_2(F_2) are left Mathieu"}};
}

int emit(const Report& rep, bool as_json) {
  if (as_json) std::cout << json(rep).dump(2) << '\n';
  else std::cout << cli::render_text(rep);
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with subspaces of Mat_n(K)"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--field", o.field, "Override the file's field: a prime P or Q");
  app.add_option("--seed", o.seed, "Seed for randomized space generation");
  app.add_flag("--json", o.as_json, "Emit the report as JSON");

  auto file_cmd = [&](const char* name, const char* help) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("file", o.file, "Space file")->required()->check(CLI::ExistingFile);
    return sc;
  };
  file_cmd("constraints", "Constraint space of the input");
  file_cmd("profile", "Binary profile B, b, col_dims, d");
  file_cmd("normalize", "Normalize the input as C_n");
  auto* idem = file_cmd("idempotents", "Affine family of idempotents of a given form");
  idem->add_option("--r", o.r, "Rank parameter")->required();
  idem->add_option("--form", o.form, "upper or lower")->check(CLI::IsMember({"upper", "lower"}));
  auto* verify = file_cmd("verify", "Exhaustive Mathieu check");
  verify->add_option("--type", o.type, "left, right, pre2 or two")
      ->check(CLI::IsMember({"left", "right", "pre2", "pre_two_sided", "two", "two_sided"}));
  file_cmd("radical", "Radical of the input");
  file_cmd("maxideal", "Maximal left ideal and its normal form");
  file_cmd("main2", "Conjugator and rank for the input as M");
  auto* gen = app.add_subcommand("generate", "Random space file from --seed");
  gen->add_option("--n", o.n, "Matrix size")->check(CLI::Range(1, 6));
  gen->add_option("--dim", o.dim, "Number of random generators");
  auto* repro = app.add_subcommand("repro", "Canned reproductions");
  repro->add_option("name", o.repro)
      ->required()
      ->check(CLI::IsMember({"counterexample", "proposition", "codim1-zhao", "cor62-f2"}));

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  Report rep;
  rep.command = command;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (command == "repro") {
      rep.command = "repro " + o.repro;
      rep.digest = cli::hex_digest(rep.command);
      if (o.repro == "counterexample") repro_counterexample(rep);
      else if (o.repro == "proposition") repro_proposition(rep);
      else if (o.repro == "codim1-zhao") repro_codim1_trace_zero(rep);
      else repro_cor62_f2(rep);
      if (!rep.ok) std::cerr << "repro " << o.repro << ": outcome differs from expectation\n";
    } else if (command == "generate") {
      rep.digest = digest_of(command, o, "");
      cmd_generate(o, rep);
    } else {
      const Input in = load(o);
      rep.digest = digest_of(command, o, in.text);
      if (command == "constraints") cmd_constraints(in, rep);
      else if (command == "profile") cmd_profile(in, rep);
      else if (command == "normalize") cmd_normalize(in, rep);
      else if (command == "idempotents") cmd_idempotents(in, o, rep);
      else if (command == "verify") cmd_verify(in, o, rep);
      else if (command == "radical") cmd_radical(in, rep);
      else if (command == "maxideal") cmd_maxideal(in, rep);
      else cmd_main2(in, rep);
    }
  } catch (const SpaceFileError& e) {
    std::cerr << o.file << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << command << ": " << e.what() << '\n';
    return 1;
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return emit(rep, o.as_json);
}
