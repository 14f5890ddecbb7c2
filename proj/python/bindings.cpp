#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "msub/idempotent.hpp"
#include "msub/mathieu.hpp"
#include "msub/multipoly.hpp"
#include "msub/normalize.hpp"
#include "msub/space_file.hpp"

namespace py = pybind11;
using namespace msub;

namespace {

Field to_field(const py::object& spec) { return parse_field(py::str(spec).cast<std::string>()); }

// Entries arrive as ints, Fractions or strings such as "-2/3".
Scalar to_scalar(Field f, const py::handle& x) {
  mpq_class q(py::str(x).cast<std::string>());
  q.canonicalize();
  return Scalar(f, q.get_num(), q.get_den());
}

py::object from_scalar(const Scalar& s) {
  if (!s.field().is_rationals()) return py::int_(s.residue());
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(s.to_string());
}

DenseMatrix to_matrix(Field f, const py::sequence& rows) {
  std::vector<Vector> out;
  for (const auto& row : rows) {
    Vector v;
    for (const auto& x : row.cast<py::sequence>()) v.push_back(to_scalar(f, x));
    out.push_back(std::move(v));
  }
  return DenseMatrix::from_rows(f, out);
}

py::list from_matrix(const DenseMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(from_scalar(m(i, j)));
    rows.append(row);
  }
  return rows;
}

py::list from_matrices(const std::vector<DenseMatrix>& ms) {
  py::list out;
  for (const auto& m : ms) out.append(from_matrix(m));
  return out;
}

MatrixSubspace make_space(const py::object& field, std::size_t n, const py::sequence& matrices) {
  const Field f = to_field(field);
  std::vector<DenseMatrix> gens;
  for (const auto& m : matrices) gens.push_back(to_matrix(f, m.cast<py::sequence>()));
  return MatrixSubspace::span(f, n, gens);
}

py::dict profile_dict(const BinaryProfile& p) {
  py::dict d;
  d["n"] = p.n;
  d["B"] = p.B;
  d["b"] = p.b;
  d["col_dims"] = p.col_dims;
  d["d"] = p.d;
  return d;
}

py::dict normalize_dict(const MatrixSubspace& c) {
  const auto res = normalize_main3(c);
  py::list log;
  for (const auto& mv : res.log) log.append(py::make_tuple(to_string(mv.kind), mv.level, from_matrix(mv.t)));
  py::dict d;
  d["t"] = from_matrix(res.t_total);
  d["final"] = res.c_n_final;
  d["profile"] = profile_dict(res.profile);
  d["branch"] = to_string(res.branch);
  d["log"] = log;
  return d;
}

py::dict verify_dict(const MatrixSubspace& m, const std::string& type) {
  const auto v = verify_mathieu(m, parse_mathieu_type(type));
  py::dict d;
  d["type"] = to_string(v.type);
  d["holds"] = v.holds;
  if (v.witness) {
    py::dict w;
    w["a"] = from_matrix(v.witness->a);
    w["b"] = v.witness->b ? py::object(from_matrix(*v.witness->b)) : py::none();
    w["c"] = v.witness->c ? py::object(from_matrix(*v.witness->c)) : py::none();
    w["exponent"] = v.witness->exponent;
    w["replays"] = replay_witness(m, *v.witness);
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_msub, m) {
  m.doc() = "Exact computations with linear subspaces of Mat_n(K) over F_p and Q.";

  py::register_exception<PreconditionViolated>(m, "PreconditionViolated", PyExc_ValueError);
  py::register_exception<FieldTooSmall>(m, "FieldTooSmall", PyExc_ArithmeticError);
  py::register_exception<TooLarge>(m, "TooLarge", PyExc_OverflowError);
  py::register_exception<HypothesisFailed>(m, "HypothesisFailed", PyExc_ValueError);
  py::register_exception<SpaceFileError>(m, "SpaceFileError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<MatrixSubspace>(m, "Space")
      .def(py::init(&make_space), py::arg("field"), py::arg("n"), py::arg("matrices"),
           "Span of the given n x n matrices over field (a prime or 'Q').")
      .def_static("zero", [](const py::object& f, std::size_t n) { return MatrixSubspace::zero(to_field(f), n); })
      .def_static("full", [](const py::object& f, std::size_t n) { return MatrixSubspace::full(to_field(f), n); })
      .def_static("scalars",
                  [](const py::object& f, std::size_t n) { return MatrixSubspace::scalars(to_field(f), n); })
      .def_static("trace_zero",
                  [](const py::object& f, std::size_t n) { return MatrixSubspace::trace_zero(to_field(f), n); })
      .def_property_readonly("n", &MatrixSubspace::n)
      .def_property_readonly("dim", &MatrixSubspace::dim)
      .def_property_readonly("codim", &MatrixSubspace::codim)
      .def_property_readonly("field", [](const MatrixSubspace& s) { return s.field().name(); })
      .def_property_readonly("basis", [](const MatrixSubspace& s) { return from_matrices(s.basis()); })
      .def("contains",
           [](const MatrixSubspace& s, const py::sequence& a) { return s.contains(to_matrix(s.field(), a)); })
      .def("contains_identity", &MatrixSubspace::contains_identity)
      .def("constraints", &constraint_space, "Matrices C with tr(CM) = 0 for every M in the space.")
      .def("conjugate",
           [](const MatrixSubspace& s, const py::sequence& t) { return conjugate(s, to_matrix(s.field(), t)); })
      .def(py::self == py::self)
      .def("__repr__", [](const MatrixSubspace& s) {
        return "<Space over " + s.field().name() + ", n=" + std::to_string(s.n()) +
               ", dim=" + std::to_string(s.dim()) + ">";
      });

  m.def("generic_rank", &generic_rank_of_action, "Rank over K(x) of {C x : C in the space}.");
  m.def("profile", [](const MatrixSubspace& c) { return profile_dict(binary_profile(c)); });
  m.def("normalize", &normalize_dict, "Normalize the space as C_n; returns t, profile, branch and move log.");
  m.def("main2", [](const MatrixSubspace& s) {
    const auto cert = apply_main2(s);
    return py::make_tuple(from_matrix(cert.t), cert.r);
  });
  m.def(
      "idempotent_family",
      [](const MatrixSubspace& s, std::size_t r, const std::string& form) {
        const auto fam = idempotent_family(s, r, form == "lower" ? IdempotentForm::lower : IdempotentForm::upper);
        py::dict d;
        d["dim"] = fam.dim();
        d["rank"] = fam.member_rank();
        d["particular"] = from_matrix(fam.particular);
        py::list members;
        if (!s.field().is_rationals() && fam.dim() <= 6) {
          const std::uint64_t p = s.field().characteristic();
          std::uint64_t total = 1;
          for (std::size_t k = 0; k < fam.dim(); ++k) total *= p;
          for (std::uint64_t idx = 0; idx < total; ++idx) {
            Vector c(fam.dim(), Scalar::zero(s.field()));
            std::uint64_t x = idx;
            for (std::size_t k = fam.dim(); k-- > 0; x /= p) c[k] = Scalar(s.field(), static_cast<long>(x % p));
            members.append(from_matrix(fam.member(c)));
          }
        }
        d["members"] = members;
        return d;
      },
      py::arg("space"), py::arg("r"), py::arg("form") = "upper");
  m.def("verify", &verify_dict, py::arg("space"), py::arg("type") = "left",
        "Exhaustive Mathieu check; type is left, right, pre2 or two.");
  m.def("radical", [](const MatrixSubspace& s) { return from_matrices(radical(s)); });
  m.def("idempotents", [](const MatrixSubspace& s) { return from_matrices(idempotents_of(s)); });
  m.def("max_left_ideal", &max_left_ideal);
  m.def("rad_equivalences", [](const MatrixSubspace& s) {
    const auto r = rad_equivalences(s);
    py::dict d;
    d["ideal"] = r.ideal;
    d["k"] = r.k;
    d["left_mathieu"] = r.left_mathieu;
    d["ideal_contains_idempotents"] = r.ideal_contains_idempotents;
    d["radicals_equal"] = r.radicals_equal;
    d["equivalent"] = r.equivalent;
    return d;
  });
  m.def("proposition_family", [](const py::object& f, std::size_t n) {
    const Field field = to_field(f);
    return proposition_family(field, n, Scalar::one(field));
  });
  m.def(
      "read_space",
      [](const std::string& text, const py::object& field) {
        const auto sf = parse_space_file(text);
        return field.is_none() ? sf.subspace() : sf.subspace(to_field(field));
      },
      py::arg("text"), py::arg("field") = py::none(), "Parse a space file.");
  m.def(
      "write_space",
      [](const MatrixSubspace& s, std::optional<std::string> name) {
        return write_space_file(space_file_from(s, std::move(name)));
      },
      py::arg("space"), py::arg("name") = py::none());
}
