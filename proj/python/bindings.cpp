// Python extension. Structured values cross the boundary as JSON text; the
// wrapper package decodes them.
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "motcsm/commands.hpp"
#include "motcsm/errors.hpp"

namespace py = pybind11;
using namespace motcsm;

namespace {

std::optional<unsigned> stage_arg(const std::optional<int>& stage) {
  if (!stage) return std::nullopt;
  if (*stage < 0) throw InputError("stage must be nonnegative");
  return static_cast<unsigned>(*stage);
}

std::string dump(const Report& r) { return r.to_json().dump(); }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

MotivicClass make_class(const std::string& numerator, std::vector<unsigned> den) {
  return MotivicClass(LPolynomial::parse(numerator), std::move(den));
}

}  // namespace

PYBIND11_MODULE(_motcsm, m) {
  m.doc() = "Exact motivic and Chern-Schwartz-MacPherson identity checks";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<MotivicClass>(m, "MotivicClass")
      .def(py::init(&make_class), py::arg("numerator") = "0", py::arg("denominator") = std::vector<unsigned>{})
      .def(py::init<long>())
      .def_property_readonly("numerator", [](const MotivicClass& c) { return c.numerator().to_string(); })
      .def_property_readonly("denominator", &MotivicClass::denominator)
      .def("reduced", &MotivicClass::reduced)
      .def("is_zero", &MotivicClass::is_zero)
      .def("euler", [](const MotivicClass& c) { return to_string(euler_specialize(c)); })
      .def("eval_at", [](const MotivicClass& c, long q) { return to_string(eval_at(c, Integer(std::to_string(q)))); })
      .def("quotient",
           [](const MotivicClass& c) -> std::optional<std::string> {
             auto q = as_polynomial(c);
             return q ? std::optional<std::string>(q->to_string()) : std::nullopt;
           })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__ne__", [](const MotivicClass& a, const MotivicClass& b) { return !(a == b); })
      .def("__str__", &MotivicClass::to_string)
      .def("__repr__", [](const MotivicClass& c) { return "MotivicClass(" + c.to_string() + ")"; });

  m.def("projective_class", &projective_class, py::arg("mu"));
  m.def("affine_class", &affine_class, py::arg("n"));
  m.def("torus_class", &torus_class, py::arg("n"));
  m.def("div_by_projective", &div_by_projective, py::arg("a"), py::arg("mu"));

  m.def("hyperplane_stratum_class",
        [](unsigned d, unsigned k, unsigned i) { return hyperplane_stratum_class(FiberFrame(d, k), i); },
        py::arg("d"), py::arg("k"), py::arg("i"));
  m.def("verify_simplex",
        [](unsigned d, const std::vector<unsigned>& mu) {
          return verify_simplex(FiberFrame(d, static_cast<unsigned>(mu.size())), mu);
        },
        py::arg("d"), py::arg("mu"));
  m.def("verify_simplexcor",
        [](unsigned d, const std::vector<unsigned>& mu) {
          return verify_simplexcor(FiberFrame(d, static_cast<unsigned>(mu.size())), mu);
        },
        py::arg("d"), py::arg("mu"));

  m.def("chi",
        [](const std::string& system_json, const std::optional<std::string>& locus) {
          const auto s = system_from_json(parse(system_json));
          if (!locus) return chi(s, full_locus(s));
          const MarkedLocus* l = s.find_locus(*locus);
          if (!l) throw InputError("no marked locus '" + *locus + "'");
          return chi(s, *l);
        },
        py::arg("system_json"), py::arg("locus") = std::nullopt);
  m.def("run_program", [](const std::string& program_json) {
    return to_json(run_program(program_from_json(parse(program_json))).result).dump();
  });
  m.def("export_system", [](const std::string& surface_json, unsigned stage) {
    const auto s = SurfaceModel::from_events(surface_events_from_json(parse(surface_json)));
    return to_json(export_modification_system(s, stage)).dump();
  });
  m.def("stringy_pushforward", [](const std::string& surface_json, unsigned stage) {
    const auto s = SurfaceModel::from_events(surface_events_from_json(parse(surface_json)));
    return to_json(pushforward(stringy_class(s, stage), stage)).dump();
  });

  m.def("cmd_verify_identities",
        [](const std::string& which, unsigned d_max, unsigned mu_max, int mu0_offset) {
          FiberIdentity id;
          if (which == "simplex") id = FiberIdentity::Simplex;
          else if (which == "simplexcor") id = FiberIdentity::SimplexCor;
          else throw InputError("unknown identity '" + which + "'");
          py::gil_scoped_release nogil;
          return dump(cmd_verify_identities(id, d_max, mu_max, mu0_offset));
        },
        py::arg("which"), py::arg("d_max") = 6, py::arg("mu_max") = 4, py::arg("mu0_offset") = 0);
  m.def("cmd_verify_invariance",
        [](std::uint64_t seed, unsigned cases, unsigned max_divisors) {
          py::gil_scoped_release nogil;
          return dump(cmd_verify_invariance(seed, cases, max_divisors));
        },
        py::arg("seed") = 1, py::arg("cases") = 200, py::arg("max_divisors") = 8);
  m.def("cmd_blowup_run",
        [](const std::string& program, bool snapshots) { return dump(cmd_blowup_run(parse(program), snapshots)); },
        py::arg("program_json"), py::arg("emit_snapshots") = false);
  m.def("cmd_surface_verify",
        [](const std::string& surface, std::optional<int> stage) {
          return dump(cmd_surface_verify(parse(surface), stage_arg(stage)));
        },
        py::arg("surface_json"), py::arg("stage") = std::nullopt);
  m.def("cmd_surface_report",
        [](const std::string& surface, std::optional<int> stage) {
          return dump(cmd_surface_report(parse(surface), stage_arg(stage)));
        },
        py::arg("surface_json"), py::arg("stage") = std::nullopt);
  m.def("cmd_cfun_push",
        [](const std::string& surface, const std::string& function) {
          return dump(cmd_cfun_push(parse(surface), parse(function)));
        },
        py::arg("surface_json"), py::arg("function_json"));
  m.def("cmd_motivic_eval",
        [](const std::string& cls, std::optional<long> at) { return dump(cmd_motivic_eval(parse(cls), at)); },
        py::arg("class_json"), py::arg("at") = std::nullopt);
}
