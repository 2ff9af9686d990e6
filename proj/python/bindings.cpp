// Python module milnor_gr._core. Forms and elements cross the boundary as text
// in the same grammar the CLI uses.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "milnor/graded.hpp"
#include "milnor/oracle.hpp"
#include "milnor/properties.hpp"
#include "milnor/report.hpp"
#include "milnor/text.hpp"

namespace py = pybind11;
using namespace milnor;

namespace {

struct PyParams {
  CDVFParams params;
};

CDVFParams make_params(std::uint32_t p, int f, int r, int e, int n, int q, const std::string& a) {
  auto ctx = ResidueField::make(p, f, r);
  return CDVFParams(ctx, e, n, q, parse_element(ctx, a));
}

py::dict descriptor_dict(const GrDescriptor& d) {
  py::dict out;
  out["m"] = d.m;
  out["case"] = to_string(d.kase.kind);
  out["i"] = d.kase.i;
  out["s"] = d.kase.s;
  out["shape"] = to_string(d.shape);
  out["tower_level"] = d.tower_level;
  out["theta_coeff"] = d.theta_coeff;
  return out;
}

GrElement parse_pair(const CDVFParams& P, const std::string& first, const std::string& second) {
  return {parse_form(P.context(), first, P.q() - 1), parse_form(P.context(), second, P.q() - 2)};
}

py::tuple pair_text(const GrElement& el) { return py::make_tuple(print_form(el.first), print_form(el.second)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graded quotients of Milnor K-groups mod p^n and the q = 1 oracle";

  static py::exception<MathError> math_error(m, "MilnorError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const MathError& err) {
      py::object exc = math_error;
      PyErr_SetObject(exc.ptr(), py::make_tuple(err.what(), std::string(errc_name(err.code()))).ptr());
    }
  });

  py::class_<PyParams>(m, "Params")
      .def(py::init([](std::uint32_t p, int f, int r, int e, int n, int q, const std::string& a) {
             return PyParams{make_params(p, f, r, e, n, q, a)};
           }),
           py::arg("p"), py::arg("f") = 1, py::arg("r") = 0, py::arg("e"), py::arg("n"), py::arg("q") = 1,
           py::arg("a"))
      .def_property_readonly("p", [](const PyParams& P) { return P.params.p(); })
      .def_property_readonly("e0", [](const PyParams& P) { return P.params.e0(); })
      .def("threshold", [](const PyParams& P, int i) { return P.params.threshold(i); })
      .def("classify",
           [](const PyParams& P, std::int64_t lvl) {
             const auto c = classify(P.params, lvl);
             return py::make_tuple(to_string(c.kind), c.i, c.s);
           })
      .def("descriptor", [](const PyParams& P, std::int64_t lvl) { return descriptor_dict(descriptor(P.params, lvl)); })
      .def(
          "reduce",
          [](const PyParams& P, std::int64_t lvl, const std::string& first, const std::string& second) {
            return pair_text(GradedQuotient(P.params, lvl).reduce(parse_pair(P.params, first, second)));
          },
          py::arg("m"), py::arg("first") = "0", py::arg("second") = "0")
      .def(
          "is_zero",
          [](const PyParams& P, std::int64_t lvl, const std::string& first, const std::string& second) {
            return GradedQuotient(P.params, lvl).is_zero(parse_pair(P.params, first, second));
          },
          py::arg("m"), py::arg("first") = "0", py::arg("second") = "0")
      .def("symbol",
           [](const PyParams& P, const std::string& text) {
             return pair_text(rho_eval(P.params, parse_symbol(P.params.context(), text)));
           })
      .def(
          "order_log_p",
          [](const PyParams& P, std::int64_t lvl) -> std::optional<int> {
            const auto s = GradedQuotient(P.params, lvl).size(0);
            if (!s.order) return std::nullopt;
            return s.order->log_p;
          },
          "log_p |gr^m| when r = 0 (None otherwise)")
      .def(
          "slice_log_p",
          [](const PyParams& P, std::int64_t lvl, std::int64_t window) {
            std::map<std::string, int> out;
            for (const auto& [g, v] : GradedQuotient(P.params, lvl).size(window).slice_log_p) out[print_exponent(g)] = v;
            return out;
          },
          py::arg("m"), py::arg("window") = 2)
      .def(
          "report",
          [](const PyParams& P, std::int64_t lvl, std::int64_t window) {
            GradedQuotient Q(P.params, lvl);
            report::Report rep("gr");
            report::add_params(rep, P.params);
            report::add_descriptor(rep, P.params, Q.descriptor());
            report::add_size(rep, Q.size(window), window);
            return rep.render(report::Format::Machine);
          },
          py::arg("m"), py::arg("window") = 2)
      .def("lemma1_consistent", [](const PyParams& P, std::int64_t lvl) {
        return lemma1_consistency(P.params, lvl, {}).consistent();
      });

  m.def(
      "verify_q1",
      [](const std::string& fixture, std::optional<int> n, std::optional<int> N) {
        const auto poly = oracle::EisensteinPoly::load(fixture);
        const int level = n ? *n : poly.n.value_or(1);
        const int cn = level * poly.e() + poly.e() / static_cast<int>(poly.p - 1);
        const oracle::LocalField K(poly, N.value_or(cn + 5));
        const auto cmp = oracle::compare(K, oracle::params_for(K, level));
        py::dict out;
        std::vector<std::tuple<std::int64_t, int, int>> rows;
        for (const auto& r : cmp.rows) rows.emplace_back(r.m, r.oracle_log, r.engine_log);
        out["rows"] = rows;
        out["total_log_p"] = cmp.oracle.total_log;
        out["all_match"] = cmp.all_match;
        out["a"] = K.a_residue().v;
        return out;
      },
      py::arg("fixture"), py::arg("n") = py::none(), py::arg("N") = py::none());

  m.def(
      "selftest",
      [](std::uint64_t seed, std::size_t forms_cases, std::size_t graded_cases) {
        auto props = props::forms_properties(forms_cases);
        for (auto& p : props::graded_properties(graded_cases)) props.push_back(std::move(p));
        std::vector<std::tuple<std::string, std::size_t, std::size_t>> out;
        for (const auto& r : props::run(props, seed)) out.emplace_back(r.suite + "." + r.name, r.cases, r.failures);
        return out;
      },
      py::arg("seed") = 7, py::arg("forms_cases") = 100, py::arg("graded_cases") = 50);

  m.def("canonical_element", [](std::uint32_t p, int f, int r, const std::string& text) {
    return print_element(parse_element(ResidueField::make(p, f, r), text));
  });
  m.def(
      "canonical_form",
      [](std::uint32_t p, int f, int r, const std::string& text, std::optional<int> degree) {
        return print_form(parse_form(ResidueField::make(p, f, r), text, degree));
      },
      py::arg("p"), py::arg("f"), py::arg("r"), py::arg("text"), py::arg("degree") = py::none());
}
