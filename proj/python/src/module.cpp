#include <optional>
#include <string>
#include <vector>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hermlab/emit.hpp"
#include "hermlab/gf.hpp"
#include "hermlab/hermitian.hpp"
#include "hermlab/schemes.hpp"
#include "hermlab/store.hpp"
#include "hermlab/suite.hpp"

namespace py = pybind11;
using namespace hermlab;

namespace {

suite::Config make_config(unsigned q, std::optional<std::string> cache_dir, unsigned jobs, const std::string& profile,
                          bool resume, unsigned cyclotomic_order) {
  if (!suite::supported_q(q)) throw py::value_error("q must be one of 2, 3, 4, 5");
  if (profile != "counts" && profile != "full") throw py::value_error("profile must be 'counts' or 'full'");
  suite::Config c;
  c.q = q;
  c.cache_dir = store::resolve_cache_dir(cache_dir);
  c.jobs = jobs ? jobs : 1;
  c.full = profile == "full";
  c.resume = resume;
  c.cyclotomic_order = cyclotomic_order;
  return c;
}

// Named check groups; empty selection runs verify().
std::string verify_json(unsigned q, std::optional<std::string> cache_dir, unsigned jobs, const std::string& profile,
                        bool resume, const std::vector<std::string>& groups) {
  py::gil_scoped_release release;
  suite::Session s(make_config(q, std::move(cache_dir), jobs, profile, resume, 12));
  if (groups.empty()) return suite::verify(s).to_json().dump();
  emit::Report r;
  r.q = q;
  r.command = "verify";
  for (const auto& g : groups) {
    if (g == "counts") suite::check_counts(s, r);
    else if (g == "srg") suite::check_srg(s, r);
    else if (g == "incidence") suite::check_incidence(s, r);
    else if (g == "orbital") suite::check_orbital_schemes(s, r);
    else if (g == "properties") suite::check_properties(r);
    else if (g == "profile") suite::check_intersection_profile(s, r);
    else if (g == "intersection" && q == 2) suite::check_intersection_scheme_q2(s, r);
    else if (g == "dense" && q == 2) suite::check_dense_oracle(s, r);
    else throw std::invalid_argument("unknown check group for q=" + std::to_string(q) + ": " + g);
  }
  return r.to_json().dump();
}

std::string scheme_json(unsigned q, const std::string& source, std::optional<std::string> cache_dir, unsigned jobs,
                        unsigned cyclotomic_order) {
  py::gil_scoped_release release;
  suite::Session s(make_config(q, std::move(cache_dir), jobs, "counts", false, cyclotomic_order));
  const auto& sch = s.scheme(source);
  return emit::scheme_json(sch, &s.table(source)).dump();
}

}  // namespace

PYBIND11_MODULE(_hermlab, m) {
  m.doc() = "Hermitian surface curves and association schemes";

  py::register_exception<schemes::NotASchemeError>(m, "NotASchemeError");
  py::register_exception<schemes::RecognitionError>(m, "RecognitionError");
  py::register_exception<polyalg::InconclusiveError>(m, "InconclusiveError");

  py::class_<gf::Field>(m, "Field")
      .def_static("build", [](std::uint32_t p, std::uint32_t e) { return gf::Field::build(p, e); }, py::arg("p"),
                  py::arg("e") = 1)
      .def_property_readonly("order", &gf::Field::order)
      .def_property_readonly("characteristic", &gf::Field::characteristic)
      .def_property_readonly("degree", &gf::Field::degree)
      .def_property_readonly("modulus", &gf::Field::modulus)
      .def("add", &gf::Field::add)
      .def("sub", &gf::Field::sub)
      .def("mul", &gf::Field::mul)
      .def("neg", &gf::Field::neg)
      .def("inv", &gf::Field::inv)
      .def("pow", &gf::Field::pow)
      .def("elements", &gf::Field::elements)
      .def("to_coeffs", &gf::Field::to_coeffs)
      .def("from_coeffs", &gf::Field::from_coeffs)
      .def("__repr__", &gf::Field::describe);

  py::class_<hermitian::Surface>(m, "Surface")
      .def(py::init<std::uint32_t>(), py::arg("q"))
      .def_property_readonly("q", &hermitian::Surface::q)
      .def_property_readonly("field", &hermitian::Surface::field, py::return_value_policy::reference_internal)
      .def("point_count", &hermitian::Surface::point_count)
      .def("line_count", &hermitian::Surface::line_count)
      .def("curve_count", &hermitian::Surface::curve_count)
      .def("form", &hermitian::Surface::form)
      .def("contains", &hermitian::Surface::contains)
      .def("rational_points", [](const hermitian::Surface& s) {
        std::vector<std::array<gf::Elem, 4>> out;
        for (const auto& p : s.rational_points()) out.push_back(p.c);
        return out;
      });

  m.def("group_order", &hermitian::group_order, py::arg("q"));
  m.def("partition_count", [](unsigned n) {
    return py::module_::import("builtins").attr("int")(schemes::partition_count(n).get_str());
  });
  m.def(
      "conjecture_check",
      [](unsigned q, unsigned d) {
        const auto c = schemes::conjecture_check(q, d);
        py::dict out;
        out["q"] = c.q;
        out["d"] = c.d;
        out["expected"] = c.expected;
        out["holds"] = c.holds;
        return out;
      },
      py::arg("q"), py::arg("d"));
  m.def("_verify_json", &verify_json, py::arg("q"), py::arg("cache_dir") = std::nullopt, py::arg("jobs") = 1,
        py::arg("profile") = "counts", py::arg("resume") = false, py::arg("groups") = std::vector<std::string>{});
  m.def("_scheme_json", &scheme_json, py::arg("q"), py::arg("source"), py::arg("cache_dir") = std::nullopt,
        py::arg("jobs") = 1, py::arg("cyclotomic_order") = 12);
}
