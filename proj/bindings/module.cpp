#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyboson/cli.hpp"
#include "polyboson/export.hpp"
#include "polyboson/faulhaber.hpp"
#include "polyboson/realizations.hpp"
#include "polyboson/verifier.hpp"

namespace py = pybind11;
using namespace polyboson;

namespace {

Rational to_rational(const std::string& s) { return Rational::parse(s); }

AlgebraSpec algebra_from_strings(long n, const std::vector<std::string>& coeffs) {
  std::vector<Rational> cs;
  cs.reserve(coeffs.size());
  for (const auto& c : coeffs) cs.push_back(Rational::parse(c));
  return make_algebra(n, std::move(cs));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact boson realizations of polynomial su(2) algebras";

  py::class_<Rational>(m, "Rational")
      .def(py::init(&to_rational))
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
      .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
      .def("__add__", [](const Rational& a, const Rational& b) { return a + b; })
      .def("__mul__", [](const Rational& a, const Rational& b) { return a * b; })
      .def("__neg__", [](const Rational& a) { return -a; });

  py::class_<AlgebraSpec>(m, "AlgebraSpec")
      .def_readonly("n", &AlgebraSpec::n)
      .def_property_readonly("coeffs", [](const AlgebraSpec& a) {
        std::vector<std::string> out;
        for (const auto& c : a.coeffs) out.push_back(c.str());
        return out;
      });

  m.def("make_algebra", &algebra_from_strings, py::arg("n"), py::arg("coeffs"));
  m.def("preset_su2", &preset_su2);
  m.def("preset_su11", &preset_su11);
  m.def("preset_higgs", [](const std::string& c1, const std::string& c3) {
    return preset_higgs(Rational::parse(c1), Rational::parse(c3));
  });
  m.def("preset_quadratic", [](const std::string& c0, const std::string& c1, const std::string& c2) {
    return preset_quadratic(Rational::parse(c0), Rational::parse(c1), Rational::parse(c2));
  });

  py::class_<DrTable>(m, "DrTable")
      .def_property_readonly("values", [](const DrTable& t) {
        std::vector<std::string> out;
        for (const auto& v : t.values) out.push_back(v.str());
        return out;
      });
  m.def("derive_dr", &derive_dr, py::arg("rmax"));
  m.def("power_sum", [](long s, long M) { return power_sum(s, M).str(); });
  m.def("shifted_power_sum",
        [](long s, long m1, long m2) { return shifted_power_sum(s, m1, m2).str(); });

  py::class_<RealizationSet>(m, "RealizationSet")
      .def_property_readonly("kind", [](const RealizationSet& r) { return kind_name(r.kind); })
      .def_property_readonly("caps", [](const RealizationSet& r) { return r.space.caps; })
      .def_readonly("margins", &RealizationSet::margins)
      .def("export_json", [](const RealizationSet& r) { return export_realization(r); });

  m.def("build_fock_rep", [](const AlgebraSpec& alg, const std::vector<long>& caps) {
    return build_fock_rep(alg, SpaceSpec{caps});
  });
  m.def("build_three_boson", [](const AlgebraSpec& alg, const std::vector<long>& caps, const DrTable& dr) {
    return build_three_boson(alg, SpaceSpec{caps}, dr);
  });
  m.def("build_two_boson_central",
        [](const AlgebraSpec& alg, const std::string& lam, const std::vector<long>& caps, const DrTable& dr) {
          return build_two_boson_central(alg, Rational::parse(lam), SpaceSpec{caps}, dr);
        });
  m.def("build_two_boson_lowering",
        [](const AlgebraSpec& alg, const std::string& lam, const std::vector<long>& caps, const DrTable& dr) {
          return build_two_boson_lowering(alg, Rational::parse(lam), SpaceSpec{caps}, dr);
        });
  m.def("build_single_boson",
        [](const AlgebraSpec& alg, const std::string& kap, const std::vector<long>& caps, const DrTable& dr) {
          return build_single_boson(alg, Rational::parse(kap), SpaceSpec{caps}, dr);
        });
  m.def("substitute_mode3",
        [](const RealizationSet& r, const std::vector<std::tuple<long, long, std::string>>& terms,
           const DrTable& dr) {
          std::vector<ModeTerm> f;
          for (const auto& [p, q, c] : terms) f.push_back({p, q, Rational::parse(c)});
          return substitute_mode3(r, f, dr);
        });

  m.def("check_algebra", [](const RealizationSet& r) {
    auto rep = check_algebra(r);
    return py::make_tuple(rep.all_passed(), rep.to_json());
  });
  m.def("check_fock_equivalence", [](const RealizationSet& b, const RealizationSet& f) {
    auto rep = check_fock_equivalence(b, f);
    return py::make_tuple(rep.all_passed(), rep.to_json());
  });
  m.def("check_quotient_equivalence", [](const RealizationSet& b, const std::string& ideal) {
    Ideal id = ideal == "I1" ? Ideal::I1 : ideal == "I2" ? Ideal::I2 : Ideal::I3;
    auto rep = check_quotient_equivalence(b, id);
    return py::make_tuple(rep.all_passed(), rep.to_json());
  });

  m.def("parse_realization", &parse_realization);
}
