#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gl2gauss/appendix.hpp"
#include "gl2gauss/gauss.hpp"
#include "gl2gauss/verify.hpp"

namespace py = pybind11;
using namespace gl2gauss;

namespace {

CharSpec make_spec(const std::string& family, int64_t alpha, int64_t u, int64_t i, int64_t j, int64_t eps,
                   std::vector<int64_t> omega, int64_t beta, int64_t i1, int64_t i2) {
  const auto fam = parse_family(family);
  if (!fam) throw Error(Errc::BadArgument, "unknown family " + family);
  CharSpec s;
  s.family = *fam;
  s.alpha = alpha;
  s.u = u;
  s.i = i;
  s.j = j;
  s.eps = eps;
  s.beta = beta;
  s.i1 = i1;
  s.i2 = i2;
  if (!omega.empty()) {
    if (omega.size() != 3) throw Error(Errc::BadArgument, "omega takes three integers");
    s.omega = {omega[0], omega[1], omega[2]};
  }
  return s;
}

py::dict suite_dict(const SuiteReport& r) {
  py::list cases;
  for (const auto& c : r.cases) cases.append(py::make_tuple(c.name, c.passed, c.detail));
  py::dict d;
  d["suite"] = r.suite;
  d["passed"] = r.passed();
  d["cases"] = cases;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gauss sums on GL2(Z/p^l Z)";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<RingParams>(m, "Ring")
      .def(py::init(&RingParams::make), py::arg("p"), py::arg("l"))
      .def_property_readonly("p", &RingParams::p)
      .def_property_readonly("l", &RingParams::l)
      .def_property_readonly("m", &RingParams::m)
      .def_property_readonly("n", &RingParams::n)
      .def_property_readonly("modulus", &RingParams::modulus)
      .def_property_readonly("unit_order", &RingParams::unit_order)
      .def_property_readonly("generator", &RingParams::generator)
      .def("dlog", &RingParams::dlog)
      .def("__repr__", [](const RingParams& r) {
        return "Ring(p=" + std::to_string(r.p()) + ", l=" + std::to_string(r.l()) + ")";
      });

  py::class_<CycElem>(m, "CycElem")
      .def_property_readonly("conductor", [](const CycElem& x) { return x.field()->conductor(); })
      .def_property_readonly("coeffs",
                             [](const CycElem& x) { return std::vector<int64_t>(x.coeffs().begin(), x.coeffs().end()); })
      .def("is_zero", &CycElem::is_zero)
      .def("as_integer", &CycElem::as_integer)
      .def("__complex__", [](const CycElem& x) { return embed_complex(x); })
      .def("__eq__", [](const CycElem& a, const CycElem& b) { return a == b; })
      .def("__add__", [](const CycElem& a, const CycElem& b) { return a + b; })
      .def("__sub__", [](const CycElem& a, const CycElem& b) { return a - b; })
      .def("__mul__", [](const CycElem& a, const CycElem& b) { return a * b; })
      .def("__mul__", [](const CycElem& a, int64_t k) { return a * k; })
      .def("__repr__", &CycElem::to_string);

  m.def("root_of_unity", [](int64_t conductor, int64_t k, int64_t a) {
    return root_of_unity(CyclotomicField::get(conductor), k, a);
  }, py::arg("conductor"), py::arg("k"), py::arg("a"));

  py::class_<CharSpec>(m, "CharSpec")
      .def(py::init(&make_spec), py::arg("family"), py::arg("alpha") = 0, py::arg("u") = 1, py::arg("i") = 0,
           py::arg("j") = 0, py::arg("eps") = 0, py::arg("omega") = std::vector<int64_t>{}, py::arg("beta") = 0,
           py::arg("i1") = 0, py::arg("i2") = 0)
      .def_property_readonly("family", [](const CharSpec& s) { return std::string(family_name(s.family)); })
      .def("__repr__", [](const CharSpec& s) { return describe(s); });

  m.def("enumerate_specs", [](const std::string& family, const RingParams& ring) {
    const auto fam = parse_family(family);
    if (!fam) throw Error(Errc::BadArgument, "unknown family " + family);
    return enumerate_specs(*fam, ring);
  }, py::arg("family"), py::arg("ring"));

  m.def("g_closed", [](const RingParams& ring, int64_t c, int64_t r) {
    const auto F = session_field(ring);
    return g_closed(MultChar(ring, c, F), AddChar(ring, r, F)).exact;
  }, py::arg("ring"), py::arg("c"), py::arg("r"), "g_l(mu, e) with mu(g) = zeta_phi^c and e(1) = zeta_{p^l}^r");
  m.def("g_brute", [](const RingParams& ring, int64_t c, int64_t r, long long cap) {
    const auto F = session_field(ring);
    return g_brute(MultChar(ring, c, F), AddChar(ring, r, F), cap).exact;
  }, py::arg("ring"), py::arg("c"), py::arg("r"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("odoni_value", [](const RingParams& ring) { return odoni_value(ring, session_field(ring)); });

  m.def("degree", [](const RingParams& ring, const CharSpec& spec) { return FamilyCharacter(ring, spec).degree(); });
  m.def("chi", [](const RingParams& ring, const CharSpec& spec, std::vector<int64_t> x) {
    if (x.size() != 4) throw Error(Errc::BadArgument, "matrix takes four entries a, b, c, d");
    return FamilyCharacter(ring, spec).chi(Mat2{ring.reduce(x[0]), ring.reduce(x[1]), ring.reduce(x[2]), ring.reduce(x[3])});
  }, py::arg("ring"), py::arg("spec"), py::arg("x"));
  m.def("tau", [](const RingParams& ring, const CharSpec& spec, int64_t r, const std::string& method, long long cap) {
    const FamilyCharacter chi(ring, spec);
    if (method == "closed") return tau_closed(chi, r).exact;
    if (method == "subgroup") return tau_oracle_subgroup(chi, r, cap).exact;
    if (method == "full") return tau_oracle_full(chi, r, cap).exact;
    throw Error(Errc::BadArgument, "method must be closed, subgroup or full");
  }, py::arg("ring"), py::arg("spec"), py::arg("r"), py::arg("method") = "closed",
     py::arg("cap") = kDefaultEnumerationCap);
  m.def("tau_x4", [](const RingParams& ring, int64_t twist, const CharSpec& theta, int64_t r, long long cap) {
    const auto res = tau_X4(ring, twist, theta_from_spec(ring, theta), r, cap);
    return py::make_tuple(res.value.exact, res.method);
  }, py::arg("ring"), py::arg("twist"), py::arg("theta"), py::arg("r"), py::arg("cap") = kDefaultEnumerationCap);

  m.def("counts", [](const RingParams& ring) {
    py::dict d;
    for (Family fam : {Family::X1, Family::X2, Family::X3}) d[family_name(fam)] = family_count_formula(fam, ring);
    return d;
  });

  m.def("psum", [](int64_t p, int i, int j, int k, int64_t beta, int64_t b, int64_t r) {
    const PSumParams q{p, i, j, k, beta, b, r};
    const PSumResult res = p_sum_closed(q);
    py::dict d;
    d["P"] = res.P;
    d["P1"] = res.P1;
    d["case"] = res.case_label;
    d["closed_exact"] = res.closed_exact;
    return d;
  }, py::arg("p"), py::arg("i"), py::arg("j"), py::arg("k"), py::arg("beta") = 1, py::arg("b") = 1, py::arg("r") = 1);
  m.def("psum_brute", [](int64_t p, int i, int j, int k, int64_t beta, int64_t b, int64_t r) {
    return p_sum_brute(PSumParams{p, i, j, k, beta, b, r});
  }, py::arg("p"), py::arg("i"), py::arg("j"), py::arg("k"), py::arg("beta") = 1, py::arg("b") = 1, py::arg("r") = 1);

  m.def("verify", [](const std::string& suite, int64_t p, int l, int imax) {
    if (suite == "appendix") return suite_dict(verify_appendix(p, imax));
    const RingParams ring = RingParams::make(p, l);
    if (suite == "gauss") return suite_dict(verify_gauss(ring));
    if (suite == "tau") return suite_dict(verify_tau(ring));
    if (suite == "counts") return suite_dict(verify_counts(ring));
    if (suite == "odoni") return suite_dict(verify_odoni(ring));
    if (suite == "magnitudes") return suite_dict(verify_magnitudes(ring));
    throw Error(Errc::BadArgument, "unknown suite " + suite);
  }, py::arg("suite"), py::arg("p") = 3, py::arg("l") = 2, py::arg("imax") = 2);
}
