#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopfq/document.hpp"
#include "hopfq/errors.hpp"
#include "hopfq/state_spec.hpp"

namespace py = pybind11;
using namespace hopfq;

namespace {

// Algebra elements cross the boundary as coefficient lists of length 2, 4 or 8.
HyperComplex element(const std::vector<double>& c) {
  switch (c.size()) {
    case 2: return HyperComplex(Level::complex, c);
    case 4: return HyperComplex(Level::quaternion, c);
    case 8: return HyperComplex(Level::octonion, c);
  }
  throw ContractViolation("expected 2, 4 or 8 coefficients, got " + std::to_string(c.size()));
}

std::vector<double> coeffs(const HyperComplex& h) { return {h.coeffs().begin(), h.coeffs().end()}; }
std::vector<double> coords(const BasePoint& b) { return {b.coords().begin(), b.coords().end()}; }
std::vector<Complex> amps(const PureState& s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

PureState state(const std::vector<Complex>& a) { return PureState(a); }

py::object ratio(const ExtendedValue& v) {
  if (v.is_infinite()) return py::none();
  return py::cast(coeffs(v.value()));
}

py::dict report_dict(const EntanglementReport& r) {
  py::dict d;
  d["e_per_cut"] = r.e_per_cut;
  d["e_avg"] = r.e_avg;
  d["minor_measure"] = r.minor_measure;
  d["classification"] = r.classification.to_string();
  d["residuals"] = r.residuals;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hopf-fibration geometry of 1-, 2- and 3-qubit pure states";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", error.ptr());
  py::register_exception<DivisionByZero>(m, "DivisionByZero", error.ptr());
  py::register_exception<UnsupportedSize>(m, "UnsupportedSize", error.ptr());
  py::register_exception<SeparabilityViolation>(m, "SeparabilityViolation", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  m.def("mul", [](const std::vector<double>& a, const std::vector<double>& b) { return coeffs(mul(element(a), element(b))); });
  m.def("conj", [](const std::vector<double>& a) { return coeffs(conj(element(a))); });
  m.def("inverse", [](const std::vector<double>& a) { return coeffs(inverse(element(a))); });
  m.def("norm", [](const std::vector<double>& a) { return norm(element(a)); });
  m.def("polar", [](const std::vector<double>& a) {
    const PolarForm p = polar(element(a));
    return py::make_tuple(p.magnitude, p.angle, coeffs(p.axis));
  }, "(magnitude, angle, unit axis)");

  m.def("state", [](const std::string& spec, bool renormalize) { return amps(make_state(parse_state_spec(spec), renormalize)); },
        py::arg("spec"), py::arg("renormalize") = false, "amplitudes of a state literal such as 'ghz' or '1,0 0,0'");
  m.def("random_state", [](int n, std::uint64_t seed) { return amps(random_state(n, seed)); });
  m.def("pack", [](const std::vector<Complex>& a) {
    const AlgebraPair p = pack(state(a));
    return py::make_tuple(coeffs(p.first), coeffs(p.second));
  });

  m.def("hopf_base", [](const std::vector<Complex>& a, int cut) { return coords(hopf_base(state(a), cut)); },
        py::arg("amplitudes"), py::arg("cut") = 1);
  m.def("h1_value", [](const std::vector<Complex>& a) { return ratio(h1_value(state(a))); }, "None at infinity");
  m.def("stereographic", [](const std::vector<double>& x) { return ratio(stereographic(BasePoint(x))); });
  m.def("hopf_inverse", [](const std::vector<double>& base, const std::vector<double>& fiber) {
    return amps(hopf_inverse(BasePoint(base), element(fiber)));
  });
  m.def("fiber_decompose", [](const std::vector<Complex>& a, int cut, double tol) {
    const Factorization f = fiber_decompose(state(a), cut, tol);
    return py::make_tuple(coords(f.bloch), amps(f.rest));
  }, py::arg("amplitudes"), py::arg("cut") = 1, py::arg("tol") = tol::kSeparability);

  m.def("e_hopf", [](const std::vector<Complex>& a, int cut) { return e_hopf(state(a), cut); },
        py::arg("amplitudes"), py::arg("cut") = 1);
  m.def("e_avg", [](const std::vector<Complex>& a) { return e_avg(state(a)); });
  m.def("minor_measure", [](const std::vector<Complex>& a) { return minor_measure(state(a)); });
  m.def("separability_conditions", [](const std::vector<Complex>& a, int cut) {
    return separability_conditions(state(a), cut);
  }, py::arg("amplitudes"), py::arg("cut") = 1);
  m.def("partial_trace", [](const std::vector<Complex>& a, int keep) {
    const DensityMatrix2 r = partial_trace_keep(state(a), keep);
    return std::vector<std::vector<Complex>>{{r.m[0], r.m[1]}, {r.m[2], r.m[3]}};
  }, py::arg("amplitudes"), py::arg("keep") = 1);
  m.def("classify", [](const std::vector<Complex>& a, double tol) { return report_dict(classify(state(a), tol)); },
        py::arg("amplitudes"), py::arg("tol") = tol::kSeparability);
  m.def("iterated_analysis", [](const std::vector<Complex>& a, double tol) {
    const ChainReport c = iterated_analysis(state(a), tol);
    py::list stages, points;
    for (const ChainStage& s : c.stages) {
      py::dict d;
      d["qubits"] = s.qubits;
      d["base"] = coords(s.base);
      d["e"] = s.e;
      d["continued"] = s.continued;
      stages.append(d);
    }
    for (const BasePoint& b : c.bloch_points) points.append(coords(b));
    py::dict d;
    d["stages"] = stages;
    d["bloch_points"] = points;
    d["fully_separable"] = c.fully_separable;
    return d;
  }, py::arg("amplitudes"), py::arg("tol") = tol::kSeparability);
  m.def("analysis_text", [](const std::vector<Complex>& a) { return serialize(analysis_document(state(a))); });
}
