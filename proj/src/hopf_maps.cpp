#include "hopfq/hopf_maps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hopfq/entanglement.hpp"
#include "hopfq/errors.hpp"

namespace hopfq {
namespace {

Level level_for_dim(std::size_t dim) {
  switch (dim) {
    case 3: return Level::complex;
    case 5: return Level::quaternion;
    case 9: return Level::octonion;
    default: throw ContractViolation("base point needs 3, 5 or 9 coordinates, got " + std::to_string(dim));
  }
}

// X1 - X2 i1 + X3 i2 + ... ; equals o1 o2* scaled by 2.
HyperComplex base_vector(const BasePoint& base) {
  HyperComplex v(base.level());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = base.x(k + 1);
  v[1] = -v[1];
  return v;
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

BasePoint::BasePoint(std::vector<double> coords) : coords_(std::move(coords)) { level_for_dim(coords_.size()); }

Level BasePoint::level() const { return level_for_dim(coords_.size()); }

double BasePoint::norm_sq() const {
  double s = 0.0;
  for (double x : coords_) s += x * x;
  return s;
}

const HyperComplex& ExtendedValue::value() const {
  if (!value_) throw ContractViolation("value at infinity has no coefficients");
  return *value_;
}

BasePoint base_from_pair(const AlgebraPair& pair) {
  const HyperComplex p = mul(pair.first, conj(pair.second));
  std::vector<double> x(p.size() + 1);
  x[0] = 2.0 * p[0];
  x[1] = -2.0 * p[1];
  for (std::size_t m = 2; m < p.size(); ++m) x[m] = 2.0 * p[m];
  x.back() = norm_sq(pair.first) - norm_sq(pair.second);
  return BasePoint(std::move(x));
}

BasePoint hopf_base(const PureState& state) { return base_from_pair(pack(state)); }

BasePoint hopf_base(const PureState& state, int cut) { return hopf_base(bring_to_front(state, cut)); }

ExtendedValue h1_value(const PureState& state) {
  const AlgebraPair pair = pack(state);
  if (norm_sq(pair.second) < tol::kPole) return ExtendedValue::infinity(pair.first.level());
  return ExtendedValue::finite(mul(pair.first, inverse(pair.second)));
}

RatioTerms ratio_terms(const PureState& s) {
  if (s.qubits() != 3) throw ContractViolation("ratio_terms needs a three-qubit state");
  const Complex a0 = s[0], a1 = s[1], b0 = s[2], b1 = s[3];
  const Complex d0 = s[4], d1 = s[5], g0 = s[6], g1 = s[7];
  using std::conj;
  RatioTerms r;
  r.c1 = a0 * conj(d0) + conj(d1) * a1 + conj(g0) * b0 + b1 * conj(g1);
  r.c2 = a1 * d0 - d1 * a0 + conj(b1 * g0 - g1 * b0);
  r.c3 = b0 * d0 - g0 * a0 + conj(a1 * g1 - d1 * b1);
  r.c4 = d1 * b0 - a1 * g0 + conj(b1 * d0 - g1 * a0);
  r.denominator = std::norm(d0) + std::norm(d1) + std::norm(g0) + std::norm(g1);
  return r;
}

ExtendedValue h1_closed_form(const PureState& state) {
  const RatioTerms r = ratio_terms(state);
  if (r.denominator < tol::kPole) return ExtendedValue::infinity(Level::octonion);
  const auto term = [](Complex c, int unit) {
    return mul(HyperComplex::from_complex(Level::octonion, c), HyperComplex::unit(Level::octonion, unit));
  };
  const HyperComplex num =
      HyperComplex::from_complex(Level::octonion, r.c1) + term(r.c2, 2) + term(r.c3, 4) + term(std::conj(r.c4), 6);
  return ExtendedValue::finite(num / r.denominator);
}

ExtendedValue stereographic(const BasePoint& base) {
  const double gap = 1.0 - base.last();
  if (gap / 2.0 < tol::kPole) return ExtendedValue::infinity(base.level());
  return ExtendedValue::finite(base_vector(base) / gap);
}

BasePoint stereographic_inverse(const ExtendedValue& v) {
  const std::size_t d = dimension(v.level());
  std::vector<double> x(d + 1, 0.0);
  if (v.is_infinite()) {
    x.back() = 1.0;
    return BasePoint(std::move(x));
  }
  const HyperComplex& h = v.value();
  const double r2 = norm_sq(h);
  const double scale = 2.0 / (1.0 + r2);
  for (std::size_t k = 0; k < d; ++k) x[k] = scale * h[k];
  x[1] = -x[1];
  x.back() = (r2 - 1.0) / (r2 + 1.0);
  return BasePoint(std::move(x));
}

FiberChart chart_over(const BasePoint& base, const HyperComplex& fiber) {
  if (fiber.level() != base.level()) throw ContractViolation("fiber level does not match the base point");
  const double fnorm = norm(fiber);
  if (std::abs(fnorm - 1.0) > tol::kContract) throw ContractViolation("fiber element is not a unit");

  FiberChart chart;
  chart.fiber = fiber / fnorm;
  const double z = clamp_unit(base.last());
  chart.omega = std::atan2(std::sqrt((1.0 - z) / 2.0), std::sqrt((1.0 + z) / 2.0));
  chart.axis = HyperComplex::unit(base.level(), 1);

  // Direction of h1 without dividing by 1 - X_last, so poles stay finite.
  const HyperComplex v = base_vector(base);
  const double vnorm = norm(v);
  if (vnorm == 0.0) return chart;
  const HyperComplex dir = v / vnorm;
  const HyperComplex im = vector_part(dir);
  const double sin_theta = norm(im);
  chart.theta = std::atan2(sin_theta, dir[0]);
  if (sin_theta >= tol::kDegenerateAngle) chart.axis = -im / sin_theta;
  return chart;
}

FiberChart fiber_chart(const PureState& state) {
  const AlgebraPair pair = pack(state);
  const Level level = pair.first.level();
  FiberChart chart = chart_over(base_from_pair(pair), HyperComplex::real(level, 1.0));
  // o = exp(theta T/2) (o1 / cos omega), or exp(-theta T/2) (o2 / sin omega).
  const double c = std::cos(chart.omega), s = std::sin(chart.omega);
  HyperComplex o = c >= s ? mul(exp_imaginary(chart.axis, chart.theta / 2.0), pair.first) / c
                          : mul(exp_imaginary(chart.axis, -chart.theta / 2.0), pair.second) / s;
  chart.fiber = o / norm(o);
  return chart;
}

PureState rebuild(const FiberChart& chart) {
  // Exact (0, o) at the south pole.
  const double c = chart.omega == M_PI / 2 ? 0.0 : std::cos(chart.omega);
  const HyperComplex first =
      c * mul(exp_imaginary(chart.axis, -chart.theta / 2.0), chart.fiber);
  const HyperComplex second =
      std::sin(chart.omega) * mul(exp_imaginary(chart.axis, chart.theta / 2.0), chart.fiber);
  const PureState raw = unpack({first, second}, tol::kContract);
  return PureState::normalized({raw.amplitudes().begin(), raw.amplitudes().end()});
}

PureState hopf_inverse(const BasePoint& base, const HyperComplex& fiber) { return rebuild(chart_over(base, fiber)); }

PureState fiber_state(const HyperComplex& fiber) {
  if (fiber.level() == Level::complex) throw ContractViolation("a complex fiber carries only a phase");
  const PureState padded = unpack({fiber / norm(fiber), HyperComplex(fiber.level())}, tol::kContract);
  const auto amps = padded.amplitudes();
  return PureState::normalized({amps.begin(), amps.begin() + static_cast<std::ptrdiff_t>(amps.size() / 2)});
}

Factorization fiber_decompose(const PureState& state, int cut, double tol) {
  if (state.qubits() < 2) throw ContractViolation("fiber_decompose needs two or three qubits");
  const PureState front = bring_to_front(state, cut);
  const double residual = max_minor(reshape_matrix(front, 1));
  if (!(residual < tol)) {
    throw SeparabilityViolation("state is entangled across cut " + std::to_string(cut) +
                                " (largest minor " + std::to_string(residual) + ")");
  }
  const BasePoint base = hopf_base(front);
  BasePoint bloch({base.x(1), base.x(2), base.last()});

  std::vector<Complex> rest;
  const PureState fiber_part = fiber_state(fiber_chart(front).fiber);
  rest.assign(fiber_part.amplitudes().begin(), fiber_part.amplitudes().end());
  const auto lead = std::find_if(rest.begin(), rest.end(), [tol](Complex a) { return std::abs(a) > tol; });
  if (lead != rest.end()) {
    const Complex phase = std::conj(*lead) / std::abs(*lead);
    for (Complex& a : rest) a *= phase;
    *lead = std::abs(*lead);
  }
  return {std::move(bloch), PureState::normalized(std::move(rest))};
}

ChainReport iterated_analysis(const PureState& state, double tol) {
  ChainReport report;
  PureState current = state;
  while (true) {
    ChainStage stage{current.qubits(), hopf_base(current), 0.0, false};
    if (current.qubits() == 1) {
      report.bloch_points.push_back(stage.base);
      report.stages.push_back(std::move(stage));
      break;
    }
    stage.e = e_from_base(stage.base);
    stage.continued = max_minor(reshape_matrix(current, 1)) < tol;
    report.stages.push_back(stage);
    if (!stage.continued) break;
    Factorization split = fiber_decompose(current, 1, tol);
    report.bloch_points.push_back(std::move(split.bloch));
    current = std::move(split.rest);
  }
  report.fully_separable = static_cast<int>(report.bloch_points.size()) == state.qubits();
  return report;
}

}  // namespace hopfq
