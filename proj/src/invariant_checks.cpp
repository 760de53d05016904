#include "hopfq/invariant_checks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "hopfq/hopf_maps.hpp"

namespace hopfq {
namespace {

using Failure = std::optional<std::string>;

std::string exact(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// The state as a state-spec literal.
std::string spec_of(const PureState& s) {
  std::string out;
  for (const Complex& a : s.amplitudes()) {
    if (!out.empty()) out += ' ';
    out += exact(a.real()) + "," + exact(a.imag());
  }
  return out;
}

std::string coeffs_of(const HyperComplex& h) {
  std::string out = "(";
  for (std::size_t i = 0; i < h.size(); ++i) out += (i ? " " : "") + exact(h[i]);
  return out + ")";
}

Failure fail_state(const PureState& s, const std::string& what, double err) {
  return "state \"" + spec_of(s) + "\": " + what + " (error " + exact(err) + ")";
}

HyperComplex random_unit(Level level, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  HyperComplex h(level);
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = gauss(rng);
  return h / norm(h);
}

Level random_level(std::mt19937_64& rng) { return static_cast<Level>(1 + static_cast<int>(rng() % 3)); }

PureState product_state(std::mt19937_64& rng) { return tensor(random_state(1, rng()), random_state(2, rng())); }

double max_diff(const PureState& a, const PureState& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.amplitudes().size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_diff(const BasePoint& a, const BasePoint& b) {
  double m = 0.0;
  for (std::size_t i = 1; i <= a.dim(); ++i) m = std::max(m, std::abs(a.x(i) - b.x(i)));
  return m;
}

// Coefficient difference divided by max(1, |a|^2); infinities match only each other.
double ext_diff(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite() ? 0.0 : INFINITY;
  const double scale = std::max(1.0, norm_sq(a.value()));
  return max_abs_diff(a.value(), b.value()) / scale;
}

class Runner {
 public:
  explicit Runner(const CheckConfig& config) : config_(config) {}

  template <class Trial>
  void suite(std::string name, Trial&& trial, std::uint64_t trials) {
    SuiteResult result{std::move(name), 0, trials, std::nullopt};
    const std::uint64_t stream = trial_seed(config_.seed, summary_.suites.size());
    for (std::uint64_t i = 0; i < trials; ++i) {
      std::mt19937_64 rng(trial_seed(stream, i));
      if (Failure f = trial(rng)) {
        result.counterexample = "trial " + std::to_string(i) + ", seed " + std::to_string(config_.seed) + ": " + *f;
        break;
      }
      ++result.passed;
    }
    summary_.suites.push_back(std::move(result));
  }

  template <class Trial>
  void suite(std::string name, Trial&& trial) {
    suite(std::move(name), std::forward<Trial>(trial), config_.trials);
  }

  CheckSummary take() { return std::move(summary_); }

 private:
  const CheckConfig& config_;
  CheckSummary summary_;
};

// The 42 products implied by the seven octonion cycles.
Failure cycle_table_failure() {
  constexpr std::array<std::array<int, 3>, 7> cycles{
      {{1, 2, 3}, {2, 4, 6}, {4, 3, 5}, {3, 6, 7}, {6, 5, 1}, {5, 7, 2}, {7, 1, 4}}};
  const auto e = [](int k) { return HyperComplex::unit(Level::octonion, k); };
  for (const auto& c : cycles) {
    for (int r = 0; r < 3; ++r) {
      const int a = c[static_cast<std::size_t>(r)], b = c[static_cast<std::size_t>((r + 1) % 3)],
                p = c[static_cast<std::size_t>((r + 2) % 3)];
      if (!(mul(e(a), e(b)) == e(p))) {
        return "i" + std::to_string(a) + " i" + std::to_string(b) + " = " + coeffs_of(mul(e(a), e(b)));
      }
      if (!(mul(e(b), e(a)) == -e(p))) {
        return "i" + std::to_string(b) + " i" + std::to_string(a) + " = " + coeffs_of(mul(e(b), e(a)));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool CheckSummary::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

const SuiteResult* CheckSummary::first_failure() const {
  const auto it = std::find_if(suites.begin(), suites.end(), [](const SuiteResult& s) { return !s.ok(); });
  return it == suites.end() ? nullptr : &*it;
}

CheckSummary run_checks(const CheckConfig& config) {
  Runner run(config);

  run.suite("algebra.norm_multiplicativity", [](std::mt19937_64& rng) -> Failure {
    const Level level = random_level(rng);
    std::normal_distribution<double> gauss;
    const HyperComplex a = random_unit(level, rng) * std::exp(gauss(rng));
    const HyperComplex b = random_unit(level, rng) * std::exp(gauss(rng));
    const double lhs = norm_sq(mul(a, b)), rhs = norm_sq(a) * norm_sq(b);
    const double err = std::abs(lhs - rhs) / rhs;
    if (!(err < 1e-10)) return "a=" + coeffs_of(a) + " b=" + coeffs_of(b) + " relative error " + exact(err);
    return std::nullopt;
  });

  run.suite("algebra.alternativity", [](std::mt19937_64& rng) -> Failure {
    const HyperComplex a = random_unit(Level::octonion, rng), b = random_unit(Level::octonion, rng);
    const double err = std::max({max_abs_diff(mul(mul(a, a), b), mul(a, mul(a, b))),
                                 max_abs_diff(mul(mul(a, b), a), mul(a, mul(b, a))),
                                 max_abs_diff(mul(mul(b, a), a), mul(b, mul(a, a)))});
    if (!(err < tol::kIdentity)) return "a=" + coeffs_of(a) + " b=" + coeffs_of(b) + " error " + exact(err);
    return std::nullopt;
  });

  run.suite("algebra.associativity_below_octonions", [](std::mt19937_64& rng) -> Failure {
    const Level level = static_cast<Level>(1 + static_cast<int>(rng() % 2));
    const HyperComplex a = random_unit(level, rng), b = random_unit(level, rng), c = random_unit(level, rng);
    const double err = max_abs_diff(mul(mul(a, b), c), mul(a, mul(b, c)));
    if (!(err < tol::kIdentity)) return "a=" + coeffs_of(a) + " b=" + coeffs_of(b) + " error " + exact(err);
    return std::nullopt;
  });

  run.suite("algebra.conj_anti_automorphism", [](std::mt19937_64& rng) -> Failure {
    const Level level = random_level(rng);
    const HyperComplex a = random_unit(level, rng), b = random_unit(level, rng);
    const double err = max_abs_diff(conj(mul(a, b)), mul(conj(b), conj(a)));
    if (!(err < tol::kIdentity)) return "a=" + coeffs_of(a) + " b=" + coeffs_of(b) + " error " + exact(err);
    return std::nullopt;
  });

  run.suite("algebra.inverse_cancellation", [](std::mt19937_64& rng) -> Failure {
    const HyperComplex x = random_unit(Level::octonion, rng), y = random_unit(Level::octonion, rng);
    const double err = std::max(max_abs_diff(mul(mul(x, y), inverse(y)), x),
                                max_abs_diff(mul(inverse(y), mul(y, x)), x));
    if (!(err < tol::kIdentity)) return "x=" + coeffs_of(x) + " y=" + coeffs_of(y) + " error " + exact(err);
    return std::nullopt;
  });

  run.suite("algebra.cycle_table", [](std::mt19937_64&) { return cycle_table_failure(); }, 1);

  run.suite("states.pack_bijection", [](std::mt19937_64& rng) -> Failure {
    const PureState s = random_state(1 + static_cast<int>(rng() % 3), rng());
    const AlgebraPair p = pack(s);
    const double norm_err = std::abs(norm_sq(p.first) + norm_sq(p.second) - 1.0);
    if (!(norm_err < tol::kIdentity)) return fail_state(s, "|o1|^2 + |o2|^2 != 1", norm_err);
    const double err = max_diff(unpack(p), s);
    if (!(err < tol::kIdentity)) return fail_state(s, "unpack(pack(s)) != s", err);
    return std::nullopt;
  });

  run.suite("hopf.base_normalization", [](std::mt19937_64& rng) -> Failure {
    const PureState s = random_state(1 + static_cast<int>(rng() % 3), rng());
    const double err = std::abs(hopf_base(s).norm_sq() - 1.0);
    if (!(err < tol::kIdentity)) return fail_state(s, "sum X^2 != 1", err);
    return std::nullopt;
  });

  run.suite("hopf.closed_form_ratio", [](std::mt19937_64& rng) -> Failure {
    const PureState s = random_state(3, rng());
    const double err = ext_diff(h1_value(s), h1_closed_form(s));
    if (!(err < 1e-10)) return fail_state(s, "o1 o2^-1 differs from the C1..C4 form", err);
    return std::nullopt;
  });

  run.suite("hopf.stereographic_consistency", [](std::mt19937_64& rng) -> Failure {
    const PureState s = random_state(1 + static_cast<int>(rng() % 3), rng());
    const ExtendedValue h = h1_value(s);
    const double err = ext_diff(h, stereographic(hopf_base(s))) / (h.is_infinite() ? 1.0 : std::max(1.0, norm(h.value())));
    if (!(err < 1e-9)) return fail_state(s, "stereographic(hopf_base) != h1", err);
    const double back = max_diff(stereographic_inverse(h), hopf_base(s));
    if (!(back < 1e-9)) return fail_state(s, "stereographic_inverse(h1) != hopf_base", back);
    return std::nullopt;
  });

  run.suite("hopf.inverse_round_trip", [](std::mt19937_64& rng) -> Failure {
    const Level level = random_level(rng);
    const HyperComplex dir = random_unit(level, rng);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const double z = unif(rng), r = std::sqrt(1.0 - z * z);
    std::vector<double> x(dir.size() + 1);
    for (std::size_t k = 0; k < dir.size(); ++k) x[k] = r * dir[k];
    x.back() = z;
    const BasePoint base(std::move(x));
    const HyperComplex fiber = random_unit(level, rng);
    const PureState s = hopf_inverse(base, fiber);
    const double err = max_diff(hopf_base(s), base);
    if (!(err < 1e-9)) return fail_state(s, "hopf_base(hopf_inverse(b, o)) != b for fiber " + coeffs_of(fiber), err);
    return std::nullopt;
  });

  run.suite("hopf.fiber_chart_rebuild", [](std::mt19937_64& rng) -> Failure {
    const PureState s = random_state(1 + static_cast<int>(rng() % 3), rng());
    const double err = max_diff(rebuild(fiber_chart(s)), s);
    if (!(err < 1e-10)) return fail_state(s, "rebuild(fiber_chart(s)) != s", err);
    return std::nullopt;
  });

  run.suite("hopf.fiber_invariance", [](std::mt19937_64& rng) -> Failure {
    const PureState s = random_state(3, rng());
    const ExtendedValue y = h1_value(s);
    if (y.is_infinite()) return std::nullopt;
    const HyperComplex d = random_unit(Level::octonion, rng);
    const HyperComplex yd = mul(y.value(), d);
    const double n = std::sqrt(norm_sq(yd) + norm_sq(d));
    const HyperComplex o2 = d / n;
    const double err = ext_diff(y, ExtendedValue::finite(mul(yd / n, inverse(o2))));
    if (!(err < 1e-10)) return fail_state(s, "h1(y d, d) != y for d = " + coeffs_of(d), err);
    return std::nullopt;
  });

  run.suite("hopf.product_sensitivity", [](std::mt19937_64& rng) -> Failure {
    const PureState s3 = product_state(rng);
    const BasePoint b3 = hopf_base(s3);
    double worst = 0.0;
    for (std::size_t i = 3; i <= 8; ++i) worst = std::max(worst, std::abs(b3.x(i)));
    if (!(worst < 1e-10)) return fail_state(s3, "product state has nonzero X3..X8", worst);
    const PureState s2 = tensor(random_state(1, rng()), random_state(1, rng()));
    const BasePoint b2 = hopf_base(s2);
    const double worst2 = std::max(std::abs(b2.x(3)), std::abs(b2.x(4)));
    if (!(worst2 < 1e-10)) return fail_state(s2, "product state has nonzero X3, X4", worst2);
    return std::nullopt;
  });

  // A global phase keeps the first-qubit Bloch coordinates and the length of
  // the middle block; for two and three qubits it rotates the middle block.
  run.suite("hopf.phase_invariance", [](std::mt19937_64& rng) -> Failure {
    const PureState s = random_state(1 + static_cast<int>(rng() % 3), rng());
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    const Complex phase = std::polar(1.0, angle(rng));
    std::vector<Complex> amps(s.amplitudes().begin(), s.amplitudes().end());
    for (Complex& a : amps) a *= phase;
    const BasePoint a = hopf_base(s), b = hopf_base(PureState(std::move(amps)));
    const double err = std::max({std::abs(a.x(1) - b.x(1)), std::abs(a.x(2) - b.x(2)), std::abs(a.last() - b.last()),
                                 std::abs(e_from_base(a) - e_from_base(b))});
    if (!(err < tol::kIdentity)) return fail_state(s, "global phase moved the Bloch coordinates", err);
    return std::nullopt;
  });

  run.suite("entanglement.e_equals_4det", [](std::mt19937_64& rng) -> Failure {
    const PureState s = random_state(3, rng());
    for (int cut = 1; cut <= 3; ++cut) {
      const double err = std::abs(e_hopf(s, cut) - 4.0 * partial_trace_keep(s, cut).det());
      if (!(err < 1e-10)) return fail_state(s, "E != 4 det rho at cut " + std::to_string(cut), err);
    }
    return std::nullopt;
  });

  run.suite("entanglement.minor_measure_equals_e_avg", [&config](std::mt19937_64& rng) -> Failure {
    const PureState s = random_state(3, rng());
    const double err = std::abs(minor_measure(s, config.minor_normalization) - e_avg(s));
    if (!(err < 1e-10)) return fail_state(s, "minor_measure != e_avg", err);
    return std::nullopt;
  });

  run.suite("entanglement.bloch_density_matches_trace", [](std::mt19937_64& rng) -> Failure {
    const PureState s = random_state(2 + static_cast<int>(rng() % 2), rng());
    for (int cut = 1; cut <= s.qubits(); ++cut) {
      const DensityMatrix2 a = bloch_density(hopf_base(s, cut)), b = partial_trace_keep(s, cut);
      double err = 0.0;
      for (std::size_t k = 0; k < 4; ++k) err = std::max(err, std::abs(a.m[k] - b.m[k]));
      if (!(err < 1e-10)) return fail_state(s, "bloch_density != partial trace at cut " + std::to_string(cut), err);
    }
    return std::nullopt;
  });

  run.suite("entanglement.bloch_ball", [](std::mt19937_64& rng) -> Failure {
    const auto radius_sq = [](const BasePoint& b) { return b.x(1) * b.x(1) + b.x(2) * b.x(2) + b.last() * b.last(); };
    const PureState s = random_state(3, rng());
    const double r = radius_sq(hopf_base(s));
    if (!(r <= 1.0 + tol::kIdentity)) return fail_state(s, "outside the Bloch ball", r - 1.0);
    const PureState p = product_state(rng);
    const double gap = std::abs(radius_sq(hopf_base(p)) - 1.0);
    if (!(gap < 1e-10)) return fail_state(p, "separable state off the Bloch sphere", gap);
    return std::nullopt;
  });

  run.suite("entanglement.residuals_detect_separability", [](std::mt19937_64& rng) -> Failure {
    const auto worst = [](const std::array<double, 6>& r) { return *std::max_element(r.begin(), r.end()); };
    const PureState p = product_state(rng);
    if (!(worst(separability_conditions(p, 1)) < tol::kSeparability && e_hopf(p, 1) < 1e-10)) {
      return fail_state(p, "product state fails the cut-1 conditions", worst(separability_conditions(p, 1)));
    }
    const PureState s = random_state(3, rng());
    if (!(worst(separability_conditions(s, 1)) >= tol::kSeparability && e_hopf(s, 1) > 0.0)) {
      return fail_state(s, "generic state passes the cut-1 conditions", worst(separability_conditions(s, 1)));
    }
    return std::nullopt;
  });

  run.suite("entanglement.local_phase_invariance", [](std::mt19937_64& rng) -> Failure {
    const PureState s = random_state(3, rng());
    const int qubit = static_cast<int>(rng() % 3);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    const Complex phase = std::polar(1.0, angle(rng));
    std::vector<Complex> amps(s.amplitudes().begin(), s.amplitudes().end());
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if ((i >> (2 - qubit)) & 1U) amps[i] *= phase;
    }
    const PureState rotated(std::move(amps));
    for (int cut = 1; cut <= 3; ++cut) {
      const double err = std::abs(e_hopf(rotated, cut) - e_hopf(s, cut));
      if (!(err < 1e-10)) return fail_state(s, "phase rotation changed E at cut " + std::to_string(cut), err);
    }
    return std::nullopt;
  });

  return run.take();
}

}  // namespace hopfq
