#include "hopfq/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "hopfq/errors.hpp"

namespace hopfq {
namespace {

void require_three(const PureState& state, const char* what) {
  if (state.qubits() != 3) throw ContractViolation(std::string(what) + " needs a three-qubit state");
}

// t with qubit `pos` (0-based) set to r and the other two to (b, c) in order.
Complex t_at(const PureState& s, int pos, int r, int b, int c) {
  switch (pos) {
    case 0: return s.t(r, b, c);
    case 1: return s.t(b, r, c);
    default: return s.t(b, c, r);
  }
}

}  // namespace

DensityMatrix2 partial_trace_keep(const PureState& state, int keep) {
  const CutMatrix mat = reshape_matrix(state, keep);
  DensityMatrix2 rho;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      Complex acc = 0.0;
      for (int j = 0; j < mat.cols; ++j) acc += mat(r, j) * std::conj(mat(c, j));
      rho.m[static_cast<std::size_t>(2 * r + c)] = acc;
    }
  }
  return rho;
}

DensityMatrix2 bloch_density(const BasePoint& base) {
  const double x = base.x(1), y = base.x(2), z = base.last();
  DensityMatrix2 rho;
  rho.m = {Complex(0.5 * (1.0 + z)), Complex(0.5 * x, -0.5 * y), Complex(0.5 * x, 0.5 * y), Complex(0.5 * (1.0 - z))};
  return rho;
}

double e_from_base(const BasePoint& base) {
  double e = 0.0;
  for (std::size_t i = 3; i < base.dim(); ++i) e += base.x(i) * base.x(i);
  return std::min(e, 1.0);
}

double e_hopf(const PureState& state, int cut) {
  require_three(state, "e_hopf");
  return e_from_base(hopf_base(state, cut));
}

double e_avg(const PureState& state) { return (e_hopf(state, 1) + e_hopf(state, 2) + e_hopf(state, 3)) / 3.0; }

double minor_measure(const PureState& state, double normalization) {
  require_three(state, "minor_measure");
  double total = 0.0;
  for (int pos = 0; pos < 3; ++pos) {
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int bp = 0; bp < 2; ++bp)
          for (int cp = 0; cp < 2; ++cp) {
            const Complex minor = t_at(state, pos, 0, b, c) * t_at(state, pos, 1, bp, cp) -
                                  t_at(state, pos, 0, bp, cp) * t_at(state, pos, 1, b, c);
            total += std::norm(minor);
          }
  }
  return normalization * total;
}

std::array<double, 6> separability_conditions(const PureState& state, int cut) {
  require_three(state, "separability_conditions");
  const PureState s = bring_to_front(state, cut);
  const Complex a0 = s[0], a1 = s[1], b0 = s[2], b1 = s[3];
  const Complex d0 = s[4], d1 = s[5], g0 = s[6], g1 = s[7];
  return {std::abs(a0 * g1 - d0 * b1), std::abs(a0 * g0 - d0 * b0), std::abs(a0 * d1 - d0 * a1),
          std::abs(a1 * g1 - d1 * b1), std::abs(a1 * g0 - d1 * b0), std::abs(b0 * g1 - g0 * b1)};
}

double separability_2qubit(const PureState& state) {
  if (state.qubits() != 2) throw ContractViolation("separability_2qubit needs a two-qubit state");
  return std::abs(state[0] * state[3] - state[1] * state[2]);
}

double max_minor(const CutMatrix& m) {
  double worst = 0.0;
  for (int i = 0; i < m.cols; ++i) {
    for (int j = i + 1; j < m.cols; ++j) {
      worst = std::max(worst, std::abs(m(0, i) * m(1, j) - m(0, j) * m(1, i)));
    }
  }
  return worst;
}

std::string Classification::to_string() const {
  switch (kind) {
    case SeparabilityKind::fully_separable: return "fully-separable";
    case SeparabilityKind::biseparable: return "biseparable(cut " + std::to_string(cut) + ")";
    case SeparabilityKind::entangled: return "entangled";
  }
  return "entangled";
}

EntanglementReport classify(const PureState& state, double tol) {
  require_three(state, "classify");
  EntanglementReport report;
  std::array<bool, 3> passes{};
  for (int cut = 1; cut <= 3; ++cut) {
    const auto k = static_cast<std::size_t>(cut - 1);
    report.e_per_cut[k] = e_hopf(state, cut);
    report.residuals[k] = separability_conditions(state, cut);
    passes[k] = *std::max_element(report.residuals[k].begin(), report.residuals[k].end()) < tol;
  }
  report.e_avg = (report.e_per_cut[0] + report.e_per_cut[1] + report.e_per_cut[2]) / 3.0;
  report.minor_measure = minor_measure(state);

  const auto count = std::count(passes.begin(), passes.end(), true);
  if (count == 3) {
    report.classification = {SeparabilityKind::fully_separable, 0};
  } else if (count == 1) {
    const auto at = std::find(passes.begin(), passes.end(), true) - passes.begin();
    report.classification = {SeparabilityKind::biseparable, static_cast<int>(at) + 1};
  } else {
    report.classification = {SeparabilityKind::entangled, 0};
  }
  return report;
}

}  // namespace hopfq
