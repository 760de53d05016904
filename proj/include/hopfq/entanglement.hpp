#pragma once

#include <array>
#include <string>

#include "hopfq/hopf_maps.hpp"
#include "hopfq/qubit_states.hpp"
#include "hopfq/tolerances.hpp"

namespace hopfq {

// Normalization of the summed minor measure; with the sum running over all
// ordered column pairs this makes minor_measure equal to e_avg.
inline constexpr double kMinorMeasureNormalization = 2.0 / 3.0;

// 2x2 single-qubit density matrix, row-major.
struct DensityMatrix2 {
  std::array<Complex, 4> m{};

  Complex operator()(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }
  double trace() const { return m[0].real() + m[3].real(); }
  double det() const { return (m[0] * m[3] - m[1] * m[2]).real(); }
};

// rho = M M^dagger for M = reshape_matrix(state, keep). Two or three qubits.
DensityMatrix2 partial_trace_keep(const PureState& state, int keep);

// (I + X1 sx + X2 sy + X_last sz) / 2.
DensityMatrix2 bloch_density(const BasePoint& base);

// Sum of squares of the coordinates strictly between X2 and X_last, which
// equals 1 - X1^2 - X2^2 - X_last^2 on the sphere.
double e_from_base(const BasePoint& base);

// Entanglement between qubit `cut` and the other two, in [0, 1].
double e_hopf(const PureState& state, int cut);
// Mean of e_hopf over the three cuts.
double e_avg(const PureState& state);

// A * sum over the three single-qubit bipartitions of
// sum_{bc, b'c'} |t_0bc t_1b'c' - t_0b'c' t_1bc|^2 (cut qubit in each position).
double minor_measure(const PureState& state, double normalization = kMinorMeasureNormalization);

// The six |2x2 minor| residuals of the cut matrix, in the order
// |a0 g1 - d0 b1|, |a0 g0 - d0 b0|, |a0 d1 - d0 a1|,
// |a1 g1 - d1 b1|, |a1 g0 - d1 b0|, |b0 g1 - g0 b1|
// with the cut qubit moved to the front.
std::array<double, 6> separability_conditions(const PureState& state, int cut);

// |a0 b1 - a1 b0| for a two-qubit state.
double separability_2qubit(const PureState& state);

// Largest |2x2 minor| of a cut matrix.
double max_minor(const CutMatrix& m);

enum class SeparabilityKind { fully_separable, biseparable, entangled };

struct Classification {
  SeparabilityKind kind = SeparabilityKind::entangled;
  int cut = 0;  // set for biseparable only

  std::string to_string() const;
  friend bool operator==(const Classification&, const Classification&) = default;
};

struct EntanglementReport {
  std::array<double, 3> e_per_cut{};
  double e_avg = 0.0;
  double minor_measure = 0.0;
  Classification classification;
  std::array<std::array<double, 6>, 3> residuals{};
};

// A cut passes when all six residuals are below tol.
EntanglementReport classify(const PureState& state, double tol = tol::kSeparability);

}  // namespace hopfq
