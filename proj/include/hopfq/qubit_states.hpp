#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hopfq/division_algebra.hpp"
#include "hopfq/tolerances.hpp"

namespace hopfq {

using Complex = std::complex<double>;

// Normalized pure state of 1, 2 or 3 qubits.
//
// Amplitudes are ordered by the binary value of the basis label with qubit 1
// as the most significant bit: |000>, |001>, ..., |111>. For three qubits the
// amplitudes are named
//
//   alpha0 |000> + alpha1 |001> + beta0 |010> + beta1 |011>
//   + delta0 |100> + delta1 |101> + gamma0 |110> + gamma1 |111>.
//
// Global phase is kept as given.
class PureState {
 public:
  // Throws UnsupportedSize for a length other than 2, 4, 8 and
  // ContractViolation when | sum |a|^2 - 1 | > norm_tolerance.
  explicit PureState(std::vector<Complex> amplitudes, double norm_tolerance = tol::kNormalization);

  // Rescales to unit norm. Throws ContractViolation for the zero vector.
  static PureState normalized(std::vector<Complex> amplitudes);
  // Computational basis state from a label such as "010".
  static PureState basis(std::string_view bits);

  static PureState ghz();     // (|000> + |111>)/sqrt2
  static PureState w();       // (|001> + |010> + |100>)/sqrt3
  static PureState bell00();  // (|00> + |11>)/sqrt2

  int qubits() const { return qubits_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t index) const { return amplitudes_[index]; }

  // t_abc = <abc|psi> for a three-qubit state.
  Complex t(int a, int b, int c) const;

  double norm_sq() const;

  friend bool operator==(const PureState&, const PureState&) = default;

 private:
  int qubits_;
  std::vector<Complex> amplitudes_;
};

// The state as a pair of numbers of the matching level: (alpha0, alpha1) as
// complex numbers for one qubit, a quaternion pair for two and an octonion
// pair for three.
struct AlgebraPair {
  HyperComplex first;
  HyperComplex second;
};

AlgebraPair pack(const PureState& state);
// Exact inverse of pack, including the conjugated amplitudes.
PureState unpack(const AlgebraPair& pair, double norm_tolerance = tol::kNormalization);

// Amplitudes t_xy = a_x b_y with a's qubits first. Throws UnsupportedSize if
// the result has more than three qubits.
PureState tensor(const PureState& a, const PureState& b);

// Haar-random state: i.i.d. standard complex Gaussians, normalized.
PureState random_state(int qubits, std::uint64_t seed);

// Independent per-trial seed derived from a campaign seed and trial index.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

// Reorders qubits so that `qubit` (1-based) becomes qubit 1; the rest keep
// their relative order.
PureState bring_to_front(const PureState& state, int qubit);

// Row r, column j holds the amplitude with the cut qubit equal to r and the
// remaining qubits (in ascending order) forming the binary index j. Two
// columns for two qubits, four for three.
struct CutMatrix {
  int cols = 0;
  std::array<std::array<Complex, 4>, 2> m{};

  Complex operator()(int row, int col) const { return m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]; }
};

// Throws ContractViolation for a single qubit or a cut outside 1..n.
CutMatrix reshape_matrix(const PureState& state, int cut);

}  // namespace hopfq
