#include "hopfq/qubit_states.hpp"

#include <cmath>
#include <random>
#include <string>

#include "hopfq/errors.hpp"

namespace hopfq {
namespace {

int qubits_for_length(std::size_t n) {
  switch (n) {
    case 2: return 1;
    case 4: return 2;
    case 8: return 3;
    default: throw UnsupportedSize("state needs 2, 4 or 8 amplitudes, got " + std::to_string(n));
  }
}

double sum_sq(std::span<const Complex> amps) {
  double s = 0.0;
  for (const Complex& a : amps) s += std::norm(a);
  return s;
}

// z0 + z1 i2 as a quaternion.
HyperComplex quaternion(Complex z0, Complex z1) {
  const double c[4] = {z0.real(), z0.imag(), z1.real(), z1.imag()};
  return HyperComplex(Level::quaternion, c);
}

HyperComplex widen(const HyperComplex& q) {
  double c[8] = {};
  for (std::size_t i = 0; i < 4; ++i) c[i] = q[i];
  return HyperComplex(Level::octonion, c);
}

HyperComplex narrow(const HyperComplex& o) {
  const double c[4] = {o[0], o[1], o[2], o[3]};
  return HyperComplex(Level::quaternion, c);
}

// (p, q) = p + q i4.
HyperComplex octonion(const HyperComplex& p, const HyperComplex& q) {
  return widen(p) + mul(widen(q), HyperComplex::unit(Level::octonion, 4));
}

// Inverse of octonion(); uses (x i4) i4 = -x.
std::pair<HyperComplex, HyperComplex> split(const HyperComplex& o) {
  const HyperComplex p = narrow(o);
  const HyperComplex q = -mul(o - widen(p), HyperComplex::unit(Level::octonion, 4));
  return {p, narrow(q)};
}

Complex z0_of(const HyperComplex& q) { return {q[0], q[1]}; }
Complex z1_of(const HyperComplex& q) { return {q[2], q[3]}; }

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes, double norm_tolerance)
    : qubits_(qubits_for_length(amplitudes.size())), amplitudes_(std::move(amplitudes)) {
  const double n2 = sum_sq(amplitudes_);
  if (!(std::abs(n2 - 1.0) <= norm_tolerance)) {
    throw ContractViolation("state is not normalized: sum |a|^2 = " + std::to_string(n2));
  }
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
  qubits_for_length(amplitudes.size());
  const double n = std::sqrt(sum_sq(amplitudes));
  if (n == 0.0 || !std::isfinite(n)) throw ContractViolation("cannot normalize a zero or non-finite vector");
  for (Complex& a : amplitudes) a /= n;
  return PureState(std::move(amplitudes));
}

PureState PureState::basis(std::string_view bits) {
  if (bits.empty() || bits.size() > 3) throw UnsupportedSize("basis label needs 1 to 3 bits");
  std::size_t index = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw ContractViolation("basis label must contain only 0 and 1");
    index = index * 2 + static_cast<std::size_t>(ch - '0');
  }
  std::vector<Complex> amps(std::size_t{1} << bits.size());
  amps[index] = 1.0;
  return PureState(std::move(amps));
}

PureState PureState::ghz() {
  const double s = 1.0 / std::sqrt(2.0);
  return PureState({s, 0, 0, 0, 0, 0, 0, s});
}

PureState PureState::w() {
  const double s = 1.0 / std::sqrt(3.0);
  return PureState({0, s, s, 0, s, 0, 0, 0});
}

PureState PureState::bell00() {
  const double s = 1.0 / std::sqrt(2.0);
  return PureState({s, 0, 0, s});
}

Complex PureState::t(int a, int b, int c) const {
  if (qubits_ != 3) throw ContractViolation("t(a,b,c) needs a three-qubit state");
  return amplitudes_[static_cast<std::size_t>(4 * a + 2 * b + c)];
}

double PureState::norm_sq() const { return sum_sq(amplitudes_); }

AlgebraPair pack(const PureState& s) {
  switch (s.qubits()) {
    case 1:
      return {HyperComplex::from_complex(Level::complex, s[0]), HyperComplex::from_complex(Level::complex, s[1])};
    case 2:
      return {quaternion(s[0], s[1]), quaternion(s[2], s[3])};
    default: {
      // q1 = a0 + a1 i2, q2 = b0 + b1* i2, q3 = d0 + d1 i2, q4 = g0 + g1* i2
      const HyperComplex q1 = quaternion(s[0], s[1]);
      const HyperComplex q2 = quaternion(s[2], std::conj(s[3]));
      const HyperComplex q3 = quaternion(s[4], s[5]);
      const HyperComplex q4 = quaternion(s[6], std::conj(s[7]));
      return {octonion(q1, q2), octonion(q3, q4)};
    }
  }
}

PureState unpack(const AlgebraPair& pair, double norm_tolerance) {
  if (pair.first.level() != pair.second.level()) throw ContractViolation("pair levels differ");
  switch (pair.first.level()) {
    case Level::complex:
      return PureState({{pair.first[0], pair.first[1]}, {pair.second[0], pair.second[1]}}, norm_tolerance);
    case Level::quaternion:
      return PureState({z0_of(pair.first), z1_of(pair.first), z0_of(pair.second), z1_of(pair.second)},
                       norm_tolerance);
    case Level::octonion: {
      const auto [q1, q2] = split(pair.first);
      const auto [q3, q4] = split(pair.second);
      return PureState({z0_of(q1), z1_of(q1), z0_of(q2), std::conj(z1_of(q2)), z0_of(q3), z1_of(q3), z0_of(q4),
                        std::conj(z1_of(q4))},
                       norm_tolerance);
    }
  }
  throw ContractViolation("unknown level");
}

PureState tensor(const PureState& a, const PureState& b) {
  if (a.qubits() + b.qubits() > 3) {
    throw UnsupportedSize("tensor product would have " + std::to_string(a.qubits() + b.qubits()) + " qubits");
  }
  std::vector<Complex> amps;
  amps.reserve(a.amplitudes().size() * b.amplitudes().size());
  for (const Complex& x : a.amplitudes()) {
    for (const Complex& y : b.amplitudes()) amps.push_back(x * y);
  }
  return PureState::normalized(std::move(amps));
}

PureState random_state(int qubits, std::uint64_t seed) {
  if (qubits < 1 || qubits > 3) throw UnsupportedSize("random_state supports 1 to 3 qubits");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<Complex> amps(std::size_t{1} << qubits);
  for (Complex& a : amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    a = {re, im};
  }
  return PureState::normalized(std::move(amps));
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

PureState bring_to_front(const PureState& state, int qubit) {
  const int n = state.qubits();
  if (qubit < 1 || qubit > n) throw ContractViolation("qubit index " + std::to_string(qubit) + " out of range");
  if (qubit == 1) return state;
  // Bit positions counted from the most significant (qubit 1).
  std::vector<int> order{qubit};
  for (int q = 1; q <= n; ++q) {
    if (q != qubit) order.push_back(q);
  }
  std::vector<Complex> amps(state.amplitudes().size());
  for (std::size_t src = 0; src < amps.size(); ++src) {
    std::size_t dst = 0;
    for (int q : order) dst = dst * 2 + ((src >> (n - q)) & 1U);
    amps[dst] = state[src];
  }
  // Same amplitudes as the validated source, only reordered.
  return PureState(std::move(amps), 1.0);
}

CutMatrix reshape_matrix(const PureState& state, int cut) {
  if (state.qubits() < 2) throw ContractViolation("reshape_matrix needs at least two qubits");
  const PureState front = bring_to_front(state, cut);
  CutMatrix out;
  out.cols = 1 << (state.qubits() - 1);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < out.cols; ++c) {
      out.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = front[static_cast<std::size_t>(r * out.cols + c)];
    }
  }
  return out;
}

}  // namespace hopfq
