#pragma once

// The three Hopf fibrations S^3 -> S^2, S^7 -> S^4 and S^15 -> S^8 on 1-, 2-
// and 3-qubit states.
//
// For a packed pair (o1, o2) of level L (dimension d = 2^L) the base point
// has d + 1 coordinates
//
//   X1       =  2 S(o1 o2*)
//   X2       = -2 V_1(o1 o2*)
//   X(m+1)   =  2 V_m(o1 o2*)          m = 2 .. d-1
//   X(d+1)   =  |o1|^2 - |o2|^2
//
// so that (X1, X2, X(d+1)) are the Pauli expectations of the first qubit and
// the reduced density matrix is (I + X1 sx + X2 sy + X(d+1) sz) / 2. The
// ratio h1 = o1 o2^-1 is the stereographic image of the base point:
//
//   h1 = (X1 - X2 i1 + X3 i2 + ... + Xd i(d-1)) / (1 - X(d+1)),
//
// with X(d+1) = 1 mapped to infinity.

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "hopfq/division_algebra.hpp"
#include "hopfq/qubit_states.hpp"
#include "hopfq/tolerances.hpp"

namespace hopfq {

// Point on S^2, S^4 or S^8.
class BasePoint {
 public:
  // Takes 3, 5 or 9 coordinates; does not check the unit norm.
  explicit BasePoint(std::vector<double> coords);

  std::size_t dim() const { return coords_.size(); }
  Level level() const;
  // 1-based, X1 .. X_dim.
  double x(std::size_t i) const { return coords_.at(i - 1); }
  double last() const { return coords_.back(); }
  std::span<const double> coords() const { return coords_; }
  double norm_sq() const;

  friend bool operator==(const BasePoint&, const BasePoint&) = default;

 private:
  std::vector<double> coords_;
};

// An element of the algebra or the point at infinity.
class ExtendedValue {
 public:
  static ExtendedValue infinity(Level level) { return ExtendedValue(level, std::nullopt); }
  static ExtendedValue finite(const HyperComplex& v) { return ExtendedValue(v.level(), v); }

  bool is_infinite() const { return !value_; }
  Level level() const { return level_; }
  // Throws ContractViolation at infinity.
  const HyperComplex& value() const;

 private:
  ExtendedValue(Level level, std::optional<HyperComplex> v) : level_(level), value_(std::move(v)) {}
  Level level_;
  std::optional<HyperComplex> value_;
};

BasePoint base_from_pair(const AlgebraPair& pair);

BasePoint hopf_base(const PureState& state);
// Base point with `cut` moved into the first-qubit role.
BasePoint hopf_base(const PureState& state, int cut);

// o1 o2^-1, or infinity when |o2|^2 < tol::kPole.
ExtendedValue h1_value(const PureState& state);

// Closed-form pieces of h1 for three qubits:
//   h1 = (C1 + C2 i2 + C3 i4 + C4* i6) / denominator
// where each complex C multiplies the unit from the left.
struct RatioTerms {
  Complex c1, c2, c3, c4;
  double denominator = 0.0;  // |delta0|^2 + |delta1|^2 + |gamma0|^2 + |gamma1|^2
};

RatioTerms ratio_terms(const PureState& state);
ExtendedValue h1_closed_form(const PureState& state);

ExtendedValue stereographic(const BasePoint& base);
BasePoint stereographic_inverse(const ExtendedValue& v);

// Coordinates on the total space over a base point:
//   (cos omega exp(-theta T / 2) o, sin omega exp(theta T / 2) o)
// with cos omega = |o1|, exp(-theta T) = o1 o2^-1 / |o1 o2^-1| and o the
// unit fiber element. T defaults to i1 where sin theta vanishes.
struct FiberChart {
  double omega = 0.0;
  double theta = 0.0;
  HyperComplex axis;
  HyperComplex fiber;
};

// Throws ContractViolation if the fiber level does not match the base or
// the fiber is not a unit.
FiberChart chart_over(const BasePoint& base, const HyperComplex& fiber);
// Chart whose rebuilt state is `state` itself.
FiberChart fiber_chart(const PureState& state);
PureState rebuild(const FiberChart& chart);

// A normalized state with hopf_base(state) == base. Pole conventions: at
// X_last = 1 the state is (o, 0); at X_last = -1 it is (0, o).
PureState hopf_inverse(const BasePoint& base, const HyperComplex& fiber);

// The (n-1)-qubit state carried by a fiber element: o1 = a0 * fiber,
// o2 = a1 * fiber for a product state (a0, a1) x phi.
PureState fiber_state(const HyperComplex& fiber);

struct Factorization {
  BasePoint bloch;  // Bloch vector of the cut qubit
  PureState rest;   // remaining qubits, first nonzero amplitude real positive
};

// Splits a state that is separable across `cut` (2 or 3 qubits). Throws
// SeparabilityViolation when the largest 2x2 minor is not below `tol`.
Factorization fiber_decompose(const PureState& state, int cut = 1, double tol = tol::kSeparability);

struct ChainStage {
  int qubits = 0;      // size of the state the fibration is applied to
  BasePoint base;
  double e = 0.0;      // entanglement between its first qubit and the rest
  bool continued = false;
};

struct ChainReport {
  std::vector<ChainStage> stages;
  std::vector<BasePoint> bloch_points;  // one per split-off qubit
  bool fully_separable = false;
};

// 3 -> 1 x 2 -> 1 x 1 x 1: applies the largest fibration, and while the state
// separates descends into the fiber with the next smaller one.
ChainReport iterated_analysis(const PureState& state, double tol = tol::kSeparability);

}  // namespace hopfq
