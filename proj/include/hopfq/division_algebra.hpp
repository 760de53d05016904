#pragma once

// Cayley-Dickson numbers at the three doubling levels above the reals.
//
// Coefficients are stored as (1, i1, ..., i7), truncated to 2^level entries.
// At level 3 the imaginary units follow the octonion cycle table
//
//   (123) (246) (435) (367) (651) (572) (714)
//
// where a cycle (abc) means ia*ib = ic, ib*ic = ia, ic*ia = ib. Products
// are computed with the doubling rule (a,b)(c,d) = (ac - d*b, bc* + da)
// applied recursively; the cycle-table units relate to the plain doubling
// basis through
//
//   o = {(x0 + x1 i1) + (x2 + x3 i1) i2} + {(x4 + x7 i1) + (x6 - x5 i1) i2} i4
//
// so levels 1 and 2 use the doubling basis unchanged.

#include <array>
#include <complex>
#include <cstddef>
#include <span>

namespace hopfq {

enum class Level : int { complex = 1, quaternion = 2, octonion = 3 };

constexpr std::size_t dimension(Level level) { return std::size_t{1} << static_cast<int>(level); }

class HyperComplex {
 public:
  static constexpr std::size_t kMaxDim = 8;

  // Zero of the given level.
  explicit HyperComplex(Level level = Level::octonion) : level_(level) {}

  // Takes exactly dimension(level) coefficients.
  HyperComplex(Level level, std::span<const double> coeffs);

  static HyperComplex real(Level level, double x);
  // The imaginary unit i_k, 1 <= k < dimension(level).
  static HyperComplex unit(Level level, int k);
  // z embedded as Re z + Im z i1.
  static HyperComplex from_complex(Level level, std::complex<double> z);

  Level level() const { return level_; }
  std::size_t size() const { return dimension(level_); }
  double operator[](std::size_t i) const { return coeffs_[i]; }
  double& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const double> coeffs() const { return {coeffs_.data(), size()}; }

  HyperComplex& operator+=(const HyperComplex& rhs);
  HyperComplex& operator-=(const HyperComplex& rhs);
  HyperComplex& operator*=(double s);

  friend bool operator==(const HyperComplex&, const HyperComplex&) = default;

 private:
  Level level_;
  std::array<double, kMaxDim> coeffs_{};
};

HyperComplex operator+(HyperComplex lhs, const HyperComplex& rhs);
HyperComplex operator-(HyperComplex lhs, const HyperComplex& rhs);
HyperComplex operator-(HyperComplex x);
HyperComplex operator*(HyperComplex x, double s);
HyperComplex operator*(double s, HyperComplex x);
HyperComplex operator/(HyperComplex x, double s);

// Non-associative at level 3. Throws ContractViolation on level mismatch.
HyperComplex mul(const HyperComplex& a, const HyperComplex& b);
inline HyperComplex operator*(const HyperComplex& a, const HyperComplex& b) { return mul(a, b); }

HyperComplex conj(const HyperComplex& a);
double norm_sq(const HyperComplex& a);
double norm(const HyperComplex& a);
// conj(a) / |a|^2; throws DivisionByZero for a == 0.
HyperComplex inverse(const HyperComplex& a);

double scalar_part(const HyperComplex& a);
HyperComplex vector_part(const HyperComplex& a);

// Largest absolute coefficient difference.
double max_abs_diff(const HyperComplex& a, const HyperComplex& b);

// a = magnitude * (cos angle + axis sin angle), angle in [0, pi].
struct PolarForm {
  double magnitude = 0.0;
  double angle = 0.0;
  HyperComplex axis;
};

// For a real input the axis is i1 and the angle is 0 or pi by sign.
// Throws DivisionByZero for a == 0.
PolarForm polar(const HyperComplex& a);
HyperComplex reconstruct(const PolarForm& p);

// cos(angle) + axis sin(angle). The axis must be unit and purely imaginary.
HyperComplex exp_imaginary(const HyperComplex& axis, double angle);

}  // namespace hopfq
