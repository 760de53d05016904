#include "hopfq/division_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hopfq/errors.hpp"
#include "hopfq/tolerances.hpp"

namespace hopfq {
namespace {

template <std::size_t N>
using Coeffs = std::array<double, N>;

template <std::size_t N>
Coeffs<N> cd_conj(const Coeffs<N>& x) {
  Coeffs<N> out;
  out[0] = x[0];
  for (std::size_t i = 1; i < N; ++i) out[i] = -x[i];
  return out;
}

template <std::size_t N>
std::pair<Coeffs<N / 2>, Coeffs<N / 2>> halves(const Coeffs<N>& x) {
  Coeffs<N / 2> lo, hi;
  std::copy_n(x.begin(), N / 2, lo.begin());
  std::copy_n(x.begin() + N / 2, N / 2, hi.begin());
  return {lo, hi};
}

// (a,b)(c,d) = (ac - d*b, bc* + da), in the plain doubling basis.
template <std::size_t N>
Coeffs<N> cd_mul(const Coeffs<N>& x, const Coeffs<N>& y) {
  if constexpr (N == 1) {
    return {x[0] * y[0]};
  } else {
    const auto [a, b] = halves(x);
    const auto [c, d] = halves(y);
    const auto ac = cd_mul(a, c);
    const auto db = cd_mul(cd_conj(d), b);
    const auto bc = cd_mul(b, cd_conj(c));
    const auto da = cd_mul(d, a);
    Coeffs<N> out;
    for (std::size_t i = 0; i < N / 2; ++i) {
      out[i] = ac[i] - db[i];
      out[N / 2 + i] = bc[i] + da[i];
    }
    return out;
  }
}

// Cycle-table basis <-> doubling basis. Only i5 and i7 move.
Coeffs<8> to_doubling(const Coeffs<8>& x) { return {x[0], x[1], x[2], x[3], x[4], x[7], x[6], -x[5]}; }
Coeffs<8> from_doubling(const Coeffs<8>& c) { return {c[0], c[1], c[2], c[3], c[4], -c[7], c[6], c[5]}; }

template <std::size_t N>
Coeffs<N> head(const HyperComplex& h) {
  Coeffs<N> out;
  std::copy_n(h.coeffs().begin(), N, out.begin());
  return out;
}

template <std::size_t N>
HyperComplex make(Level level, const Coeffs<N>& c) {
  return HyperComplex(level, std::span<const double>(c.data(), N));
}

void require_same_level(const HyperComplex& a, const HyperComplex& b) {
  if (a.level() != b.level()) {
    throw ContractViolation("level mismatch: " + std::to_string(static_cast<int>(a.level())) + " vs " +
                            std::to_string(static_cast<int>(b.level())));
  }
}

}  // namespace

HyperComplex::HyperComplex(Level level, std::span<const double> coeffs) : level_(level) {
  if (coeffs.size() != size()) {
    throw ContractViolation("expected " + std::to_string(size()) + " coefficients, got " +
                            std::to_string(coeffs.size()));
  }
  std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

HyperComplex HyperComplex::real(Level level, double x) {
  HyperComplex h(level);
  h.coeffs_[0] = x;
  return h;
}

HyperComplex HyperComplex::unit(Level level, int k) {
  if (k < 1 || static_cast<std::size_t>(k) >= dimension(level)) {
    throw ContractViolation("no imaginary unit i" + std::to_string(k) + " at this level");
  }
  HyperComplex h(level);
  h.coeffs_[static_cast<std::size_t>(k)] = 1.0;
  return h;
}

HyperComplex HyperComplex::from_complex(Level level, std::complex<double> z) {
  HyperComplex h(level);
  h.coeffs_[0] = z.real();
  h.coeffs_[1] = z.imag();
  return h;
}

HyperComplex& HyperComplex::operator+=(const HyperComplex& rhs) {
  require_same_level(*this, rhs);
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

HyperComplex& HyperComplex::operator-=(const HyperComplex& rhs) {
  require_same_level(*this, rhs);
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

HyperComplex& HyperComplex::operator*=(double s) {
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] *= s;
  return *this;
}

HyperComplex operator+(HyperComplex lhs, const HyperComplex& rhs) { return lhs += rhs; }
HyperComplex operator-(HyperComplex lhs, const HyperComplex& rhs) { return lhs -= rhs; }
HyperComplex operator-(HyperComplex x) { return x *= -1.0; }
HyperComplex operator*(HyperComplex x, double s) { return x *= s; }
HyperComplex operator*(double s, HyperComplex x) { return x *= s; }
HyperComplex operator/(HyperComplex x, double s) { return x *= 1.0 / s; }

HyperComplex mul(const HyperComplex& a, const HyperComplex& b) {
  require_same_level(a, b);
  switch (a.level()) {
    case Level::complex:
      return make(Level::complex, cd_mul(head<2>(a), head<2>(b)));
    case Level::quaternion:
      return make(Level::quaternion, cd_mul(head<4>(a), head<4>(b)));
    case Level::octonion:
      return make(Level::octonion, from_doubling(cd_mul(to_doubling(head<8>(a)), to_doubling(head<8>(b)))));
  }
  throw ContractViolation("unknown level");
}

HyperComplex conj(const HyperComplex& a) {
  HyperComplex out = -a;
  out[0] = a[0];
  return out;
}

double norm_sq(const HyperComplex& a) {
  double s = 0.0;
  for (double x : a.coeffs()) s += x * x;
  return s;
}

double norm(const HyperComplex& a) { return std::sqrt(norm_sq(a)); }

HyperComplex inverse(const HyperComplex& a) {
  const double n2 = norm_sq(a);
  if (n2 == 0.0) throw DivisionByZero("inverse of zero");
  return conj(a) / n2;
}

double scalar_part(const HyperComplex& a) { return a[0]; }

HyperComplex vector_part(const HyperComplex& a) {
  HyperComplex v = a;
  v[0] = 0.0;
  return v;
}

double max_abs_diff(const HyperComplex& a, const HyperComplex& b) {
  require_same_level(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

PolarForm polar(const HyperComplex& a) {
  const double mag = norm(a);
  if (mag == 0.0) throw DivisionByZero("polar form of zero");
  const HyperComplex v = vector_part(a);
  const double vnorm = norm(v);
  if (vnorm == 0.0) {
    return {mag, a[0] > 0.0 ? 0.0 : M_PI, HyperComplex::unit(a.level(), 1)};
  }
  // atan2 is the accurate form of arccos(S/|a|) on [0, pi].
  return {mag, std::atan2(vnorm, a[0]), v / vnorm};
}

HyperComplex reconstruct(const PolarForm& p) {
  HyperComplex out = p.axis * std::sin(p.angle);
  out[0] = std::cos(p.angle);
  return out * p.magnitude;
}

HyperComplex exp_imaginary(const HyperComplex& axis, double angle) {
  if (std::abs(axis[0]) > tol::kContract) throw ContractViolation("axis is not purely imaginary");
  if (std::abs(norm(axis) - 1.0) > tol::kContract) throw ContractViolation("axis is not a unit");
  HyperComplex out = axis * std::sin(angle);
  out[0] = std::cos(angle);
  return out;
}

}  // namespace hopfq
