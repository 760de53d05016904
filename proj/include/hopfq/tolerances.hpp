#pragma once

namespace hopfq::tol {

// Absolute tolerance for algebraic identities on unit-scale data.
inline constexpr double kIdentity = 1e-12;

// Accepted deviation of sum |amplitude|^2 from 1 when constructing a PureState.
inline constexpr double kNormalization = 1e-12;

// Looser contract checks (unit axis, purely imaginary axis).
inline constexpr double kContract = 1e-9;

// Residual threshold below which a bipartition counts as separable.
inline constexpr double kSeparability = 1e-9;

// |o2|^2 below this is treated as the point at infinity.
inline constexpr double kPole = 1e-15;

// sin(theta) below this leaves the rotation axis undefined; i1 is used.
inline constexpr double kDegenerateAngle = 1e-12;

// CLI: inputs further than this from unit norm are rejected unless renormalized.
inline constexpr double kInputNorm = 1e-6;

}  // namespace hopfq::tol
