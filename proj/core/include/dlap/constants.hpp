#pragma once

#include <numbers>

namespace dlap {

// Every constant built from sqrt(2) derives from this one value.
inline constexpr double kSqrt2 = std::numbers::sqrt2;

/// Floor on the spectral gap of any finite metric space: (9 - 4 sqrt 2) / 7.
inline constexpr double kMetricGapFloor = (9.0 - 4.0 * kSqrt2) / 7.0;

/// Conjectured floor for every connected graph; proved for abelian Cayley
/// graphs and translation-invariant metrics on abelian groups.
inline constexpr double kTwoThirds = 2.0 / 3.0;

/// Stated floor for abelian Cayley graphs of odd order (strict inequality).
inline constexpr double kOddCayleyGapFloor = 0.718;

/// Coefficient 1 + 2 sqrt 2 of the cross term in the balanced quadratic form.
inline constexpr double kCrossCoefficient = 1.0 + 2.0 * kSqrt2;

inline constexpr double kSqrt2PlusHalf = kSqrt2 + 0.5;
inline constexpr double kSqrt2MinusHalf = kSqrt2 - 0.5;

/// Default tolerance for floating-point bound checks.
inline constexpr double kCheckTolerance = 1e-9;

}  // namespace dlap
