#pragma once

namespace basel {

// 36 significant digits; closed forms are evaluated in long double and
// rounded once to binary64.
inline constexpr long double kPiLong = 3.14159265358979323846264338327950288L;
inline constexpr double kPi = static_cast<double>(kPiLong);
inline constexpr double kPiSquared = static_cast<double>(kPiLong * kPiLong);

inline constexpr double kSqrt2 = 1.41421356237309504880168872420969808;

}  // namespace basel
