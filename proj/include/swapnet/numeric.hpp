// numeric.hpp
// Log-space helpers shared by the analytic engines. Chain lengths in the
// hundreds drive a^{2m} below the double range, so every probability is
// assembled from logarithms and exponentiated once at the end.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace swapnet {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// k * log_value under the 0^0 = 1 convention: a zero power contributes
// exactly log(1) = 0 even when log_value is -inf (separable resource).
inline double scaled_log(int k, double log_value) {
  return k == 0 ? 0.0 : static_cast<double>(k) * log_value;
}

inline double log_sum_exp(double x, double y) {
  if (x == kNegInf) return y;
  if (y == kNegInf) return x;
  const double hi = x > y ? x : y;
  const double lo = x > y ? y : x;
  return hi + std::log1p(std::exp(lo - hi));
}

// Exact for n <= 61; intermediate products stay below 2^64.
std::uint64_t binomial_exact(int n, int k);

// log C(n, k); exact-integer route below n = 60, log-gamma above.
double log_binomial(int n, int k);

}  // namespace swapnet
