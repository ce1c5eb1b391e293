#include "swapnet/numeric.hpp"

#include <stdexcept>

namespace swapnet {

std::uint64_t binomial_exact(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial_exact: n must be nonnegative");
  if (n > 61) throw std::invalid_argument("binomial_exact: n above exact 64-bit range");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) {
    // c * (n - i) is divisible by (i + 1): the quotient is C(n, i + 1)
    c = c * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  }
  return c;
}

double log_binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("log_binomial: n must be nonnegative");
  if (k < 0 || k > n) return kNegInf;
  if (n <= 60) return std::log(static_cast<double>(binomial_exact(n, k)));
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace swapnet
