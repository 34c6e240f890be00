// Test-only reference computations. Nothing here calls into the library.
#pragma once

#include <cmath>
#include <utility>
#include <vector>

namespace oracle {

// Brute-force Wright sum in long double for strictly positive gamma arguments.
inline long double wright_sum(const std::vector<std::pair<long double, long double>>& upper,
                              const std::vector<std::pair<long double, long double>>& lower,
                              long double z, int terms = 200) {
  long double sum = 0.0L;
  for (int k = 0; k < terms; ++k) {
    long double log_term = -std::lgammal(k + 1.0L);
    for (const auto& [a, w] : upper) log_term += std::lgammal(a + w * k);
    for (const auto& [b, w] : lower) log_term -= std::lgammal(b + w * k);
    long double term = std::exp(log_term);
    if (k > 0) term *= std::pow(z, static_cast<long double>(k));
    sum += term;
  }
  return sum;
}

// Bessel-Struve kernel by direct long double summation.
inline long double struve_kernel_sum(long double alpha, long double z, int terms = 200) {
  const long double log_sqrt_pi = 0.5L * std::log(3.14159265358979323846264338327950288L);
  long double sum = 0.0L;
  for (int n = 0; n < terms; ++n) {
    const long double c = std::exp(std::lgammal(alpha + 1.0L) + std::lgammal((n + 1.0L) / 2.0L) -
                                   log_sqrt_pi - std::lgammal(n + 1.0L) -
                                   std::lgammal(n / 2.0L + alpha + 1.0L));
    sum += c * std::pow(z, static_cast<long double>(n));
  }
  return sum;
}

inline double rel_err(double got, double want) {
  return want == 0.0 ? std::fabs(got) : std::fabs(got - want) / std::fabs(want);
}

}  // namespace oracle
