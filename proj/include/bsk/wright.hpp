#pragma once

#include <span>
#include <utility>
#include <vector>

#include "bsk/series.hpp"

namespace bsk {

// One gamma factor Gamma(shift + weight * k) of a Wright-series term.
struct WrightParam {
  double shift;
  double weight;
};

// Parameters of the generalized Wright function
//   pPsiq(z) = sum_k prod Gamma(a_i + alpha_i k) / prod Gamma(b_j + beta_j k) z^k / k!
struct WrightSpec {
  std::vector<WrightParam> upper;
  std::vector<WrightParam> lower;
};

// sum(beta_j) - sum(alpha_i). The series is entire when this exceeds -1.
double wright_delta(const WrightSpec& spec) noexcept;

// +infinity in the entire regime; at delta == -1 the finite radius
// prod |alpha_i|^(-alpha_i) * prod |beta_j|^(beta_j). Throws DivergenceError
// when delta < -1.
double wright_radius(const WrightSpec& spec);

// Term k of the Wright series, assembled in log space with the sign tracked
// separately. Zero at a denominator pole; PoleError at a numerator pole.
double wright_term(const WrightSpec& spec, double z, std::size_t k);

// Direct summation of pPsiq, one log-space term at a time. Throws
// DivergenceError outside the series domain (delta < -1, or delta == -1 with
// |z| > 0.9 * radius) and PoleError if a numerator gamma is evaluated at a
// pole. Denominator poles make their term vanish.
SeriesValue wright_eval(const WrightSpec& spec, double z, double tol,
                        std::size_t max_terms = kDefaultTermCap);

// Generalized hypergeometric pFq by the Pochhammer term recurrence.
SeriesValue pfq_eval(std::span<const double> upper, std::span<const double> lower, double z,
                     double tol, std::size_t max_terms = kDefaultTermCap);

// Evaluates both sides of
//   pPsiq[(a,1); (b,1); z] = prod Gamma(a) / prod Gamma(b) * pFq[a; b; z]
// and returns (Wright side, prefactored pFq side).
std::pair<double, double> wright_reduce_check(std::span<const double> upper,
                                              std::span<const double> lower, double z);

}  // namespace bsk
