#include "bsk/wright.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bsk/errors.hpp"
#include "bsk/gammakit.hpp"

namespace bsk {
namespace {

constexpr double kDeltaEps = 1e-12;
constexpr double kBoundaryFraction = 0.9;

// First k from which every weighted gamma argument with positive weight is
// positive; before that, terms may vanish at denominator poles without the
// series having started to decay.
std::size_t first_regular_index(const WrightSpec& spec) {
  double k_min = 0.0;
  auto visit = [&](const std::vector<WrightParam>& params) {
    for (const auto& p : params) {
      if (p.weight > 0.0 && p.shift <= 0.0) {
        k_min = std::max(k_min, std::floor(-p.shift / p.weight) + 1.0);
      }
    }
  };
  visit(spec.upper);
  visit(spec.lower);
  return static_cast<std::size_t>(k_min);
}

std::string describe(const WrightParam& p) {
  return "(" + std::to_string(p.shift) + ", " + std::to_string(p.weight) + ")";
}

}  // namespace

double wright_delta(const WrightSpec& spec) noexcept {
  double delta = 0.0;
  for (const auto& p : spec.lower) delta += p.weight;
  for (const auto& p : spec.upper) delta -= p.weight;
  return delta;
}

double wright_radius(const WrightSpec& spec) {
  const double delta = wright_delta(spec);
  if (delta < -1.0 - kDeltaEps) {
    throw DivergenceError("Wright series with sum(beta) - sum(alpha) = " +
                          std::to_string(delta) + " < -1 has zero radius of convergence");
  }
  if (delta > -1.0 + kDeltaEps) return std::numeric_limits<double>::infinity();
  double radius = 1.0;
  for (const auto& p : spec.upper) radius *= std::pow(std::fabs(p.weight), -p.weight);
  for (const auto& p : spec.lower) radius *= std::pow(std::fabs(p.weight), p.weight);
  return radius;
}

double wright_term(const WrightSpec& spec, double z, std::size_t k) {
  const double kd = static_cast<double>(k);
  if (k > 0 && z == 0.0) return 0.0;
  double log_term = -log_gamma(kd + 1.0);
  int sign = 1;
  if (k > 0) {
    log_term += kd * std::log(std::fabs(z));
    if (z < 0.0 && k % 2 == 1) sign = -1;
  }
  for (std::size_t i = 0; i < spec.upper.size(); ++i) {
    const double arg = spec.upper[i].shift + spec.upper[i].weight * kd;
    if (is_nonpositive_integer(arg)) {
      throw PoleError("numerator gamma pole in upper parameter " + std::to_string(i) + " " +
                      describe(spec.upper[i]) + " at k = " + std::to_string(k));
    }
    const auto slg = signed_log_gamma(arg);
    log_term += slg.log_abs;
    sign *= slg.sign;
  }
  for (const auto& p : spec.lower) {
    const double arg = p.shift + p.weight * kd;
    if (is_nonpositive_integer(arg)) return 0.0;
    const auto slg = signed_log_gamma(arg);
    log_term -= slg.log_abs;
    sign *= slg.sign;
  }
  return sign * std::exp(log_term);
}

SeriesValue wright_eval(const WrightSpec& spec, double z, double tol, std::size_t max_terms) {
  check_tolerance(tol);
  if (!std::isfinite(z)) throw DomainError("Wright argument must be finite");
  for (std::size_t i = 0; i < spec.upper.size(); ++i) {
    if (is_nonpositive_integer(spec.upper[i].shift)) {
      throw PoleError("numerator gamma pole in upper parameter " + std::to_string(i) + " " +
                      describe(spec.upper[i]) + " at k = 0");
    }
  }

  // k = 0 term, assembled from plain gamma values so that z = 0 reproduces
  // prod Gamma(a_i) * prod 1/Gamma(b_j) exactly.
  double first = 1.0;
  bool first_direct = true;
  for (const auto& p : spec.upper) {
    if (p.shift > kGammaOverflowThreshold) {
      first_direct = false;
      break;
    }
    first *= gamma(p.shift);
  }
  if (first_direct) {
    for (const auto& p : spec.lower) first *= reciprocal_gamma(p.shift);
  }
  if (z == 0.0 && first_direct) return {first, 1, 0.0, true};

  if (z != 0.0) {
    const double delta = wright_delta(spec);
    if (delta < -1.0 - kDeltaEps) {
      throw DivergenceError("Wright series diverges: sum(beta) - sum(alpha) = " +
                            std::to_string(delta) + " < -1 (entire only when > -1)");
    }
    if (delta <= -1.0 + kDeltaEps) {
      const double radius = wright_radius(spec);
      if (std::fabs(z) > kBoundaryFraction * radius) {
        throw DivergenceError("Wright series at delta = -1 requires |z| <= 0.9 * radius = " +
                              std::to_string(kBoundaryFraction * radius) +
                              ", got |z| = " + std::to_string(std::fabs(z)));
      }
    }
  }

  const std::size_t regular_from = first_regular_index(spec);
  SeriesAccumulator acc(tol, max_terms);
  for (std::size_t k = 0; k < max_terms; ++k) {
    const double term = (k == 0 && first_direct) ? first : wright_term(spec, z, k);
    if (acc.add(term, k >= regular_from)) break;
  }
  return acc.result();
}

SeriesValue pfq_eval(std::span<const double> upper, std::span<const double> lower, double z,
                     double tol, std::size_t max_terms) {
  check_tolerance(tol);
  if (!std::isfinite(z)) throw DomainError("pFq argument must be finite");
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (is_nonpositive_integer(lower[j])) {
      throw PoleError("pFq lower parameter " + std::to_string(j) + " = " +
                      std::to_string(lower[j]) + " is a nonpositive integer");
    }
  }
  const std::size_t p = upper.size();
  const std::size_t q = lower.size();
  if (z != 0.0) {
    if (p > q + 1) {
      throw DivergenceError("pFq with p = " + std::to_string(p) + " > q + 1 = " +
                            std::to_string(q + 1) + " diverges for z != 0");
    }
    if (p == q + 1 && std::fabs(z) >= 1.0) {
      throw DivergenceError("pFq with p = q + 1 requires |z| < 1, got |z| = " +
                            std::to_string(std::fabs(z)));
    }
  }

  double regular_from = 0.0;
  for (double b : lower) {
    if (b < 0.0) regular_from = std::max(regular_from, std::floor(-b) + 1.0);
  }

  SeriesAccumulator acc(tol, max_terms);
  double term = 1.0;
  for (std::size_t n = 0; n < max_terms; ++n) {
    const double nd = static_cast<double>(n);
    if (acc.add(term, nd >= regular_from)) break;
    for (double a : upper) term *= a + nd;
    for (double b : lower) term /= b + nd;
    term *= z / (nd + 1.0);
  }
  return acc.result();
}

std::pair<double, double> wright_reduce_check(std::span<const double> upper,
                                              std::span<const double> lower, double z) {
  constexpr double kTol = 1e-16;
  WrightSpec spec;
  for (double a : upper) spec.upper.push_back({a, 1.0});
  for (double b : lower) spec.lower.push_back({b, 1.0});
  const SeriesValue psi = wright_eval(spec, z, kTol);
  const SeriesValue f = pfq_eval(upper, lower, z, kTol);
  if (!psi.converged || !f.converged) {
    throw NonConvergenceError("reduction check: series did not converge within the term cap");
  }
  double prefactor = 1.0;
  for (double a : upper) prefactor *= gamma(a);
  for (double b : lower) prefactor *= reciprocal_gamma(b);
  return {psi.value, prefactor * f.value};
}

}  // namespace bsk
