#include "bsk/quad_oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bsk/errors.hpp"
#include "bsk/gammakit.hpp"

namespace bsk {
namespace {

constexpr double kLinearArgGuard = 0.9;

std::string fmt(double v) { return std::to_string(v); }

}  // namespace

void IntegralSpec::validate() const {
  if (!std::isfinite(mu) || !std::isfinite(lambda) || !std::isfinite(a) ||
      !std::isfinite(gamma) || !std::isfinite(y)) {
    throw DomainError("integral parameters must be finite");
  }
  if (a <= 0.0) throw DomainError("scale a must be positive, got a = " + fmt(a));
  if (!(mu > 0.0 && mu < lambda)) {
    throw DomainError("integral requires 0 < mu < lambda (provided 0<Re(μ)<Re(λ)), got mu = " +
                      fmt(mu) + ", lambda = " + fmt(lambda));
  }
}

double log_oberhettinger_closed(double mu, double lambda, double a) {
  if (!(mu > 0.0 && mu < lambda) || !(a > 0.0)) {
    throw DomainError(
        "Oberhettinger integral requires 0 < mu < lambda and a > 0 (provided 0<Re(μ)<Re(λ)), "
        "got mu = " +
        fmt(mu) + ", lambda = " + fmt(lambda) + ", a = " + fmt(a));
  }
  return std::log(2.0 * lambda) - lambda * std::log(a) + mu * std::log(0.5 * a) +
         log_gamma(2.0 * mu) + log_gamma(lambda - mu) - log_gamma(1.0 + lambda + mu);
}

double oberhettinger_closed(double mu, double lambda, double a) {
  return std::exp(log_oberhettinger_closed(mu, lambda, a));
}

TransformedIntegrand::TransformedIntegrand(const IntegralSpec& spec)
    : a_(spec.a),
      gamma_y_(spec.gamma_y()),
      form_(spec.arg_form),
      scale_(std::pow(spec.a, spec.mu - spec.lambda) * std::pow(2.0, -spec.mu)),
      left_exponent_(spec.lambda - spec.mu - 1.0),
      right_exponent_(2.0 * spec.mu - 1.0) {
  spec.validate();
}

double TransformedIntegrand::x_of_u(double u) const noexcept {
  const double v = 1.0 - u;
  return a_ * v * v / (2.0 * u);
}

double TransformedIntegrand::kernel_argument(double u) const noexcept {
  if (form_ == ArgForm::FixedNumerator) return gamma_y_ * u / a_;
  const double v = 1.0 - u;
  return 0.5 * gamma_y_ * v * v;
}

double TransformedIntegrand::smooth_part(double u, const PowerSeriesKernel& kernel) const {
  return scale_ * (1.0 + u) * kernel.evaluate(kernel_argument(u));
}

double TransformedIntegrand::operator()(double u, const PowerSeriesKernel& kernel) const {
  return std::pow(u, left_exponent_) * std::pow(1.0 - u, right_exponent_) *
         smooth_part(u, kernel);
}

TransformedIntegrand transform_integrand(const IntegralSpec& spec) {
  return TransformedIntegrand(spec);
}

QuadResult quad_lhs(const IntegralSpec& spec, const PowerSeriesKernel& kernel, double tol,
                    std::size_t max_panels) {
  const TransformedIntegrand integrand(spec);
  constexpr double cut = kEndpointCut;

  QuadResult body = integrate_adaptive([&](double u) { return integrand(u, kernel); }, cut,
                                       1.0 - cut, tol, max_panels);

  // Near u = 0 the integrand is s(u) u^p (1-u)^q with s smooth, so the
  // discarded piece is s(0) cut^(p+1)/(p+1) up to O(cut) relative.
  const double p = integrand.left_exponent();
  const double q = integrand.right_exponent();
  const double s0 = integrand.smooth_part(0.0, kernel);
  const double s_cut = integrand.smooth_part(cut, kernel) * std::pow(1.0 - cut, q);
  const double left_mass = std::pow(cut, p + 1.0) / (p + 1.0);
  const double left_tail = s0 * left_mass;
  const double left_err = std::fabs(s_cut - s0) * left_mass;

  const double s1 = integrand.smooth_part(1.0, kernel);
  const double s_1cut = integrand.smooth_part(1.0 - cut, kernel) * std::pow(1.0 - cut, p);
  const double right_mass = std::pow(cut, q + 1.0) / (q + 1.0);
  const double right_tail = s1 * right_mass;
  const double right_err = std::fabs(s_1cut - s1) * right_mass;

  body.value += left_tail + right_tail;
  body.abs_err_estimate += left_err + right_err;
  body.n_evals += 4;
  return body;
}

SeriesValue proof_series(const IntegralSpec& spec, const PowerSeriesKernel& kernel, double tol) {
  spec.validate();
  check_tolerance(tol);
  const double gy = spec.gamma_y();
  const bool linear = spec.arg_form == ArgForm::LinearInX;
  if (linear && std::fabs(gy) / 2.0 >= kLinearArgGuard) {
    throw DomainError("term-wise series for the x-linear argument requires |gamma y|/2 < 0.9, got " +
                      fmt(std::fabs(gy) / 2.0));
  }
  if (gy == 0.0) {
    const double value =
        kernel.offset == 0 ? kernel.coeff(0) * oberhettinger_closed(spec.mu, spec.lambda, spec.a)
                           : 0.0;
    return {value, 1, 0.0, true};
  }

  const double log_abs_gy = std::log(std::fabs(gy));
  SeriesAccumulator acc(tol, kProofSeriesTermCap);
  for (std::size_t n = 0; n < kProofSeriesTermCap; ++n) {
    const double c = kernel.coeff(n);
    double term = 0.0;
    if (c != 0.0) {
      const double m = static_cast<double>(n + kernel.offset);
      const double mu_n = linear ? spec.mu + m : spec.mu;
      const double log_abs = std::log(std::fabs(c)) + m * log_abs_gy +
                             log_oberhettinger_closed(mu_n, spec.lambda + m, spec.a);
      const bool negative = (c < 0.0) != (gy < 0.0 && (n + kernel.offset) % 2 == 1);
      term = negative ? -std::exp(log_abs) : std::exp(log_abs);
    }
    if (acc.add(term)) break;
  }
  return acc.result();
}

}  // namespace bsk
