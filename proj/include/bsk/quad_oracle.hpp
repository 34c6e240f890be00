#pragma once

#include "bsk/quadrature.hpp"
#include "bsk/series.hpp"
#include "bsk/struve_kernel.hpp"

namespace bsk {

// Shape of the kernel argument inside
//   int_0^inf x^(mu-1) t(x)^(-lambda) f(arg) dx,   t(x) = x + a + sqrt(x^2 + 2ax).
enum class ArgForm {
  FixedNumerator,  // arg = gamma y / t(x)
  LinearInX,       // arg = gamma x y / t(x)
};

struct IntegralSpec {
  double mu = 1.0;
  double lambda = 2.0;
  double a = 1.0;
  double gamma = 1.0;
  double y = 0.0;
  ArgForm arg_form = ArgForm::FixedNumerator;

  double gamma_y() const noexcept { return gamma * y; }
  // Throws DomainError unless a > 0 and 0 < mu < lambda (all finite).
  void validate() const;
};

// 2 lambda a^(-lambda) (a/2)^mu Gamma(2mu) Gamma(lambda-mu) / Gamma(1+lambda+mu),
// the value of the integral with f = 1. Requires 0 < mu < lambda and a > 0.
double oberhettinger_closed(double mu, double lambda, double a);
double log_oberhettinger_closed(double mu, double lambda, double a);

// The integral after t = x + a + sqrt(x^2 + 2ax), u = a/t:
//   int_0^1 scale * u^(lambda-mu-1) (1-u)^(2mu-1) (1+u) f(arg(u)) du,
//   scale = a^(mu-lambda) 2^(-mu),  x(u) = a (1-u)^2 / (2u),
//   arg(u) = gamma y u / a               (FixedNumerator)
//   arg(u) = gamma y x(u) u / a
//          = gamma y (1-u)^2 / 2         (LinearInX).
class TransformedIntegrand {
 public:
  explicit TransformedIntegrand(const IntegralSpec& spec);

  double scale() const noexcept { return scale_; }
  // Power-law exponent of the integrand as u -> 0.
  double left_exponent() const noexcept { return left_exponent_; }
  // Power-law exponent of the integrand as u -> 1.
  double right_exponent() const noexcept { return right_exponent_; }

  double x_of_u(double u) const noexcept;
  double kernel_argument(double u) const noexcept;
  // Everything except the two endpoint powers.
  double smooth_part(double u, const PowerSeriesKernel& kernel) const;
  double operator()(double u, const PowerSeriesKernel& kernel) const;

 private:
  double a_;
  double gamma_y_;
  ArgForm form_;
  double scale_;
  double left_exponent_;
  double right_exponent_;
};

TransformedIntegrand transform_integrand(const IntegralSpec& spec);

// Distance from each endpoint of (0, 1) handled by the power-law tail terms.
inline constexpr double kEndpointCut = 1e-12;

// Adaptive quadrature of the transformed integral over [cut, 1 - cut] plus
// analytic power-law corrections for the two discarded end intervals.
QuadResult quad_lhs(const IntegralSpec& spec, const PowerSeriesKernel& kernel, double tol,
                    std::size_t max_panels = kDefaultPanelBudget);

inline constexpr std::size_t kProofSeriesTermCap = 400;

// Term-by-term integration of the kernel's power series:
//   sum_n coeff(n) (gamma y)^(n+off) * oberhettinger_closed(mu + s(n+off), lambda + n + off, a)
// with s = 0 (FixedNumerator) or 1 (LinearInX). LinearInX additionally
// requires |gamma y|/2 < 0.9.
SeriesValue proof_series(const IntegralSpec& spec, const PowerSeriesKernel& kernel, double tol);

}  // namespace bsk
