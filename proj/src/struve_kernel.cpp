#include "bsk/struve_kernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bsk/errors.hpp"
#include "bsk/gammakit.hpp"

namespace bsk {
namespace {

// Tolerance used when a kernel is evaluated inside an integrand.
constexpr double kInnerTol = 1e-16;
constexpr double kSeriesSwitch = 1e-4;

void check_order(int order) {
  if (order != 0 && order != 1) {
    throw DomainError("only orders 0 and 1 are supported, got " + std::to_string(order));
  }
}

}  // namespace

KernelParams::KernelParams(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha) || alpha <= -1.0) {
    throw DomainError("Bessel-Struve kernel requires alpha > -1, got " + std::to_string(alpha));
  }
}

double kernel_coeff(const KernelParams& params, std::size_t n) {
  if (n == 0) return 1.0;
  const double nd = static_cast<double>(n);
  const double alpha = params.alpha();
  const double log_c = log_gamma(alpha + 1.0) + log_gamma(0.5 * (nd + 1.0)) -
                       0.5 * std::log(std::numbers::pi) - log_gamma(nd + 1.0) -
                       log_gamma(0.5 * nd + alpha + 1.0);
  return std::exp(log_c);
}

SeriesValue kernel_eval(const KernelParams& params, double z, double tol) {
  if (!std::isfinite(z)) throw DomainError("kernel argument must be finite");
  check_tolerance(tol);
  if (z == 0.0) return {1.0, 1, 0.0, true};
  SeriesAccumulator acc(tol);
  double power = 1.0;
  for (std::size_t n = 0; !acc.exhausted(); ++n) {
    if (acc.add(kernel_coeff(params, n) * power)) break;
    power *= z;
  }
  return acc.result();
}

SeriesValue bessel_i(int order, double z, double tol) {
  check_order(order);
  if (!std::isfinite(z)) throw DomainError("Bessel argument must be finite");
  const double half = 0.5 * z;
  const double q = half * half;
  SeriesAccumulator acc(tol);
  // (z/2)^(2k+v) / (k! (k+v)!)
  double term = order == 0 ? 1.0 : half;
  for (std::size_t k = 0; !acc.exhausted(); ++k) {
    if (acc.add(term)) break;
    const double kd = static_cast<double>(k);
    term *= q / ((kd + 1.0) * (kd + 1.0 + order));
  }
  return acc.result();
}

SeriesValue struve_l(int order, double z, double tol) {
  check_order(order);
  if (!std::isfinite(z)) throw DomainError("Struve argument must be finite");
  const double half = 0.5 * z;
  const double q = half * half;
  SeriesAccumulator acc(tol);
  // (z/2)^(2k+v+1) / (Gamma(k+3/2) Gamma(k+v+3/2))
  double term = std::pow(half, order + 1) * reciprocal_gamma(1.5) * reciprocal_gamma(order + 1.5);
  for (std::size_t k = 0; !acc.exhausted(); ++k) {
    if (acc.add(term)) break;
    const double kd = static_cast<double>(k);
    term *= q / ((kd + 1.5) * (kd + order + 1.5));
  }
  return acc.result();
}

double PowerSeriesKernel::evaluate(double w) const {
  if (closed_form) return closed_form(w);
  return sum_series(w, kInnerTol).value;
}

SeriesValue PowerSeriesKernel::sum_series(double w, double tol) const {
  check_tolerance(tol);
  const double lead = offset == 0 ? 1.0 : std::pow(w, static_cast<double>(offset));
  if (w == 0.0) return {lead * coeff(0), 1, 0.0, true};
  SeriesAccumulator acc(tol);
  double power = lead;
  for (std::size_t n = 0; !acc.exhausted(); ++n) {
    if (acc.add(coeff(n) * power)) break;
    power *= w;
  }
  return acc.result();
}

PowerSeriesKernel as_power_series(const KernelChoice& which) {
  using Kind = KernelChoice::Kind;
  switch (which.kind) {
    case Kind::SAlpha: {
      const KernelParams params(which.alpha);
      return {[params](std::size_t n) { return kernel_coeff(params, n); }, 0,
              "S_alpha(alpha=" + std::to_string(which.alpha) + ")",
              [params](double w) { return kernel_eval(params, w, kInnerTol).value; }};
    }
    case Kind::Exp:
      return {[](std::size_t n) { return std::exp(-log_gamma(n + 1.0)); }, 0, "exp",
              [](double w) { return std::exp(w); }};
    case Kind::ExpMinusOneOverW:
      return {[](std::size_t n) { return std::exp(-log_gamma(n + 2.0)); }, 0, "(exp(w)-1)/w",
              [](double w) {
                if (std::fabs(w) < kSeriesSwitch) {
                  return 1.0 + w / 2.0 * (1.0 + w / 3.0 * (1.0 + w / 4.0));
                }
                return std::expm1(w) / w;
              }};
    case Kind::ExpShifted:
      return {[](std::size_t n) { return std::exp(-1.0 - log_gamma(n + 1.0)); }, 0, "exp(w-1)",
              [](double w) { return std::exp(w - 1.0); }};
    case Kind::I0plusL0: {
      const KernelParams params(0.0);
      return {[params](std::size_t n) { return kernel_coeff(params, n); }, 0, "I0+L0",
              [](double w) {
                return bessel_i(0, w, kInnerTol).value + struve_l(0, w, kInnerTol).value;
              }};
    }
    case Kind::TwoI1plusL1: {
      const KernelParams params(1.0);
      // w S_1(w) = 2 I_1(w) + 2 L_1(w): the odd-index coefficients of S_1 carry
      // twice the Struve part.
      return {[params](std::size_t n) {
                const double c = kernel_coeff(params, n);
                return n % 2 == 1 ? 0.5 * c : c;
              },
              1, "2I1+L1",
              [](double w) {
                return 2.0 * bessel_i(1, w, kInnerTol).value + struve_l(1, w, kInnerTol).value;
              }};
    }
    case Kind::Unit:
      return {[](std::size_t n) { return n == 0 ? 1.0 : 0.0; }, 0, "1",
              [](double) { return 1.0; }};
  }
  throw DomainError("unknown kernel choice");
}

}  // namespace bsk
