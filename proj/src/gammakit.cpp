#include "bsk/gammakit.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "bsk/errors.hpp"

namespace bsk {
namespace {

// Lanczos approximation with Godfrey's 14-term coefficient set, g = 671/128:
//   Gamma(x) = sqrt(2 pi) S(x) / x * (x + g)^(x + 1/2) e^-(x + g),
//   S(x) = c_0 + sum_j c_j / (x + j).
constexpr double kLanczosG = 5.24218750000000000;
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr std::array<double, 14> kLanczosCoeff = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};
constexpr double kSqrtTwoPi = 2.5066282746310005;

// sqrt(2 pi) S(x) / x
double lanczos_factor(double x) {
  double sum = kLanczosC0;
  double denom = x;
  for (double c : kLanczosCoeff) {
    denom += 1.0;
    sum += c / denom;
  }
  return kSqrtTwoPi * sum / x;
}

bool is_integer(double x) { return std::floor(x) == x; }

// Exact (up to rounding) factorial for small integer arguments.
double integer_gamma(double x) {
  double result = 1.0;
  for (double k = 2.0; k < x; k += 1.0) result *= k;
  return result;
}

double gamma_positive(double x) {
  if (is_integer(x) && x <= 171.0) return integer_gamma(x);
  const double t = x + kLanczosG;
  // Split the power so t^(x + 1/2) does not overflow before e^-t is applied.
  const double half_power = std::pow(t, 0.5 * (x + 0.5));
  return half_power * (half_power * std::exp(-t) * lanczos_factor(x));
}

double log_gamma_positive(double x) {
  if (x == 1.0 || x == 2.0) return 0.0;
  const double t = x + kLanczosG;
  return (x + 0.5) * std::log(t) - t + std::log(lanczos_factor(x));
}

[[noreturn]] void throw_pole(double x) {
  throw PoleError("gamma pole at x = " + std::to_string(x) +
                  " (nonpositive integer)");
}

}  // namespace

GammaArg::GammaArg(double x) : x_(x) {
  if (!std::isfinite(x)) throw DomainError("gamma argument must be finite");
}

bool is_nonpositive_integer(double x) noexcept { return x <= 0.0 && is_integer(x); }

double sin_pi(double x) noexcept {
  double r = std::remainder(x, 2.0);  // r in [-1, 1]
  if (r == 0.0 || std::fabs(r) == 1.0) return 0.0;
  if (std::fabs(r) > 0.5) r = std::copysign(1.0 - std::fabs(r), r);
  return std::sin(std::numbers::pi * r);
}

double log_gamma(double x) {
  const GammaArg arg(x);
  if (arg.value() <= 0.0) {
    throw DomainError("log_gamma requires x > 0, got " + std::to_string(x));
  }
  if (arg.value() < 0.5) {
    // Reflection keeps the Lanczos sum in its accurate range.
    return std::log(std::numbers::pi / sin_pi(x)) - log_gamma_positive(1.0 - x);
  }
  return log_gamma_positive(arg.value());
}

SignedLogGamma signed_log_gamma(double x) {
  const GammaArg arg(x);
  if (is_nonpositive_integer(arg.value())) throw_pole(x);
  if (x >= 0.5) return {log_gamma_positive(x), 1};
  const double s = sin_pi(x);
  return {std::log(std::numbers::pi) - std::log(std::fabs(s)) - log_gamma_positive(1.0 - x),
          s > 0.0 ? 1 : -1};
}

double gamma(double x) {
  const GammaArg arg(x);
  if (is_nonpositive_integer(x)) throw_pole(x);
  if (x > kGammaOverflowThreshold) {
    throw OverflowError("gamma overflows for x > " + std::to_string(kGammaOverflowThreshold) +
                        ", got " + std::to_string(x));
  }
  if (x >= 0.5) return gamma_positive(x);
  if (1.0 - x > kGammaOverflowThreshold) {
    const auto slg = signed_log_gamma(x);
    return slg.sign * std::exp(slg.log_abs);
  }
  return std::numbers::pi / (sin_pi(x) * gamma_positive(1.0 - x));
}

double reciprocal_gamma(double x) noexcept {
  if (std::isnan(x)) return x;
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > kGammaOverflowThreshold) return std::exp(-log_gamma_positive(x));
  if (x >= 0.5) return 1.0 / gamma_positive(x);
  if (1.0 - x > kGammaOverflowThreshold) {
    const double s = sin_pi(x);
    return std::copysign(std::exp(log_gamma_positive(1.0 - x) - std::log(std::numbers::pi) +
                                  std::log(std::fabs(s))),
                         s);
  }
  return sin_pi(x) * gamma_positive(1.0 - x) / std::numbers::pi;
}

double pochhammer(double lam, std::uint32_t n) noexcept {
  double result = 1.0;
  for (std::uint32_t k = 0; k < n; ++k) result *= lam + static_cast<double>(k);
  return result;
}

double pochhammer_ratio(double lam, std::uint32_t n) {
  const double top = lam + static_cast<double>(n);
  if (n == 0) return 1.0;
  if (is_nonpositive_integer(lam) || is_nonpositive_integer(top)) return pochhammer(lam, n);
  const auto num = signed_log_gamma(top);
  const auto den = signed_log_gamma(lam);
  return num.sign * den.sign * std::exp(num.log_abs - den.log_abs);
}

}  // namespace bsk
