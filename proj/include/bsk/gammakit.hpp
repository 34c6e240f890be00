#pragma once

#include <cstdint>

namespace bsk {

// Largest argument for which gamma() is representable as a double.
inline constexpr double kGammaOverflowThreshold = 171.62437695630272;

// Finite gamma-function argument.
class GammaArg {
 public:
  explicit GammaArg(double x);
  double value() const noexcept { return x_; }

 private:
  double x_;
};

// ln|Gamma(x)| together with the sign of Gamma(x).
struct SignedLogGamma {
  double log_abs;
  int sign;  // +1 or -1
};

/// ln Gamma(x) for x > 0. Throws DomainError for x <= 0.
double log_gamma(double x);

/// ln|Gamma(x)| and sign for any non-pole x (reflection below 1/2).
/// Throws PoleError at x in {0, -1, -2, ...}.
SignedLogGamma signed_log_gamma(double x);

/// Gamma(x). Throws PoleError at nonpositive integers and OverflowError for
/// x > kGammaOverflowThreshold.
double gamma(double x);

/// 1/Gamma(x), total: exactly 0 at the poles of Gamma.
double reciprocal_gamma(double x) noexcept;

/// Rising factorial (lam)_n by the product form.
double pochhammer(double lam, std::uint32_t n) noexcept;

/// (lam)_n as Gamma(lam+n)/Gamma(lam), evaluated in log space. Falls back to
/// the product form when lam or lam+n is a pole.
double pochhammer_ratio(double lam, std::uint32_t n);

bool is_nonpositive_integer(double x) noexcept;

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x) noexcept;

}  // namespace bsk
