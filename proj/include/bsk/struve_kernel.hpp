#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "bsk/series.hpp"

namespace bsk {

// Order of the Bessel-Struve kernel S_alpha; requires alpha > -1.
class KernelParams {
 public:
  explicit KernelParams(double alpha);
  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

// Power-series coefficient of S_alpha:
//   c_n = Gamma(alpha+1) Gamma((n+1)/2) / (sqrt(pi) n! Gamma(n/2 + alpha + 1)).
// c_0 is exactly 1.
double kernel_coeff(const KernelParams& params, std::size_t n);

// S_alpha(z) = sum c_n z^n.
SeriesValue kernel_eval(const KernelParams& params, double z, double tol);

// Modified Bessel function I_0 or I_1 by its power series.
SeriesValue bessel_i(int order, double z, double tol);

// Modified Struve function L_0 or L_1 by its power series.
SeriesValue struve_l(int order, double z, double tol);

// An entire integrand factor f(w) = sum_n coeff(n) w^(n + offset).
//
// `closed_form`, when set, evaluates f by a route other than the coefficient
// sum (exp, expm1, the I/L series); quadrature uses it so the two oracles do
// not share a code path.
struct PowerSeriesKernel {
  std::function<double(std::size_t)> coeff;
  unsigned offset = 0;
  std::string label;
  std::function<double(double)> closed_form;

  // f(w), via closed_form when available.
  double evaluate(double w) const;
  // f(w) by summing the coefficients with the shared truncation rule.
  SeriesValue sum_series(double w, double tol) const;
};

struct KernelChoice {
  enum class Kind {
    SAlpha,            // S_alpha(w)
    Exp,               // e^w = S_{-1/2}(w)
    ExpMinusOneOverW,  // (e^w - 1)/w = S_{1/2}(w)
    ExpShifted,        // e^(w - 1)
    I0plusL0,          // I_0(w) + L_0(w) = S_0(w)
    TwoI1plusL1,       // 2 I_1(w) + L_1(w); w S_1(w) is 2 I_1 + 2 L_1
    Unit,              // f = 1
  };
  Kind kind = Kind::SAlpha;
  double alpha = 0.0;  // used by SAlpha only
};

PowerSeriesKernel as_power_series(const KernelChoice& which);

}  // namespace bsk
