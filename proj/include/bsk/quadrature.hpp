#pragma once

#include <cstddef>
#include <functional>

namespace bsk {

struct QuadResult {
  double value = 0.0;
  double abs_err_estimate = 0.0;
  std::size_t n_evals = 0;
  std::size_t subdivisions = 0;
};

inline constexpr std::size_t kDefaultPanelBudget = 2000;

// Globally adaptive 7/15-point Gauss-Kronrod quadrature on [lo, hi]. The panel
// with the largest |K15 - G7| is bisected until the summed estimate is at most
// rel_tol * |integral|, or until the worst panel is already at its roundoff
// floor (the returned estimate then exceeds the target). Throws
// NonConvergenceError when the panel budget runs out.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                              double rel_tol, std::size_t max_panels = kDefaultPanelBudget);

}  // namespace bsk
