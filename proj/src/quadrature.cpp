#include "bsk/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "bsk/errors.hpp"
#include "bsk/series.hpp"

namespace bsk {
namespace {

// Kronrod abscissae (descending, last is the centre); odd indices are the
// Gauss 7-point nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  double value;
  double err;
  bool at_floor;
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double absolute = std::fabs(fc) * kWgk[7];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f_lo = f(centre - dx);
    const double f_hi = f(centre + dx);
    kronrod += kWgk[j] * (f_lo + f_hi);
    absolute += kWgk[j] * (std::fabs(f_lo) + std::fabs(f_hi));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f_lo + f_hi);
  }
  kronrod *= half;
  gauss *= half;
  absolute *= half;
  // Below 50 ulps of the panel's absolute mass the rule difference is noise.
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * absolute;
  const double diff = std::fabs(kronrod - gauss);
  return {lo, hi, kronrod, std::max(diff, floor), diff <= floor};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                              double rel_tol, std::size_t max_panels) {
  check_tolerance(rel_tol);
  std::priority_queue<Panel, std::vector<Panel>, ByError> work;
  work.push(gauss_kronrod(f, lo, hi));
  std::size_t evals = 15;
  std::size_t bisections = 0;
  double total = work.top().value;
  double total_err = work.top().err;

  auto exact_totals = [&work]() {
    std::vector<Panel> panels;
    auto copy = work;
    while (!copy.empty()) {
      panels.push_back(copy.top());
      copy.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
    double value = 0.0;
    double err = 0.0;
    for (const auto& p : panels) {
      value += p.value;
      err += p.err;
    }
    return std::pair{value, err};
  };

  while (true) {
    if (total_err <= rel_tol * std::fabs(total)) {
      // The running totals drift; confirm with a fresh ordered sum.
      std::tie(total, total_err) = exact_totals();
      if (total_err <= rel_tol * std::fabs(total)) break;
    }
    if (work.size() >= max_panels) {
      throw NonConvergenceError("adaptive quadrature exhausted its budget of " +
                                std::to_string(max_panels) + " panels; error estimate " +
                                std::to_string(total_err) + " vs target " +
                                std::to_string(rel_tol * std::fabs(total)));
    }
    const Panel worst = work.top();
    // Every remaining panel is at roundoff level; report what was reached.
    if (worst.at_floor) {
      std::tie(total, total_err) = exact_totals();
      break;
    }
    work.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel left = gauss_kronrod(f, worst.lo, mid);
    const Panel right = gauss_kronrod(f, mid, worst.hi);
    evals += 30;
    ++bisections;
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    work.push(left);
    work.push(right);
  }
  return {total, total_err, evals, bisections};
}

}  // namespace bsk
