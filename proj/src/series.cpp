#include "bsk/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bsk/errors.hpp"

namespace bsk {

namespace {
constexpr std::size_t kMinTerms = 10;
constexpr std::size_t kSmallRun = 3;
constexpr double kTailFactor = 10.0;
constexpr double kTinySum = 1e-300;
}  // namespace

SeriesAccumulator::SeriesAccumulator(double tol, std::size_t max_terms)
    : tol_(tol), max_terms_(max_terms) {
  check_tolerance(tol);
}

bool SeriesAccumulator::add(double term, bool may_stop) {
  if (done_) return true;
  // Neumaier summation.
  const double t = sum_ + term;
  if (std::fabs(sum_) >= std::fabs(term)) {
    compensation_ += (sum_ - t) + term;
  } else {
    compensation_ += (term - t) + sum_;
  }
  sum_ = t;
  last_term_ = term;
  ++count_;

  const double scale = std::max(std::fabs(sum()), kTinySum);
  if (may_stop && kTailFactor * std::fabs(term) <= tol_ * scale) {
    ++small_run_;
  } else {
    small_run_ = 0;
  }
  done_ = small_run_ >= kSmallRun && count_ > kMinTerms;
  return done_;
}

SeriesValue SeriesAccumulator::result() const {
  return {sum(), count_, kTailFactor * std::fabs(last_term_), done_};
}

void check_tolerance(double tol) {
  if (!std::isfinite(tol) || tol <= 0.0) {
    throw DomainError("tolerance must be finite and positive, got " + std::to_string(tol));
  }
}

}  // namespace bsk
