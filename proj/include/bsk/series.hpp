#pragma once

#include <cstddef>

namespace bsk {

// Result of a truncated series summation.
struct SeriesValue {
  double value = 0.0;
  std::size_t terms_used = 0;
  double tail_estimate = 0.0;  // absolute
  bool converged = false;
};

inline constexpr std::size_t kDefaultTermCap = 500;

// Compensated running sum with the shared stopping rule: stop once three
// consecutive terms satisfy 10|term| <= tol * max(|sum|, 1e-300) and at least
// ten terms have been added. The tail estimate is 10|last term|.
class SeriesAccumulator {
 public:
  explicit SeriesAccumulator(double tol, std::size_t max_terms = kDefaultTermCap);

  // Adds the next term. `may_stop` is false while terms are not yet in their
  // decaying regime (e.g. still crossing gamma poles). Returns true once the
  // stopping rule has fired.
  bool add(double term, bool may_stop = true);

  bool done() const noexcept { return done_; }
  bool exhausted() const noexcept { return count_ >= max_terms_; }
  std::size_t count() const noexcept { return count_; }
  double sum() const noexcept { return sum_ + compensation_; }

  SeriesValue result() const;

 private:
  double tol_;
  std::size_t max_terms_;
  double sum_ = 0.0;
  double compensation_ = 0.0;
  double last_term_ = 0.0;
  std::size_t count_ = 0;
  std::size_t small_run_ = 0;
  bool done_ = false;
};

// Throws DomainError unless tol is finite and positive.
void check_tolerance(double tol);

}  // namespace bsk
