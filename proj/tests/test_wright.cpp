#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "bsk/errors.hpp"
#include "bsk/gammakit.hpp"
#include "bsk/wright.hpp"
#include "oracles.hpp"

using namespace bsk;
using oracle::rel_err;

namespace {

WrightSpec exponential_order_form(double lambda, double mu) {
  return {{{0.5, 0.5}, {lambda + 1.0, 1.0}, {lambda - mu, 1.0}},
          {{1.0, 0.5}, {lambda, 1.0}, {1.0 + lambda + mu, 1.0}}};
}

}  // namespace

TEST_CASE("delta and radius") {
  const WrightSpec exp_spec{{{1.0, 1.0}}, {{1.0, 1.0}}};
  CHECK(wright_delta(exp_spec) == 0.0);
  CHECK(std::isinf(wright_radius(exp_spec)));

  const WrightSpec geometric{{{1.0, 1.0}, {1.0, 1.0}}, {{1.0, 1.0}}};
  CHECK(wright_delta(geometric) == -1.0);
  CHECK(wright_radius(geometric) == doctest::Approx(1.0));

  const WrightSpec weighted{{{1.0, 2.0}}, {}};
  CHECK(wright_delta(weighted) == -2.0);
  CHECK_THROWS_AS(wright_radius(weighted), DivergenceError);

  // 2^-2 * 1 at delta = -1 with alpha = (2), beta = (1)
  const WrightSpec quarter{{{1.0, 2.0}}, {{1.0, 1.0}}};
  CHECK(wright_radius(quarter) == doctest::Approx(0.25));
}

TEST_CASE("1Psi1 with unit parameters is the exponential") {
  const WrightSpec spec{{{1.0, 1.0}}, {{1.0, 1.0}}};
  const auto one = wright_eval(spec, 1.0, 1e-15);
  CHECK(one.converged);
  CHECK(rel_err(one.value, std::numbers::e) < 1e-14);
  const auto zero = wright_eval(spec, 0.0, 1e-15);
  CHECK(zero.value == 1.0);
  CHECK(zero.terms_used == 1);
  CHECK(rel_err(wright_eval(spec, -4.0, 1e-15).value, std::exp(-4.0)) < 1e-11);
}

TEST_CASE("value at zero is the product of gamma ratios") {
  const WrightSpec spec{{{2.5, 0.7}, {0.3, 1.2}}, {{1.7, 0.4}, {4.0, 2.0}}};
  const double want = bsk::gamma(2.5) * bsk::gamma(0.3) / bsk::gamma(1.7) / bsk::gamma(4.0);
  CHECK(wright_eval(spec, 0.0, 1e-12).value == want);

  const WrightSpec with_pole{{{1.5, 1.0}}, {{-2.0, 1.0}}};
  CHECK(wright_eval(with_pole, 0.0, 1e-12).value == 0.0);
}

TEST_CASE("three-by-three form used by the exponential-kernel identity") {
  const auto got = wright_eval(exponential_order_form(2.0, 1.0), 0.5, 1e-15);
  CHECK(got.converged);
  CHECK(rel_err(got.value, 0.66943279072854368248) < 1e-13);

  const auto brute = oracle::wright_sum({{0.5L, 0.5L}, {3.0L, 1.0L}, {1.0L, 1.0L}},
                                        {{1.0L, 0.5L}, {2.0L, 1.0L}, {4.0L, 1.0L}}, 0.5L);
  CHECK(rel_err(got.value, static_cast<double>(brute)) < 1e-13);
}

TEST_CASE("brute-force agreement on random entire specs") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> shift(0.3, 3.0);
  std::uniform_real_distribution<double> weight(0.2, 1.5);
  std::uniform_real_distribution<double> zdist(-2.0, 2.0);
  for (int trial = 0; trial < 30; ++trial) {
    WrightSpec spec;
    std::vector<std::pair<long double, long double>> up, lo;
    for (int i = 0; i < 2; ++i) {
      spec.upper.push_back({shift(rng), weight(rng)});
      up.emplace_back(spec.upper.back().shift, spec.upper.back().weight);
    }
    for (int j = 0; j < 2; ++j) {
      spec.lower.push_back({shift(rng), weight(rng)});
      lo.emplace_back(spec.lower.back().shift, spec.lower.back().weight);
    }
    if (wright_delta(spec) <= -0.5) continue;
    const double z = zdist(rng);
    const auto got = wright_eval(spec, z, 1e-15);
    REQUIRE(got.converged);
    const double want = static_cast<double>(oracle::wright_sum(up, lo, z, 300));
    CHECK(std::fabs(got.value - want) <= 1e-11 * std::max(std::fabs(want), 1.0));
  }
}

TEST_CASE("terms decay monotonically after the peak in the entire regime") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> shift(0.3, 4.0);
  std::uniform_real_distribution<double> weight(0.3, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double up_weight = weight(rng);
    const WrightSpec spec{{{shift(rng), up_weight}}, {{shift(rng), up_weight + weight(rng)}}};
    REQUIRE(wright_delta(spec) > 0.0);
    const double z = 3.0;
    std::vector<double> mags;
    for (std::size_t k = 0; k < 150; ++k) {
      const double m = std::fabs(wright_term(spec, z, k));
      if (m == 0.0) break;
      mags.push_back(m);
    }
    REQUIRE(mags.size() > 20);
    std::size_t peak = 0;
    for (std::size_t k = 1; k < mags.size(); ++k) {
      if (mags[k] > mags[peak]) peak = k;
    }
    for (std::size_t k = peak + 1; k < mags.size(); ++k) CHECK(mags[k] < mags[k - 1]);
    const std::size_t n = mags.size();
    CHECK(mags[n - 1] / mags[n - 2] < mags[peak + 2] / mags[peak + 1]);
  }
}

TEST_CASE("divergence and pole errors") {
  const WrightSpec steep{{{1.0, 2.0}}, {}};
  CHECK_THROWS_AS(wright_eval(steep, 0.1, 1e-12), DivergenceError);
  CHECK(wright_eval(steep, 0.0, 1e-12).value == 1.0);

  const WrightSpec boundary{{{1.0, 1.0}, {1.0, 1.0}}, {{1.0, 1.0}}};
  CHECK(rel_err(wright_eval(boundary, 0.5, 1e-15).value, 2.0) < 1e-13);
  CHECK_THROWS_AS(wright_eval(boundary, 0.95, 1e-12), DivergenceError);

  const WrightSpec numerator_pole{{{-1.0, 1.0}}, {{1.0, 1.0}}};
  CHECK_THROWS_AS(wright_eval(numerator_pole, 0.5, 1e-12), PoleError);

  // Gamma(-1.5 + k) passes no pole for integer k; the sum is Gamma(-1.5) (1-z)^1.5.
  const WrightSpec negative_shift{{{-1.5, 1.0}}, {}};
  const double want = bsk::gamma(-1.5) * std::pow(1.0 - 0.3, 1.5);
  CHECK(rel_err(wright_eval(negative_shift, 0.3, 1e-15).value, want) < 1e-12);

  // Gamma(-0.5 + 0.5k) hits a pole at k = 1.
  const WrightSpec later_pole{{{-0.5, 0.5}}, {{1.0, 1.0}}};
  try {
    wright_eval(later_pole, 0.5, 1e-12);
    FAIL("expected a pole error");
  } catch (const PoleError& e) {
    CHECK(std::string(e.what()).find("k = 1") != std::string::npos);
  }

  CHECK_THROWS_AS(wright_eval(boundary, 0.5, 0.0), DomainError);
  CHECK_THROWS_AS(wright_eval(boundary, std::nan(""), 1e-12), DomainError);
}

TEST_CASE("term cap reports non-convergence") {
  const WrightSpec spec{{{1.0, 1.0}}, {{1.0, 1.0}}};
  const auto capped = wright_eval(spec, 50.0, 1e-15, 20);
  CHECK_FALSE(capped.converged);
  CHECK(capped.terms_used == 20);
}

TEST_CASE("pfq closed forms") {
  const std::vector<double> none;
  for (double z : {-0.7, -0.3, 0.0, 0.2, 0.7}) {
    CHECK(rel_err(pfq_eval(none, none, z, 1e-15).value, std::exp(z)) < 1e-11);
    for (double a : {0.5, 1.0, 2.3}) {
      const std::vector<double> up{a};
      CHECK(rel_err(pfq_eval(up, none, z, 1e-15).value, std::pow(1.0 - z, -a)) < 1e-11);
    }
  }
  CHECK(rel_err(pfq_eval(none, none, 1.0, 1e-15).value, std::numbers::e) < 1e-14);
  const std::vector<double> one{1.0};
  CHECK(rel_err(pfq_eval(one, none, 0.5, 1e-15).value, 2.0) < 1e-13);

  const std::vector<double> up{3.0, 1.0};
  const std::vector<double> lo{2.0, 2.0};
  CHECK(rel_err(pfq_eval(up, lo, 0.5, 1e-15).value, 1.4730819060501922203) < 1e-13);
}

TEST_CASE("pfq errors") {
  const std::vector<double> one{1.0};
  const std::vector<double> two{1.0, 2.0};
  const std::vector<double> none;
  CHECK_THROWS_AS(pfq_eval(two, none, 0.1, 1e-12), DivergenceError);
  CHECK(pfq_eval(two, none, 0.0, 1e-12).value == 1.0);
  CHECK_THROWS_AS(pfq_eval(one, none, 1.0, 1e-12), DivergenceError);
  CHECK_THROWS_AS(pfq_eval(one, none, -1.2, 1e-12), DivergenceError);
  const std::vector<double> pole{-3.0};
  CHECK_THROWS_AS(pfq_eval(one, pole, 0.1, 1e-12), PoleError);
  // A terminating series: (-2)_n vanishes from n = 3.
  const std::vector<double> poly{-2.0};
  CHECK(rel_err(pfq_eval(poly, none, 0.25, 1e-15).value, std::pow(0.75, 2.0)) < 1e-15);
}

TEST_CASE("reduction identity on fixed examples") {
  {
    const std::vector<double> up{1.0}, lo{1.0};
    const auto [w, f] = wright_reduce_check(up, lo, 1.0);
    CHECK(rel_err(w, std::numbers::e) < 1e-14);
    CHECK(rel_err(f, std::numbers::e) < 1e-14);
  }
  {
    const std::vector<double> up{2.0, 3.0}, lo{4.0};
    const auto [w, f] = wright_reduce_check(up, lo, 0.3);
    CHECK(rel_err(w, f) < 1e-12);
  }
  {
    const std::vector<double> up{0.5}, lo{1.5};
    const auto [w, f] = wright_reduce_check(up, lo, -1.0);
    CHECK(rel_err(w, f) < 1e-12);
  }
}

TEST_CASE("reduction identity on a seeded random grid") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> param(0.3, 4.0);
  std::uniform_real_distribution<double> zdist(-1.0, 1.0);
  std::uniform_int_distribution<int> count(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const int q = count(rng);
    const int p = std::uniform_int_distribution<int>(0, q)(rng);
    std::vector<double> up(p), lo(q);
    for (auto& v : up) v = param(rng);
    for (auto& v : lo) v = param(rng);
    const double z = zdist(rng);
    const auto [w, f] = wright_reduce_check(up, lo, z);
    CHECK(rel_err(w, f) < 1e-10);
  }
}
