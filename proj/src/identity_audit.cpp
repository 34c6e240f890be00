#include "bsk/identity_audit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include "bsk/errors.hpp"
#include "bsk/gammakit.hpp"

namespace bsk {
namespace {

using Kind = KernelChoice::Kind;

const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);

// 2^(1-mu) a^(mu-lambda) Gamma(2 mu), common to most printed prefactors.
double base_prefactor(const AuditParams& p) {
  return std::pow(2.0, 1.0 - p.mu) * std::pow(p.a, p.mu - p.lambda) * gamma(2.0 * p.mu);
}

KernelChoice fixed_kernel(Kind kind) { return {kind, 0.0}; }

std::vector<IdentityDef> build_catalog() {
  std::vector<IdentityDef> defs;

  // T1: S_alpha(gamma y / t).
  defs.push_back(
      {"T1", "S_alpha kernel, argument gamma*y/t, printed 3Psi2",
       [](const AuditParams& p) { return KernelChoice{Kind::SAlpha, p.alpha}; },
       ArgForm::FixedNumerator,
       {StatedForm::Kind::Wright,
        [](const AuditParams& p) { return base_prefactor(p) * gamma(p.alpha + 1.0) * kInvSqrtPi; },
        [](const AuditParams& p) {
          return WrightSpec{{{0.5, 0.5}, {p.lambda + 1.0, 1.0}, {p.lambda - p.mu, 1.0}},
                            {{p.lambda, 1.0}, {1.0 + p.lambda + p.mu, 1.0}}};
        },
        {}, ArgumentRule::GammaYOverA},
       true, 0.0});

  // T2: S_alpha(gamma x y / t). The printed series carries no argument inside
  // the bracket; gamma*y written after it is taken as the argument.
  defs.push_back(
      {"T2", "S_alpha kernel, argument gamma*x*y/t, printed 3Psi2",
       [](const AuditParams& p) { return KernelChoice{Kind::SAlpha, p.alpha}; },
       ArgForm::LinearInX,
       {StatedForm::Kind::Wright,
        [](const AuditParams& p) {
          return std::pow(2.0, 1.0 + p.mu) * std::pow(p.a, p.mu - p.lambda) *
                 gamma(p.alpha + 1.0) * gamma(p.lambda - p.mu) * kInvSqrtPi *
                 reciprocal_gamma(1.0 + p.lambda + p.mu);
        },
        [](const AuditParams& p) {
          return WrightSpec{{{0.5, 0.5}, {2.0 * p.mu, 2.0}, {p.lambda + 1.0, 1.0}},
                            {{p.lambda, 1.0}, {p.alpha + 1.0, 0.5}}};
        },
        {}, ArgumentRule::GammaY},
       true, 0.0});

  // C1: e^(y/t). The last lower pair is printed without a weight; weight 1.
  defs.push_back({"C1", "exponential kernel, printed 2Psi2",
                  [](const AuditParams&) { return fixed_kernel(Kind::Exp); },
                  ArgForm::FixedNumerator,
                  {StatedForm::Kind::Wright, base_prefactor,
                   [](const AuditParams& p) {
                     return WrightSpec{{{p.lambda + 1.0, 1.0}, {p.lambda - p.mu, 1.0}},
                                       {{p.lambda, 1.0}, {1.0 + p.lambda - p.mu, 1.0}}};
                   },
                   {}, ArgumentRule::YOverA},
                  false, -0.5});

  // C2: e^(y/t), printed 2F2 with explicit gamma prefactor.
  defs.push_back(
      {"C2", "exponential kernel, printed 2F2",
       [](const AuditParams&) { return fixed_kernel(Kind::Exp); }, ArgForm::FixedNumerator,
       {StatedForm::Kind::Hypergeometric,
        [](const AuditParams& p) {
          return base_prefactor(p) * gamma(p.lambda + 1.0) * gamma(p.lambda - p.mu) *
                 reciprocal_gamma(p.lambda) * reciprocal_gamma(1.0 + p.lambda - p.mu);
        },
        {},
        [](const AuditParams& p) {
          return std::pair{std::vector<double>{p.lambda + 1.0, p.lambda - p.mu},
                           std::vector<double>{p.lambda, 1.0 + p.lambda - p.mu}};
        },
        ArgumentRule::YOverA},
       false, -0.5});

  // C3: e^(y/t - 1) as printed.
  const StatedForm c3_stated{
      StatedForm::Kind::Wright,
      [](const AuditParams& p) {
        return std::pow(2.0, -p.mu) * std::pow(p.a, p.mu - p.lambda) * gamma(2.0 * p.mu);
      },
      [](const AuditParams& p) {
        return WrightSpec{{{0.5, 0.5}, {p.lambda + 1.0, 1.0}, {p.lambda - p.mu, 1.0}},
                          {{0.5, 1.5}, {p.lambda, 1.0}, {1.0 + p.lambda + p.mu, 1.0}}};
      },
      {},
      ArgumentRule::YOverA};
  defs.push_back({"C3", "kernel e^(w-1) as printed, printed 3Psi3",
                  [](const AuditParams&) { return fixed_kernel(Kind::ExpShifted); },
                  ArgForm::FixedNumerator, c3_stated, false, 0.5});

  // T3: I_0 + L_0.
  defs.push_back({"T3", "I0+L0 kernel, printed 3Psi3",
                  [](const AuditParams&) { return fixed_kernel(Kind::I0plusL0); },
                  ArgForm::FixedNumerator,
                  {StatedForm::Kind::Wright,
                   [](const AuditParams& p) { return base_prefactor(p) * kInvSqrtPi; },
                   [](const AuditParams& p) {
                     return WrightSpec{
                         {{0.5, 0.5}, {p.lambda + 1.0, 1.0}, {p.lambda - p.mu, 1.0}},
                         {{1.0, 0.5}, {p.lambda, 1.0}, {1.0 + p.lambda + p.mu, 1.0}}};
                   },
                   {}, ArgumentRule::YOverA},
                  false, 0.0});

  // T4: 2 I_1 + L_1.
  const StatedForm t4_stated{StatedForm::Kind::Wright,
                             [](const AuditParams& p) { return base_prefactor(p) * kInvSqrtPi; },
                             [](const AuditParams& p) {
                               return WrightSpec{{{0.5, 0.5}, {p.lambda - p.mu, 1.0}},
                                                 {{2.0, 0.5}, {1.0 + p.lambda + p.mu, 1.0}}};
                             },
                             {},
                             ArgumentRule::YOverA};
  defs.push_back({"T4", "2I1+L1 kernel, printed 2Psi2",
                  [](const AuditParams&) { return fixed_kernel(Kind::TwoI1plusL1); },
                  ArgForm::FixedNumerator, t4_stated, false, 1.0});
  return defs;
}

std::vector<IdentityDef> build_variants() {
  const auto& base = catalog();
  auto by_id = [&base](std::string_view id) {
    return *std::find_if(base.begin(), base.end(),
                         [id](const IdentityDef& d) { return d.id == id; });
  };
  IdentityDef c3 = by_id("C3");
  c3.id = "C3-S12";
  c3.description = "kernel (e^w-1)/w = S_1/2(w), printed 3Psi3 of C3";
  c3.kernel = [](const AuditParams&) { return fixed_kernel(Kind::ExpMinusOneOverW); };

  IdentityDef t4 = by_id("T4");
  t4.id = "T4-S1";
  t4.description = "kernel S_1(w) without the factor w, printed 2Psi2 of T4";
  t4.kernel = [](const AuditParams&) { return KernelChoice{Kind::SAlpha, 1.0}; };
  return {c3, t4};
}

AuditParams normalized(const IdentityDef& identity, AuditParams params) {
  params.alpha = effective_alpha(identity, params);
  return params;
}

void check_audit_preconditions(const IdentityDef& identity, const AuditParams& p) {
  const IntegralSpec spec = integral_spec(identity, p);
  spec.validate();
  if (p.lambda - p.mu < kMinLambdaGap) {
    throw DomainError("audit points require lambda - mu >= 0.05, got " +
                      std::to_string(p.lambda - p.mu));
  }
  if (identity.arg_form == ArgForm::LinearInX && std::fabs(spec.gamma_y()) / 2.0 > 0.9) {
    throw DomainError("x-linear identities require |gamma y|/2 <= 0.9, got " +
                      std::to_string(std::fabs(spec.gamma_y()) / 2.0));
  }
  // Constructs the kernel, which validates alpha > -1.
  (void)as_power_series(identity.kernel(p));
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Verified:
      return "VERIFIED";
    case Verdict::Refuted:
      return "REFUTED";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

const std::vector<IdentityDef>& catalog() {
  static const std::vector<IdentityDef> defs = build_catalog();
  return defs;
}

const std::vector<IdentityDef>& interpretation_variants() {
  static const std::vector<IdentityDef> defs = build_variants();
  return defs;
}

const IdentityDef& find_identity(std::string_view id) {
  for (const auto* list : {&catalog(), &interpretation_variants()}) {
    for (const auto& def : *list) {
      if (def.id == id) return def;
    }
  }
  throw DomainError("unknown identity id '" + std::string(id) +
                    "' (expected T1, T2, C1, C2, C3, T3, T4, C3-S12 or T4-S1)");
}

double effective_alpha(const IdentityDef& identity, const AuditParams& params) noexcept {
  return identity.uses_alpha ? params.alpha : identity.fixed_alpha;
}

IntegralSpec integral_spec(const IdentityDef& identity, const AuditParams& params) {
  return {params.mu, params.lambda, params.a, params.gamma, params.y, identity.arg_form};
}

double stated_argument(const IdentityDef& identity, const AuditParams& p) noexcept {
  switch (identity.stated.argument) {
    case ArgumentRule::GammaY:
      return p.gamma * p.y;
    case ArgumentRule::GammaYOverA:
    case ArgumentRule::YOverA:
      return p.gamma * p.y / p.a;
  }
  return p.gamma * p.y / p.a;
}

SeriesValue stated_rhs(const IdentityDef& identity, const AuditParams& params, double tol) {
  const AuditParams p = normalized(identity, params);
  const double z = stated_argument(identity, p);
  SeriesValue series;
  if (identity.stated.kind == StatedForm::Kind::Wright) {
    series = wright_eval(identity.stated.wright(p), z, tol);
  } else {
    const auto [upper, lower] = identity.stated.pfq(p);
    series = pfq_eval(upper, lower, z, tol);
  }
  if (!series.converged) {
    throw NonConvergenceError("stated series for " + identity.id +
                              " did not converge within the term cap");
  }
  const double prefactor = identity.stated.prefactor(p);
  series.value *= prefactor;
  series.tail_estimate *= std::fabs(prefactor);
  return series;
}

SeriesValue derived_rhs(const IdentityDef& identity, const AuditParams& params, double tol) {
  const AuditParams p = normalized(identity, params);
  const SeriesValue series =
      proof_series(integral_spec(identity, p), as_power_series(identity.kernel(p)), tol);
  if (!series.converged) {
    throw NonConvergenceError("proof-chain series for " + identity.id +
                              " did not converge within the term cap");
  }
  return series;
}

double relative_difference(double value, double reference) noexcept {
  const double diff = std::fabs(value - reference);
  return reference == 0.0 ? diff : diff / std::fabs(reference);
}

Verdict classify(const AuditRecord& r) noexcept {
  if (r.lhs_error || !std::isfinite(r.lhs.value)) return Verdict::Inconclusive;
  const double quality = r.lhs.value == 0.0 ? r.lhs.abs_err_estimate
                                            : r.lhs.abs_err_estimate / std::fabs(r.lhs.value);
  if (!(quality < kOracleQuality)) return Verdict::Inconclusive;
  if (r.rel_err_stated && *r.rel_err_stated < kVerifyThreshold) return Verdict::Verified;
  const double stated = r.rel_err_stated.value_or(std::numeric_limits<double>::infinity());
  if (stated > kRefuteThreshold && r.rel_err_derived && *r.rel_err_derived < kVerifyThreshold) {
    return Verdict::Refuted;
  }
  return Verdict::Inconclusive;
}

bool verdict_consistent(const AuditRecord& record) noexcept {
  return classify(record) == record.verdict;
}

bool oracle_consistent(const AuditRecord& record) noexcept {
  return record.rel_err_derived && *record.rel_err_derived < kVerifyThreshold;
}

AuditRecord audit_point(std::string_view identity_id, const AuditParams& params) {
  const IdentityDef& identity = find_identity(identity_id);
  const AuditParams p = normalized(identity, params);
  check_audit_preconditions(identity, p);

  AuditRecord record;
  record.identity_id = identity.id;
  record.params = p;

  try {
    record.lhs = quad_lhs(integral_spec(identity, p), as_power_series(identity.kernel(p)),
                          kAuditQuadTol);
  } catch (const std::exception& e) {
    record.lhs = {std::numeric_limits<double>::quiet_NaN(), 0.0, 0, 0};
    record.lhs_error = e.what();
  }
  try {
    record.rhs_stated = stated_rhs(identity, p).value;
  } catch (const std::exception& e) {
    record.rhs_stated_error = e.what();
  }
  try {
    record.rhs_derived = derived_rhs(identity, p).value;
  } catch (const std::exception& e) {
    record.rhs_derived_error = e.what();
  }
  if (!record.lhs_error) {
    if (record.rhs_stated) {
      record.rel_err_stated = relative_difference(*record.rhs_stated, record.lhs.value);
    }
    if (record.rhs_derived) {
      record.rel_err_derived = relative_difference(*record.rhs_derived, record.lhs.value);
    }
  }
  record.verdict = classify(record);
  return record;
}

std::vector<AuditParams> AuditGrid::expand() const {
  if (lambda.empty() == lambda_offset.empty()) {
    throw DomainError("grid needs exactly one of 'lambda' or 'lambda_offset'");
  }
  for (const auto* axis : {&alpha, &mu, &a, &gamma, &y}) {
    if (axis->empty()) throw DomainError("grid axes must be nonempty");
  }
  std::vector<AuditParams> points;
  const auto& lambda_axis = lambda.empty() ? lambda_offset : lambda;
  for (double al : alpha) {
    for (double m : mu) {
      for (double l : lambda_axis) {
        for (double sc : a) {
          for (double g : gamma) {
            for (double yy : y) {
              points.push_back({al, m, lambda.empty() ? m + l : l, sc, g, yy});
            }
          }
        }
      }
    }
  }
  return points;
}

AuditGrid default_grid(std::string_view identity_id) {
  const IdentityDef& identity = find_identity(identity_id);
  if (identity.id == "T1") {
    return {{-0.5, 0.0, 0.5, 1.0, 1.7}, {0.6, 1.0, 1.4}, {}, {0.7, 1.8}, {1.0, 2.0}, {1.0},
            {0.2, 0.8}};
  }
  if (identity.id == "T2") {
    return {{-0.5, 0.0, 1.0}, {0.6, 1.0, 1.4}, {}, {0.7, 1.8}, {1.0}, {1.0}, {0.8, 1.6}};
  }
  // Fixed-order identities; y = 0 is the degenerate anchor where every form
  // reduces to the base integral.
  return {{identity.fixed_alpha}, {0.6, 1.0, 1.4}, {}, {0.7, 1.8}, {1.0, 2.0}, {1.0},
          {0.0, 0.2, 0.8}};
}

std::vector<AuditRecord> audit_sweep(std::string_view identity_id, const AuditGrid& grid,
                                     unsigned threads) {
  const IdentityDef& identity = find_identity(identity_id);
  const std::vector<AuditParams> points = grid.expand();
  if (points.empty()) throw DomainError("audit grid is empty");
  for (const auto& p : points) check_audit_preconditions(identity, normalized(identity, p));

  std::vector<AuditRecord> records(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      records[i] = audit_point(identity.id, points[i]);
    }
  };
  unsigned n = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  n = static_cast<unsigned>(std::min<std::size_t>(n, points.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return records;
}

SweepSummary summarize(const std::vector<AuditRecord>& records) noexcept {
  SweepSummary s;
  for (const auto& r : records) {
    switch (r.verdict) {
      case Verdict::Verified:
        ++s.verified;
        break;
      case Verdict::Refuted:
        ++s.refuted;
        break;
      case Verdict::Inconclusive:
        ++s.inconclusive;
        break;
    }
    if (!oracle_consistent(r)) ++s.oracle_mismatches;
  }
  return s;
}

ResidualReport printed_exponential_residual(const AuditParams& params) {
  const double c1 = stated_rhs(find_identity("C1"), params).value;
  const double c2 = stated_rhs(find_identity("C2"), params).value;
  return {c1, c2, relative_difference(c2, c1)};
}

}  // namespace bsk
