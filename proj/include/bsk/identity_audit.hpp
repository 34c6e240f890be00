#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bsk/quad_oracle.hpp"
#include "bsk/series.hpp"
#include "bsk/struve_kernel.hpp"
#include "bsk/wright.hpp"

namespace bsk {

// One parameter point of an audited identity.
struct AuditParams {
  double alpha = 0.0;
  double mu = 1.0;
  double lambda = 2.0;
  double a = 1.0;
  double gamma = 1.0;
  double y = 0.0;
};

// How the printed right-hand side forms its series argument. Identities
// printed with a bare y read it as the product gamma*y, so gamma = 1
// reproduces them literally.
enum class ArgumentRule { GammaYOverA, GammaY, YOverA };

// A printed closed form: prefactor times a Wright (or pFq) series.
struct StatedForm {
  enum class Kind { Wright, Hypergeometric };
  Kind kind = Kind::Wright;
  std::function<double(const AuditParams&)> prefactor;
  std::function<WrightSpec(const AuditParams&)> wright;
  std::function<std::pair<std::vector<double>, std::vector<double>>(const AuditParams&)> pfq;
  ArgumentRule argument = ArgumentRule::GammaYOverA;
};

struct IdentityDef {
  std::string id;
  std::string description;
  // Kernel of the left-hand side, possibly depending on alpha.
  std::function<KernelChoice(const AuditParams&)> kernel;
  ArgForm arg_form = ArgForm::FixedNumerator;
  StatedForm stated;
  // False when the identity is pinned to one kernel order; alpha is then
  // forced to fixed_alpha in every record.
  bool uses_alpha = false;
  double fixed_alpha = 0.0;
};

enum class Verdict { Verified, Refuted, Inconclusive };

std::string_view to_string(Verdict v) noexcept;

inline constexpr double kVerifyThreshold = 1e-6;
inline constexpr double kRefuteThreshold = 1e-3;
inline constexpr double kOracleQuality = 1e-8;

// Tolerances used for the three evaluations of an audit point.
inline constexpr double kAuditQuadTol = 1e-12;
inline constexpr double kAuditSeriesTol = 1e-14;
// Conditioning floor on lambda - mu for audited points.
inline constexpr double kMinLambdaGap = 0.05;

struct AuditRecord {
  std::string identity_id;
  AuditParams params;
  QuadResult lhs;  // value is NaN when lhs_error is set
  std::optional<std::string> lhs_error;
  std::optional<double> rhs_stated;
  std::optional<std::string> rhs_stated_error;
  std::optional<double> rhs_derived;
  std::optional<std::string> rhs_derived_error;
  std::optional<double> rel_err_stated;
  std::optional<double> rel_err_derived;
  Verdict verdict = Verdict::Inconclusive;
};

// The seven printed identities: T1, T2, C1, C2, C3, T3, T4.
const std::vector<IdentityDef>& catalog();

// Alternative readings of ambiguous printed integrands, audited with the same
// stated forms: C3-S12 (kernel (e^w-1)/w instead of e^(w-1)) and T4-S1
// (kernel S_1(w) without the factor w).
const std::vector<IdentityDef>& interpretation_variants();

// Looks up an id in the catalog or the variants; throws DomainError if unknown.
const IdentityDef& find_identity(std::string_view id);

// Alpha actually used for a record of this identity.
double effective_alpha(const IdentityDef& identity, const AuditParams& params) noexcept;

IntegralSpec integral_spec(const IdentityDef& identity, const AuditParams& params);

// Argument of the stated series per its ArgumentRule.
double stated_argument(const IdentityDef& identity, const AuditParams& params) noexcept;

// Printed right-hand side. Throws whatever the series evaluation throws, and
// NonConvergenceError if the series hits its term cap.
SeriesValue stated_rhs(const IdentityDef& identity, const AuditParams& params,
                       double tol = kAuditSeriesTol);

// Proof-chain right-hand side: term-by-term integration of the kernel series.
SeriesValue derived_rhs(const IdentityDef& identity, const AuditParams& params,
                        double tol = kAuditSeriesTol);

// |value - reference| / |reference|, or the absolute difference when the
// reference is exactly 0.
double relative_difference(double value, double reference) noexcept;

// Evaluates all three sides and assigns a verdict. Evaluation failures are
// recorded in the record; parameter points violating the identity's
// preconditions throw DomainError.
AuditRecord audit_point(std::string_view identity_id, const AuditParams& params);

// Verdict recomputed from the record's numbers; absent rel_err_stated counts
// as an unbounded discrepancy.
Verdict classify(const AuditRecord& record) noexcept;
bool verdict_consistent(const AuditRecord& record) noexcept;
// Two-oracle agreement: rel_err_derived < kVerifyThreshold.
bool oracle_consistent(const AuditRecord& record) noexcept;

// Axis lists of a sweep. lambda is either given absolutely (`lambda`) or as
// offsets above mu (`lambda_offset`); exactly one of the two must be nonempty.
struct AuditGrid {
  std::vector<double> alpha;
  std::vector<double> mu;
  std::vector<double> lambda;
  std::vector<double> lambda_offset;
  std::vector<double> a;
  std::vector<double> gamma;
  std::vector<double> y;

  // Points in lexicographic order of (alpha, mu, lambda, a, gamma, y).
  std::vector<AuditParams> expand() const;
};

AuditGrid default_grid(std::string_view identity_id);

// One record per grid point, in grid order. Points are evaluated on up to
// `threads` workers (0 = hardware concurrency).
std::vector<AuditRecord> audit_sweep(std::string_view identity_id, const AuditGrid& grid,
                                     unsigned threads = 0);

struct SweepSummary {
  std::size_t verified = 0;
  std::size_t refuted = 0;
  std::size_t inconclusive = 0;
  std::size_t oracle_mismatches = 0;
};

SweepSummary summarize(const std::vector<AuditRecord>& records) noexcept;

// The pFq form of C2 against the Wright form of C1 reduced through the
// all-weights-one identity. Returns (C1 stated, C2 stated, relative residual).
struct ResidualReport {
  double wright_form;
  double hypergeometric_form;
  double relative_residual;
};
ResidualReport printed_exponential_residual(const AuditParams& params);

}  // namespace bsk
