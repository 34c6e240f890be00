#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bsk/report.hpp"

namespace bsk {

enum class Command { EvalKernel, EvalWright, EvalPfq, Oberhettinger, Quad, Audit, Sweep };

Command parse_command(std::string_view name);
std::string_view to_string(Command command) noexcept;

inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kMinTol = 1e-14;
inline constexpr double kMaxTol = 1e-2;

// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitNonConvergence = 3;

// One CLI invocation. params holds named numbers, lists, or strings; the keys
// accepted depend on the command.
struct RunConfig {
  Command command = Command::EvalKernel;
  nlohmann::json params = nlohmann::json::object();
  double tol = kDefaultTol;
  OutputFormat output_format = OutputFormat::Text;
  std::optional<std::filesystem::path> output_path;
};

// Builds a RunConfig from {command, params, tol, output_format, output_path};
// unknown keys are rejected with DomainError.
RunConfig config_from_json(const nlohmann::json& j);

// Throws DomainError for out-of-range tol, unknown or missing params.
void validate(const RunConfig& config);

// "1.5,2,-3" -> [1.5, 2, -3]
nlohmann::json parse_number_list(std::string_view text);
// "1:1,0.5:0.5" -> [[1, 1], [0.5, 0.5]]
nlohmann::json parse_pair_list(std::string_view text);

// Executes the command. The report goes to output_path when set, otherwise to
// `out`; diagnostics go to `err`. Returns 0, 2 (domain or precondition
// error) or 3 (non-convergence).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace bsk
