#include "bsk/cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <variant>
#include <vector>

#include "bsk/errors.hpp"
#include "bsk/quad_oracle.hpp"
#include "bsk/wright.hpp"

namespace bsk {
namespace {

using json = nlohmann::json;

struct KeySet {
  std::set<std::string> required;
  std::set<std::string> optional;
};

KeySet keys_for(Command command) {
  switch (command) {
    case Command::EvalKernel:
      return {{"alpha", "z"}, {}};
    case Command::EvalWright:
    case Command::EvalPfq:
      return {{"upper", "lower", "z"}, {}};
    case Command::Oberhettinger:
      return {{"mu", "lambda", "a"}, {}};
    case Command::Quad:
      return {{"mu", "lambda", "a"}, {"gamma", "y", "form", "kernel", "alpha", "oracle"}};
    case Command::Audit:
      return {{"id", "mu", "lambda", "y"}, {"alpha", "a", "gamma"}};
    case Command::Sweep:
      return {{"id"}, {"grid"}};
  }
  return {};
}

double number(const json& params, const std::string& key, std::optional<double> fallback = {}) {
  if (!params.contains(key)) {
    if (fallback) return *fallback;
    throw DomainError("missing parameter '" + key + "'");
  }
  const json& v = params.at(key);
  if (!v.is_number()) throw DomainError("parameter '" + key + "' must be a number");
  return v.get<double>();
}

std::string text(const json& params, const std::string& key, std::string fallback) {
  if (!params.contains(key)) return fallback;
  const json& v = params.at(key);
  if (!v.is_string()) throw DomainError("parameter '" + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<double> number_list(const json& params, const std::string& key) {
  const json& v = params.at(key);
  if (!v.is_array()) throw DomainError("parameter '" + key + "' must be a list of numbers");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) throw DomainError("parameter '" + key + "' must be a list of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

std::vector<WrightParam> pair_list(const json& params, const std::string& key) {
  const json& v = params.at(key);
  const std::string msg = "parameter '" + key + "' must be a list of [shift, weight] pairs";
  if (!v.is_array()) throw DomainError(msg);
  std::vector<WrightParam> out;
  for (const auto& e : v) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw DomainError(msg);
    }
    out.push_back({e[0].get<double>(), e[1].get<double>()});
  }
  return out;
}

double parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw DomainError("not a number: '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  if (s.empty()) return parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Flat key/value result of the evaluation commands.
using Field = std::variant<double, std::size_t, bool, std::string>;
using Fields = std::vector<std::pair<std::string, Field>>;

std::string render_field(const Field& f, OutputFormat format) {
  return std::visit(
      [format](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return format == OutputFormat::Json ? "null" : "";
          return format == OutputFormat::Text ? format_text_number(v) : format_number(v);
        } else if constexpr (std::is_same_v<T, std::size_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return format == OutputFormat::Json ? "\"" + json_escape(v) + "\"" : v;
        }
      },
      f);
}

std::string render_fields(const Fields& fields, OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::Json:
      out = "{";
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + fields[i].first + "\": " + render_field(fields[i].second, format);
      }
      out += "}\n";
      break;
    case OutputFormat::Csv:
      for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + fields[i].first;
      out += '\n';
      for (std::size_t i = 0; i < fields.size(); ++i) {
        out += (i ? "," : "") + render_field(fields[i].second, format);
      }
      out += '\n';
      break;
    case OutputFormat::Text:
      for (const auto& [key, value] : fields) out += key + " = " + render_field(value, format) + '\n';
      break;
  }
  return out;
}

Fields series_fields(const SeriesValue& s) {
  return {{"value", s.value},
          {"terms_used", s.terms_used},
          {"tail_estimate", s.tail_estimate},
          {"converged", s.converged}};
}

KernelChoice kernel_choice(const json& params) {
  using Kind = KernelChoice::Kind;
  const std::string name = text(params, "kernel", "s_alpha");
  const double alpha = number(params, "alpha", 0.0);
  if (name == "s_alpha") return {Kind::SAlpha, alpha};
  if (name == "exp") return {Kind::Exp, 0.0};
  if (name == "expm1_over_w") return {Kind::ExpMinusOneOverW, 0.0};
  if (name == "exp_shifted") return {Kind::ExpShifted, 0.0};
  if (name == "i0_plus_l0") return {Kind::I0plusL0, 0.0};
  if (name == "two_i1_plus_l1") return {Kind::TwoI1plusL1, 0.0};
  if (name == "unit") return {Kind::Unit, 0.0};
  throw DomainError("unknown kernel '" + name +
                    "' (s_alpha, exp, expm1_over_w, exp_shifted, i0_plus_l0, two_i1_plus_l1, unit)");
}

ArgForm arg_form(const json& params) {
  const std::string name = text(params, "form", "fixed");
  if (name == "fixed") return ArgForm::FixedNumerator;
  if (name == "linear") return ArgForm::LinearInX;
  throw DomainError("unknown argument form '" + name + "' (fixed, linear)");
}

AuditGrid grid_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("grid file must hold a JSON object of axis arrays");
  static const std::set<std::string> axes = {"alpha", "mu", "lambda", "lambda_offset",
                                             "a",     "gamma", "y"};
  for (const auto& [key, value] : j.items()) {
    if (!axes.contains(key)) throw DomainError("unknown grid axis '" + key + "'");
  }
  auto axis = [&j](const std::string& key, std::vector<double> fallback) {
    return j.contains(key) ? number_list(j, key) : fallback;
  };
  AuditGrid grid;
  grid.alpha = axis("alpha", {0.0});
  grid.mu = axis("mu", {});
  grid.lambda = axis("lambda", {});
  grid.lambda_offset = axis("lambda_offset", {});
  grid.a = axis("a", {1.0});
  grid.gamma = axis("gamma", {1.0});
  grid.y = axis("y", {});
  return grid;
}

struct Outcome {
  std::string report;
  int status = kExitOk;
  std::string diagnostic;
  bool failed = false;  // report is an error record, not a result
};

Outcome execute(const RunConfig& config) {
  const json& p = config.params;
  const OutputFormat fmt = config.output_format;
  switch (config.command) {
    case Command::EvalKernel: {
      const SeriesValue s =
          kernel_eval(KernelParams(number(p, "alpha")), number(p, "z"), config.tol);
      return {render_fields(series_fields(s), fmt), s.converged ? kExitOk : kExitNonConvergence,
              s.converged ? "" : "series hit its term cap"};
    }
    case Command::EvalWright: {
      const WrightSpec spec{pair_list(p, "upper"), pair_list(p, "lower")};
      const SeriesValue s = wright_eval(spec, number(p, "z"), config.tol);
      return {render_fields(series_fields(s), fmt), s.converged ? kExitOk : kExitNonConvergence,
              s.converged ? "" : "series hit its term cap"};
    }
    case Command::EvalPfq: {
      const SeriesValue s =
          pfq_eval(number_list(p, "upper"), number_list(p, "lower"), number(p, "z"), config.tol);
      return {render_fields(series_fields(s), fmt), s.converged ? kExitOk : kExitNonConvergence,
              s.converged ? "" : "series hit its term cap"};
    }
    case Command::Oberhettinger: {
      const double v = oberhettinger_closed(number(p, "mu"), number(p, "lambda"), number(p, "a"));
      return {render_fields({{"value", v}}, fmt), kExitOk, ""};
    }
    case Command::Quad: {
      const IntegralSpec spec{number(p, "mu"),        number(p, "lambda"),
                              number(p, "a"),         number(p, "gamma", 1.0),
                              number(p, "y", 0.0),    arg_form(p)};
      const PowerSeriesKernel kernel = as_power_series(kernel_choice(p));
      const std::string oracle = text(p, "oracle", "quadrature");
      if (oracle == "quadrature") {
        const QuadResult q = quad_lhs(spec, kernel, config.tol);
        return {render_fields({{"value", q.value},
                               {"abs_err_estimate", q.abs_err_estimate},
                               {"n_evals", q.n_evals},
                               {"subdivisions", q.subdivisions}},
                              fmt),
                kExitOk, ""};
      }
      if (oracle == "series") {
        const SeriesValue s = proof_series(spec, kernel, config.tol);
        return {render_fields(series_fields(s), fmt), s.converged ? kExitOk : kExitNonConvergence,
                s.converged ? "" : "series hit its term cap"};
      }
      throw DomainError("unknown oracle '" + oracle + "' (quadrature, series)");
    }
    case Command::Audit: {
      const AuditParams params{number(p, "alpha", 0.0), number(p, "mu"),
                               number(p, "lambda"),     number(p, "a", 1.0),
                               number(p, "gamma", 1.0), number(p, "y")};
      const AuditRecord record = audit_point(text(p, "id", ""), params);
      return {render_report({record}, fmt), kExitOk, ""};
    }
    case Command::Sweep: {
      const std::string id = text(p, "id", "");
      const std::string grid_name = text(p, "grid", "default");
      std::vector<std::string> ids;
      if (id == "all") {
        for (const auto& def : catalog()) ids.push_back(def.id);
      } else {
        ids.push_back(find_identity(id).id);
      }
      std::optional<AuditGrid> custom;
      if (grid_name != "default") {
        std::ifstream in(grid_name);
        if (!in) throw IoError("cannot read grid file '" + grid_name + "'");
        custom = grid_from_json(json::parse(in));
      }
      std::vector<AuditRecord> records;
      for (const auto& one : ids) {
        auto part = audit_sweep(one, custom ? *custom : default_grid(one));
        records.insert(records.end(), part.begin(), part.end());
      }
      const SweepSummary s = summarize(records);
      std::ostringstream diag;
      diag << "summary: " << records.size() << " records, " << s.verified << " VERIFIED, "
           << s.refuted << " REFUTED, " << s.inconclusive << " INCONCLUSIVE, "
           << s.oracle_mismatches << " oracle mismatches";
      return {render_report(records, fmt), kExitOk, diag.str()};
    }
  }
  throw DomainError("unhandled command");
}

std::string render_error(int status, const std::string& message, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      return "{\"error\": {\"status\": " + std::to_string(status) + ", \"message\": \"" +
             json_escape(message) + "\"}}\n";
    case OutputFormat::Csv:
      return "status,message\n" + std::to_string(status) + ",\"" + message + "\"\n";
    case OutputFormat::Text:
      return "error (status " + std::to_string(status) + "): " + message + "\n";
  }
  return message;
}

}  // namespace

Command parse_command(std::string_view name) {
  for (Command c : {Command::EvalKernel, Command::EvalWright, Command::EvalPfq,
                    Command::Oberhettinger, Command::Quad, Command::Audit, Command::Sweep}) {
    if (to_string(c) == name) return c;
  }
  throw DomainError("unknown command '" + std::string(name) + "'");
}

std::string_view to_string(Command command) noexcept {
  switch (command) {
    case Command::EvalKernel:
      return "eval-kernel";
    case Command::EvalWright:
      return "eval-wright";
    case Command::EvalPfq:
      return "eval-pfq";
    case Command::Oberhettinger:
      return "oberhettinger";
    case Command::Quad:
      return "quad";
    case Command::Audit:
      return "audit";
    case Command::Sweep:
      return "sweep";
  }
  return "";
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("config must be a JSON object");
  static const std::set<std::string> allowed = {"command", "params", "tol", "output_format",
                                                "output_path"};
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) throw DomainError("unknown config key '" + key + "'");
  }
  if (!j.contains("command") || !j["command"].is_string()) {
    throw DomainError("config needs a string 'command'");
  }
  RunConfig config;
  config.command = parse_command(j["command"].get<std::string>());
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw DomainError("config 'params' must be an object");
    config.params = j["params"];
  }
  if (j.contains("tol")) {
    if (!j["tol"].is_number()) throw DomainError("config 'tol' must be a number");
    config.tol = j["tol"].get<double>();
  }
  if (j.contains("output_format")) {
    if (!j["output_format"].is_string()) throw DomainError("'output_format' must be a string");
    config.output_format = parse_output_format(j["output_format"].get<std::string>());
  }
  if (j.contains("output_path") && !j["output_path"].is_null()) {
    if (!j["output_path"].is_string()) throw DomainError("'output_path' must be a string");
    config.output_path = j["output_path"].get<std::string>();
  }
  return config;
}

void validate(const RunConfig& config) {
  if (!(config.tol >= kMinTol && config.tol <= kMaxTol)) {
    throw DomainError("tol must lie in [1e-14, 1e-2], got " + format_number(config.tol));
  }
  if (!config.params.is_object()) throw DomainError("params must be a key/value object");
  const KeySet keys = keys_for(config.command);
  for (const auto& [key, value] : config.params.items()) {
    if (!keys.required.contains(key) && !keys.optional.contains(key)) {
      throw DomainError("unknown parameter '" + key + "' for command " +
                        std::string(to_string(config.command)));
    }
  }
  for (const auto& key : keys.required) {
    if (!config.params.contains(key)) {
      throw DomainError("missing parameter '" + key + "' for command " +
                        std::string(to_string(config.command)));
    }
  }
}

json parse_number_list(std::string_view s) {
  json out = json::array();
  for (auto part : split(s, ',')) out.push_back(parse_double(part));
  return out;
}

json parse_pair_list(std::string_view s) {
  json out = json::array();
  for (auto part : split(s, ',')) {
    const auto halves = split(part, ':');
    if (halves.size() != 2) {
      throw DomainError("expected shift:weight pair, got '" + std::string(part) + "'");
    }
    out.push_back(json::array({parse_double(halves[0]), parse_double(halves[1])}));
  }
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Outcome outcome;
  try {
    validate(config);
    outcome = execute(config);
  } catch (const NonConvergenceError& e) {
    outcome = {render_error(kExitNonConvergence, e.what(), config.output_format),
               kExitNonConvergence, e.what(), true};
  } catch (const std::exception& e) {
    outcome = {render_error(kExitDomain, e.what(), config.output_format), kExitDomain, e.what(),
               true};
  }

  if (!outcome.diagnostic.empty()) {
    err << (outcome.status == kExitOk ? "" : "error: ") << outcome.diagnostic << '\n';
  }
  if (config.output_path) {
    try {
      write_text_file(*config.output_path, outcome.report);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitDomain;
    }
  } else if (!outcome.failed) {
    out << outcome.report;
  }
  return outcome.status;
}

}  // namespace bsk
