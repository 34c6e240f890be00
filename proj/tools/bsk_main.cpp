// Command-line front end: bsk <command> [--flags] or bsk --config run.json
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsk/cli.hpp"
#include "bsk/errors.hpp"

namespace {

using json = nlohmann::json;

// Flags of one subcommand, collected as raw strings and converted afterwards.
struct FlagSet {
  std::map<std::string, std::string> numbers;
  std::map<std::string, std::string> number_lists;
  std::map<std::string, std::string> pair_lists;
  std::map<std::string, std::string> strings;
};

void add_number(CLI::App* sub, FlagSet& flags, const std::string& name, const std::string& help) {
  sub->add_option("--" + name, flags.numbers[name], help)->allow_extra_args(false);
}

void add_string(CLI::App* sub, FlagSet& flags, const std::string& name, const std::string& help) {
  sub->add_option("--" + name, flags.strings[name], help);
}

json to_params(const FlagSet& flags, CLI::App* sub) {
  json params = json::object();
  auto given = [sub](const std::string& name) { return sub->count("--" + name) > 0; };
  for (const auto& [k, v] : flags.numbers) {
    if (given(k)) params[k] = bsk::parse_number_list(v).at(0);
  }
  for (const auto& [k, v] : flags.number_lists) {
    if (given(k)) params[k] = bsk::parse_number_list(v);
  }
  for (const auto& [k, v] : flags.pair_lists) {
    if (given(k)) params[k] = bsk::parse_pair_list(v);
  }
  for (const auto& [k, v] : flags.strings) {
    if (given(k)) params[k] = v;
  }
  return params;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bessel-Struve kernel integrals: special functions and identity audits"};
  app.require_subcommand(0, 1);

  std::string config_path;
  double tol = bsk::kDefaultTol;
  std::string format = "text";
  std::string output;
  app.add_option("--config", config_path, "JSON run config {command, params, tol, ...}");
  app.add_option("--tol", tol, "tolerance in [1e-14, 1e-2] (default 1e-10)");
  app.add_option("--format", format, "output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", output, "write the report to this file instead of stdout");
  app.fallthrough();

  std::map<std::string, FlagSet> flagsets;
  std::map<std::string, CLI::App*> subs;
  auto sub = [&](const std::string& name, const std::string& help) {
    subs[name] = app.add_subcommand(name, help);
    return std::pair<CLI::App*, FlagSet*>{subs[name], &flagsets[name]};
  };

  {
    auto [s, f] = sub("eval-kernel", "Bessel-Struve kernel S_α(z)");
    add_number(s, *f, "alpha", "order α > -1");
    add_number(s, *f, "z", "argument");
  }
  {
    auto [s, f] = sub("eval-wright", "generalized Wright function pΨq(z)");
    s->add_option("--upper", f->pair_lists["upper"], "numerator pairs a:α,... (may be empty)");
    s->add_option("--lower", f->pair_lists["lower"], "denominator pairs b:β,... (may be empty)");
    add_number(s, *f, "z", "argument");
  }
  {
    auto [s, f] = sub("eval-pfq", "generalized hypergeometric pFq(z)");
    s->add_option("--upper", f->number_lists["upper"], "numerator parameters a1,a2,...");
    s->add_option("--lower", f->number_lists["lower"], "denominator parameters b1,b2,...");
    add_number(s, *f, "z", "argument");
  }
  {
    auto [s, f] = sub("oberhettinger", "closed-form base integral, 0 < μ < λ, a > 0");
    add_number(s, *f, "mu", "μ");
    add_number(s, *f, "lambda", "λ");
    add_number(s, *f, "a", "scale a");
  }
  {
    auto [s, f] = sub("quad", "left-hand-side integral by quadrature (or term-wise series)");
    for (const char* k : {"mu", "lambda", "a", "gamma", "y", "alpha"}) add_number(s, *f, k, k);
    add_string(s, *f, "form", "argument form: fixed (γy/t) or linear (γxy/t)");
    add_string(s, *f, "kernel",
               "s_alpha, exp, expm1_over_w, exp_shifted, i0_plus_l0, two_i1_plus_l1, unit");
    add_string(s, *f, "oracle", "quadrature (default) or series");
  }
  {
    auto [s, f] = sub("audit", "audit one identity at one parameter point");
    add_string(s, *f, "id", "T1, T2, C1, C2, C3, T3, T4, C3-S12, T4-S1");
    for (const char* k : {"alpha", "mu", "lambda", "a", "gamma", "y"}) add_number(s, *f, k, k);
  }
  {
    auto [s, f] = sub("sweep", "audit one identity (or all) over a parameter grid");
    add_string(s, *f, "id", "identity id or 'all'");
    add_string(s, *f, "grid", "'default' or a JSON file of axis arrays");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? bsk::kExitOk : bsk::kExitDomain;
  }

  bsk::RunConfig config;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw bsk::IoError("cannot read config file '" + config_path + "'");
      config = bsk::config_from_json(json::parse(in));
    } else {
      const auto chosen = app.get_subcommands();
      if (chosen.empty()) {
        std::cerr << app.help();
        return bsk::kExitDomain;
      }
      const std::string name = chosen.front()->get_name();
      config.command = bsk::parse_command(name);
      config.params = to_params(flagsets[name], subs[name]);
    }
    if (app.count("--tol")) config.tol = tol;
    if (app.count("--format")) config.output_format = bsk::parse_output_format(format);
    if (app.count("--output")) config.output_path = output;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bsk::kExitDomain;
  }
  return bsk::run(config, std::cout, std::cerr);
}
