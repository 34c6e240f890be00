#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bsk/errors.hpp"
#include "bsk/report.hpp"

using namespace bsk;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<AuditRecord> sample() {
  return {audit_point("T3", {0.0, 1.0, 2.5, 1.0, 1.0, 0.5}),
          audit_point("T1", {1.0, 1.0, 2.5, 1.0, 1.0, 0.5}),
          audit_point("T2", {0.0, 1.0, 2.0, 1.0, 1.0, 0.8})};
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(1.0) == "1");
  CHECK(format_text_number(1.0 / 3.0) == "0.333333333333");
  CHECK(json_escape("a\"b\\c\n") == "a\\\"b\\\\c\\n");
}

TEST_CASE("output format names") {
  CHECK(parse_output_format("json") == OutputFormat::Json);
  CHECK(parse_output_format("csv") == OutputFormat::Csv);
  CHECK(parse_output_format("text") == OutputFormat::Text);
  CHECK_THROWS_AS(parse_output_format("xml"), DomainError);
}

TEST_CASE("CSV report") {
  const auto records = sample();
  const auto rows = lines(render_report(records, OutputFormat::Csv));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == kReportCsvHeader);
  CHECK(rows[1].starts_with("T3,0,1,2.5,1,1,0.5,"));
  CHECK(rows[1].ends_with(",VERIFIED"));
  CHECK(rows[2].ends_with(",REFUTED"));
  // T2's printed series diverges: its stated value and error are empty cells.
  CHECK(rows[3].find(",,") != std::string::npos);
  CHECK(rows[3].ends_with(",REFUTED"));
  for (const auto& row : rows) CHECK(std::count(row.begin(), row.end(), ',') == 13);
  CHECK_THROWS_AS(render_report({}, OutputFormat::Csv), DomainError);
}

TEST_CASE("JSON report round-trips bit-exactly") {
  const auto records = sample();
  const auto parsed = nlohmann::json::parse(render_report(records, OutputFormat::Json));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& j = parsed[i];
    const auto& r = records[i];
    CHECK(j["identity_id"] == r.identity_id);
    CHECK(j["mu"].get<double>() == r.params.mu);
    CHECK(j["lhs_value"].get<double>() == r.lhs.value);
    CHECK(j["lhs_err"].get<double>() == r.lhs.abs_err_estimate);
    CHECK(j["rhs_derived"].get<double>() == *r.rhs_derived);
    CHECK(j["rel_err_derived"].get<double>() == *r.rel_err_derived);
    if (r.rhs_stated) {
      CHECK(j["rhs_stated"].get<double>() == *r.rhs_stated);
      CHECK(j["rel_err_stated"].get<double>() == *r.rel_err_stated);
    } else {
      CHECK(j["rhs_stated"].is_null());
      CHECK(j["rel_err_stated"].is_null());
      CHECK(j["rhs_stated_error"].is_string());
    }
    CHECK(j["verdict"] == std::string(to_string(r.verdict)));
  }
}

TEST_CASE("text report") {
  const std::string text = render_report(sample(), OutputFormat::Text);
  CHECK(text.find("VERIFIED") != std::string::npos);
  CHECK(text.find("T2") != std::string::npos);
}

TEST_CASE("writing reports") {
  const auto dir = std::filesystem::temp_directory_path() / "bsk_report_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "r.csv";
  write_report(sample(), OutputFormat::Csv, path);
  std::ifstream in(path);
  std::stringstream got;
  got << in.rdbuf();
  CHECK(got.str() == render_report(sample(), OutputFormat::Csv));
  CHECK_THROWS_AS(write_report(sample(), OutputFormat::Csv, dir / "missing" / "r.csv"), IoError);
  std::filesystem::remove_all(dir);
}
