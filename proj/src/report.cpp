#include "bsk/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "bsk/errors.hpp"

namespace bsk {
namespace {

std::string csv_cell(std::optional<double> v) {
  return v && std::isfinite(*v) ? format_number(*v) : std::string();
}

std::string json_value(std::optional<double> v) {
  return v && std::isfinite(*v) ? format_number(*v) : std::string("null");
}

std::string json_value(const std::optional<std::string>& s) {
  return s ? "\"" + json_escape(*s) + "\"" : std::string("null");
}

std::optional<double> lhs_value(const AuditRecord& r) {
  if (r.lhs_error) return std::nullopt;
  return r.lhs.value;
}

std::optional<double> lhs_err(const AuditRecord& r) {
  if (r.lhs_error) return std::nullopt;
  return r.lhs.abs_err_estimate;
}

std::string render_csv(const std::vector<AuditRecord>& records) {
  std::string out(kReportCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    const auto& p = r.params;
    out += r.identity_id;
    for (double v : {p.alpha, p.mu, p.lambda, p.a, p.gamma, p.y}) {
      out += ',' + format_number(v);
    }
    for (auto v : {lhs_value(r), lhs_err(r), r.rhs_stated, r.rhs_derived, r.rel_err_stated,
                   r.rel_err_derived}) {
      out += ',' + csv_cell(v);
    }
    out += ',';
    out += to_string(r.verdict);
    out += '\n';
  }
  return out;
}

std::string render_json(const std::vector<AuditRecord>& records) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    const auto& p = r.params;
    out += "  {\"identity_id\": \"" + json_escape(r.identity_id) + "\"";
    out += ", \"alpha\": " + format_number(p.alpha);
    out += ", \"mu\": " + format_number(p.mu);
    out += ", \"lambda\": " + format_number(p.lambda);
    out += ", \"a\": " + format_number(p.a);
    out += ", \"gamma\": " + format_number(p.gamma);
    out += ", \"y\": " + format_number(p.y);
    out += ", \"lhs_value\": " + json_value(lhs_value(r));
    out += ", \"lhs_err\": " + json_value(lhs_err(r));
    out += ", \"rhs_stated\": " + json_value(r.rhs_stated);
    out += ", \"rhs_derived\": " + json_value(r.rhs_derived);
    out += ", \"rel_err_stated\": " + json_value(r.rel_err_stated);
    out += ", \"rel_err_derived\": " + json_value(r.rel_err_derived);
    out += ", \"verdict\": \"" + std::string(to_string(r.verdict)) + "\"";
    out += ", \"lhs_error\": " + json_value(r.lhs_error);
    out += ", \"rhs_stated_error\": " + json_value(r.rhs_stated_error);
    out += ", \"rhs_derived_error\": " + json_value(r.rhs_derived_error);
    out += i + 1 < records.size() ? "},\n" : "}\n";
  }
  out += "]\n";
  return out;
}

std::string text_cell(std::optional<double> v) {
  return v && std::isfinite(*v) ? format_text_number(*v) : std::string("-");
}

std::string render_text(const std::vector<AuditRecord>& records) {
  std::ostringstream out;
  for (const auto& r : records) {
    const auto& p = r.params;
    out << r.identity_id << "  alpha=" << format_text_number(p.alpha)
        << " mu=" << format_text_number(p.mu) << " lambda=" << format_text_number(p.lambda)
        << " a=" << format_text_number(p.a) << " gamma=" << format_text_number(p.gamma)
        << " y=" << format_text_number(p.y) << '\n'
        << "  lhs          " << text_cell(lhs_value(r)) << "  (err " << text_cell(lhs_err(r))
        << ")\n"
        << "  rhs_stated   " << text_cell(r.rhs_stated) << "  (rel err "
        << text_cell(r.rel_err_stated) << ")\n"
        << "  rhs_derived  " << text_cell(r.rhs_derived) << "  (rel err "
        << text_cell(r.rel_err_derived) << ")\n"
        << "  verdict      " << to_string(r.verdict) << '\n';
    if (r.lhs_error) out << "  lhs error: " << *r.lhs_error << '\n';
    if (r.rhs_stated_error) out << "  stated error: " << *r.rhs_stated_error << '\n';
    if (r.rhs_derived_error) out << "  derived error: " << *r.rhs_derived_error << '\n';
  }
  return out.str();
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw DomainError("unknown output format '" + std::string(name) + "' (json, csv, text)");
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_text_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string render_report(const std::vector<AuditRecord>& records, OutputFormat format) {
  if (records.empty()) throw DomainError("report needs at least one record");
  switch (format) {
    case OutputFormat::Json:
      return render_json(records);
    case OutputFormat::Csv:
      return render_csv(records);
    case OutputFormat::Text:
      return render_text(records);
  }
  return render_json(records);
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void write_report(const std::vector<AuditRecord>& records, OutputFormat format,
                  const std::filesystem::path& path) {
  write_text_file(path, render_report(records, format));
}

}  // namespace bsk
