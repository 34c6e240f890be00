#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bsk/identity_audit.hpp"

namespace bsk {

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_output_format(std::string_view name);

// 17 significant digits ("%.17g"); round-trips every finite double.
std::string format_number(double v);
// "%.12g", for human-readable text output.
std::string format_text_number(double v);
std::string json_escape(std::string_view s);

// CSV header of an audit report, in column order.
inline constexpr std::string_view kReportCsvHeader =
    "identity_id,alpha,mu,lambda,a,gamma,y,lhs_value,lhs_err,rhs_stated,rhs_derived,"
    "rel_err_stated,rel_err_derived,verdict";

// Renders records in sweep order. Absent or non-finite numbers become empty
// CSV cells and JSON nulls. Throws DomainError for an empty list.
std::string render_report(const std::vector<AuditRecord>& records, OutputFormat format);

// Writes render_report(records, format) to path; throws IoError naming the path.
void write_report(const std::vector<AuditRecord>& records, OutputFormat format,
                  const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace bsk
