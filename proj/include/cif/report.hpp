#ifndef CIF_REPORT_HPP
#define CIF_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cif/bigcount.hpp"
#include "cif/search.hpp"

namespace cif {

/// One (profile, theorem) comparison.
struct ReportRecord {
  std::string profile;
  std::string theorem;
  BigCount bound_value;
  std::string branch;
  BigCount search_optimum;
  bool agreement = false;
  std::optional<std::uint64_t> extremal_class_count;
  std::optional<std::uint64_t> elapsed_ms;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

enum class Format { Text, Json, Csv };
Format parse_format(const std::string& name);

/// {"version": 1, "records": [...]}; integers as decimal strings, absent
/// values as null.
std::string records_to_json(const std::vector<ReportRecord>& records);
/// Throws ParseError on malformed input or a record violating
/// agreement == (bound_value == search_optimum).
std::vector<ReportRecord> records_from_json(const std::string& text);
std::string records_to_csv(const std::vector<ReportRecord>& records);
std::string records_to_text(const std::vector<ReportRecord>& records);
std::string render_records(const std::vector<ReportRecord>& records, Format f);

/// JSON object for a certificate: optimum, size vectors, witnesses in
/// family text form, classes, bound and agreement.
std::string certificate_to_json(const Certificate& c);
std::string certificate_to_text(const Certificate& c);

}  // namespace cif

#endif  // CIF_REPORT_HPP
