#include "cif/report.hpp"

#include <iomanip>
#include <sstream>

#include "cif/error.hpp"
#include "json.hpp"

namespace cif {

namespace {

using nlohmann::ordered_json;

ordered_json opt_u64(const std::optional<std::uint64_t>& v) {
  return v ? ordered_json(std::to_string(*v)) : ordered_json(nullptr);
}

std::string opt_text(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : ""; }

std::optional<std::uint64_t> read_opt_u64(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return BigCount::parse(j.get<std::string>()).to_u64();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw ParseError("unknown format '" + name + "' (text, json, csv)");
}

std::string records_to_json(const std::vector<ReportRecord>& records) {
  ordered_json doc;
  doc["version"] = 1;
  doc["records"] = ordered_json::array();
  for (const auto& r : records) {
    ordered_json j;
    j["profile"] = r.profile;
    j["theorem"] = r.theorem;
    j["bound_value"] = r.bound_value.to_string();
    j["branch"] = r.branch;
    j["search_optimum"] = r.search_optimum.to_string();
    j["agreement"] = r.agreement;
    j["extremal_class_count"] = opt_u64(r.extremal_class_count);
    j["elapsed_ms"] = opt_u64(r.elapsed_ms);
    doc["records"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::vector<ReportRecord> records_from_json(const std::string& text) {
  std::vector<ReportRecord> out;
  try {
    const auto doc = ordered_json::parse(text);
    if (doc.at("version").get<int>() != 1) throw ParseError("unsupported report version");
    for (const auto& j : doc.at("records")) {
      ReportRecord r;
      r.profile = j.at("profile").get<std::string>();
      r.theorem = j.at("theorem").get<std::string>();
      r.bound_value = BigCount::parse(j.at("bound_value").get<std::string>());
      r.branch = j.at("branch").get<std::string>();
      r.search_optimum = BigCount::parse(j.at("search_optimum").get<std::string>());
      r.agreement = j.at("agreement").get<bool>();
      r.extremal_class_count = read_opt_u64(j.at("extremal_class_count"));
      r.elapsed_ms = read_opt_u64(j.at("elapsed_ms"));
      if (r.agreement != (r.bound_value == r.search_optimum)) {
        throw ParseError("record " + r.profile + ": agreement flag inconsistent with values");
      }
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("report json: ") + e.what());
  }
  return out;
}

std::string records_to_csv(const std::vector<ReportRecord>& records) {
  std::ostringstream os;
  os << "profile,theorem,bound_value,branch,search_optimum,agreement,extremal_class_count,elapsed_ms\n";
  for (const auto& r : records) {
    os << csv_cell(r.profile) << ',' << csv_cell(r.theorem) << ',' << r.bound_value << ',' << csv_cell(r.branch) << ','
       << r.search_optimum << ',' << (r.agreement ? "true" : "false") << ',' << opt_text(r.extremal_class_count)
       << ',' << opt_text(r.elapsed_ms) << '\n';
  }
  return os.str();
}

std::string records_to_text(const std::vector<ReportRecord>& records) {
  std::size_t width = 7;
  for (const auto& r : records) width = std::max(width, r.profile.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "profile" << "  theorem  " << std::setw(12) << "bound"
     << std::setw(12) << "branch" << std::setw(12) << "search" << "agree\n";
  for (const auto& r : records) {
    os << std::setw(static_cast<int>(width)) << r.profile << "  " << std::setw(9) << r.theorem << std::setw(12)
       << r.bound_value.to_string() << std::setw(12) << r.branch << std::setw(12) << r.search_optimum.to_string()
       << (r.agreement ? "yes" : "NO") << '\n';
  }
  return os.str();
}

std::string render_records(const std::vector<ReportRecord>& records, Format f) {
  switch (f) {
    case Format::Json:
      return records_to_json(records);
    case Format::Csv:
      return records_to_csv(records);
    case Format::Text:
      return records_to_text(records);
  }
  return {};
}

std::string certificate_to_json(const Certificate& c) {
  ordered_json j;
  j["profile"] = c.profile.text();
  j["engine"] = c.engine;
  j["optimum"] = c.optimum.to_string();
  j["optimal_size_vectors"] = ordered_json::array();
  for (const auto& v : c.optimal_size_vectors) {
    ordered_json row = ordered_json::array();
    for (auto x : v) row.push_back(std::to_string(x));
    j["optimal_size_vectors"].push_back(std::move(row));
  }
  j["optima_count"] = std::to_string(c.optima_count);
  j["witnesses"] = ordered_json::array();
  for (const auto& t : c.witnesses) {
    ordered_json row = ordered_json::array();
    for (const auto& f : t) row.push_back(to_text(f));
    j["witnesses"].push_back(std::move(row));
  }
  j["extremal_classes"] = ordered_json::array();
  for (const auto& k : c.extremal_classes) j["extremal_classes"].push_back(k.to_text());
  j["classes_complete"] = c.classes_complete;
  j["bound_theorem"] = c.bound_theorem.empty() ? ordered_json(nullptr) : ordered_json(c.bound_theorem);
  j["bound"] = c.bound ? ordered_json(c.bound->to_string()) : ordered_json(nullptr);
  j["bound_agreement"] = c.bound_agreement;
  j["notes"] = c.notes;
  return j.dump(2) + "\n";
}

std::string certificate_to_text(const Certificate& c) {
  std::ostringstream os;
  os << "profile: " << c.profile.text() << "\n";
  os << "engine: " << c.engine << "\n";
  os << "optimum: " << c.optimum << "\n";
  os << "optimal size vectors (" << c.optimal_size_vectors.size() << "):";
  for (const auto& v : c.optimal_size_vectors) {
    os << " (";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
  }
  os << "\n";
  if (c.engine == "full") os << "optimal tuples: " << c.optima_count << "\n";
  for (std::size_t w = 0; w < c.witnesses.size(); ++w) {
    os << "witness " << w + 1 << ":\n";
    for (const auto& f : c.witnesses[w]) os << "  " << to_text(f) << "\n";
  }
  if (c.classes_complete) {
    os << "classes (" << c.extremal_classes.size() << "):\n";
    for (const auto& k : c.extremal_classes) os << "  " << k.to_text() << "\n";
  }
  for (const auto& note : c.notes) os << note << "\n";
  if (c.bound) {
    os << "bound " << c.bound_theorem << ": " << *c.bound << "\n";
    os << "agreement: " << (c.bound_agreement ? "true" : "false") << "\n";
  } else {
    os << "agreement: no bound applies\n";
  }
  return os.str();
}

}  // namespace cif
