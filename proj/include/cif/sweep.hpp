#ifndef CIF_SWEEP_HPP
#define CIF_SWEEP_HPP

#include <string>
#include <vector>

#include "cif/constructions.hpp"
#include "cif/error.hpp"
#include "cif/report.hpp"

namespace cif {

struct SweepCaps {
  int full_space_n = 5;   ///< extremal class counts only at or below this n
  int canonical_n = 8;
  int search_n = kMaxSearchN;
};

struct SweepConfig {
  int n_min = 2;
  int n_max = 10;
  int r_min = 2;
  int r_max = 3;
  int k_max = 4;
  std::vector<TheoremId> theorems{TheoremId::T17};
  SweepCaps caps;
  std::string output_path;  ///< empty: stdout
  Format format = Format::Text;
  /// Extra ordered-theorem profiles checked after the grid.
  std::vector<Profile> extra_profiles{Profile{10, {5, 3, 2}, std::nullopt}};
  /// Fill extremal_class_count where the full-space engine is within caps.
  bool extremal = false;
  bool timing = false;
};

/// Keys: n_range [lo, hi], r_range [lo, hi], k_max, theorems ["t17", ...],
/// caps {full_space_n, canonical_n, search_n}, output {path, format},
/// extra_profiles [{"n": 10, "k": [5, 3, 2]}], extremal, timing. Missing keys
/// keep the defaults. Throws ParseError on bad input or empty ranges.
SweepConfig parse_sweep_config(const std::string& json_text);

/// One job of a sweep.
struct SweepItem {
  TheoremId theorem = TheoremId::T17;
  Profile profile;
  int tau = 0;  ///< weighted pairs only
  int c = 0;
};

/// Items in deterministic order: theorems as listed, then n, r, the k
/// tuple in generation order, istar / tau / c.
std::vector<SweepItem> sweep_items(const SweepConfig& cfg);

/// Computes one record.
ReportRecord evaluate_item(const SweepItem& item, const SweepConfig& cfg);

/// All records, computed concurrently and returned in item order.
std::vector<ReportRecord> run_sweep(const SweepConfig& cfg);

struct SweepSummary {
  std::size_t checked = 0;
  std::size_t agreed = 0;
  std::size_t failed = 0;
};
SweepSummary summarize(const std::vector<ReportRecord>& records);
std::string summary_line(const SweepSummary& s);  // "checked=N agreed=N failed=N"

}  // namespace cif

#endif  // CIF_SWEEP_HPP
