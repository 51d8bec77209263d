#include "cif/sweep.hpp"

#include <chrono>
#include <exception>
#include <functional>

#include "cif/bounds.hpp"
#include "cif/error.hpp"
#include "cif/full_space.hpp"
#include "cif/search.hpp"
#include "json.hpp"

namespace cif {

namespace {

/// Non-increasing tuples of length r over [1, k_max].
void descending_tuples(int r, int k_max, const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> ks(static_cast<std::size_t>(r));
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int limit) {
    if (pos == ks.size()) {
      emit(ks);
      return;
    }
    for (int k = limit; k >= 1; --k) {
      ks[pos] = k;
      rec(pos + 1, k);
    }
  };
  rec(0, k_max);
}

std::pair<int, int> read_range(const nlohmann::json& j, const char* key) {
  if (!j.is_array() || j.size() != 2) throw ParseError(std::string(key) + " must be [lo, hi]");
  const int lo = j[0].get<int>();
  const int hi = j[1].get<int>();
  if (lo > hi) throw ParseError(std::string(key) + " is empty");
  return {lo, hi};
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& json_text) {
  SweepConfig cfg;
  try {
    const auto j = nlohmann::json::parse(json_text);
    if (!j.is_object()) throw ParseError("config must be a JSON object");
    if (j.contains("n_range")) std::tie(cfg.n_min, cfg.n_max) = read_range(j["n_range"], "n_range");
    if (j.contains("r_range")) std::tie(cfg.r_min, cfg.r_max) = read_range(j["r_range"], "r_range");
    if (j.contains("k_max")) cfg.k_max = j["k_max"].get<int>();
    if (j.contains("theorems")) {
      cfg.theorems.clear();
      for (const auto& t : j["theorems"]) {
        auto id = parse_theorem(t.get<std::string>());
        if (!id) throw ParseError("unknown theorem '" + t.get<std::string>() + "'");
        cfg.theorems.push_back(*id);
      }
      if (cfg.theorems.empty()) throw ParseError("theorems is empty");
    }
    if (j.contains("caps")) {
      const auto& c = j["caps"];
      cfg.caps.full_space_n = c.value("full_space_n", cfg.caps.full_space_n);
      cfg.caps.canonical_n = c.value("canonical_n", cfg.caps.canonical_n);
      cfg.caps.search_n = c.value("search_n", cfg.caps.search_n);
    }
    if (j.contains("output")) {
      const auto& o = j["output"];
      cfg.output_path = o.value("path", std::string{});
      cfg.format = parse_format(o.value("format", std::string{"text"}));
    }
    if (j.contains("extra_profiles")) {
      cfg.extra_profiles.clear();
      for (const auto& e : j["extra_profiles"]) {
        Profile p{e.at("n").get<int>(), e.at("k").get<std::vector<int>>(), std::nullopt};
        p.validate();
        cfg.extra_profiles.push_back(std::move(p));
      }
    }
    cfg.extremal = j.value("extremal", cfg.extremal);
    cfg.timing = j.value("timing", cfg.timing);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (cfg.n_min < 1 || cfg.r_min < 2 || cfg.k_max < 1) throw ParseError("config: ranges must start at n >= 1, r >= 2, k_max >= 1");
  if (cfg.n_max > kMaxGroundSet) throw ParseError("config: n_range exceeds the ground-set cap");
  if (cfg.caps.full_space_n > kMaxSearchN || cfg.caps.canonical_n > kMaxCanonicalN || cfg.caps.search_n > kMaxSearchN) {
    throw ParseError("config: caps above the module hard caps");
  }
  return cfg;
}

std::vector<SweepItem> sweep_items(const SweepConfig& cfg) {
  std::vector<SweepItem> items;
  auto push = [&](TheoremId t, int n, std::vector<int> ks, std::optional<std::size_t> istar = std::nullopt, int tau = 0,
                  int c = 0) { items.push_back({t, Profile{n, std::move(ks), istar}, tau, c}); };
  const int n_top = std::min(cfg.n_max, cfg.caps.search_n);
  for (TheoremId t : cfg.theorems) {
    for (int n = cfg.n_min; n <= n_top; ++n) {
      switch (t) {
        case TheoremId::T17:
        case TheoremId::T16:
          for (int r = cfg.r_min; r <= cfg.r_max; ++r) {
            descending_tuples(r, std::min(cfg.k_max, n), [&](const std::vector<int>& ks) {
              Profile p{n, ks, std::nullopt};
              if (t == TheoremId::T17) {
                if (!p.ordered_hypothesis_failure()) push(t, n, ks);
                return;
              }
              for (std::size_t is = 0; is < ks.size(); ++is) {
                if (!p.conditional_hypothesis_failure(is)) push(t, n, ks, is);
              }
            });
          }
          break;
        case TheoremId::T15:
        case TheoremId::T12:
          for (int r = cfg.r_min; r <= cfg.r_max; ++r) {
            for (int k = 1; k <= cfg.k_max && 2 * k <= n; ++k) push(t, n, std::vector<int>(static_cast<std::size_t>(r), k));
          }
          break;
        case TheoremId::T13:
          for (int k = 1; k <= cfg.k_max && 2 * k <= n; ++k) push(t, n, {k, k});
          break;
        case TheoremId::T14:
          for (int k = 1; k <= cfg.k_max; ++k) {
            for (int l = 1; l <= k && k + l <= n; ++l) push(t, n, {k, l});
          }
          break;
        case TheoremId::T36:
          for (int k = 1; k <= cfg.k_max; ++k) {
            for (int l = 1; l <= cfg.k_max && k + l <= n; ++l) {
              for (int tau = 1; tau <= l; ++tau) {
                for (int c = 1; c <= 3; ++c) push(t, n, {k, l}, std::nullopt, tau, c);
              }
            }
          }
          break;
      }
    }
    if (t == TheoremId::T17) {
      for (const auto& p : cfg.extra_profiles) {
        if (p.n <= cfg.caps.search_n && !p.ordered_hypothesis_failure()) push(t, p.n, p.ks);
      }
    }
  }
  return items;
}

ReportRecord evaluate_item(const SweepItem& item, const SweepConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const Profile& p = item.profile;
  ReportRecord rec;
  rec.theorem = theorem_name(item.theorem);
  rec.profile = p.text();
  const int n = p.n;
  switch (item.theorem) {
    case TheoremId::T17: {
      const BoundResult b = bound_thm17(n, p.ks);
      rec.bound_value = b.value;
      rec.branch = branch_name(b.branch);
      rec.search_optimum = max_sum_L_initial(p).optimum;
      if (cfg.extremal && n <= cfg.caps.full_space_n && n <= cfg.caps.canonical_n) {
        try {
          const Certificate c = full_space_max(p);
          if (c.classes_complete) rec.extremal_class_count = c.extremal_classes.size();
        } catch (const CapExceeded&) {
        }
      }
      break;
    }
    case TheoremId::T16: {
      const BoundResult b = bound_thm16(n, p.ks, *p.istar);
      rec.bound_value = b.value;
      rec.branch = branch_name(b.branch);
      rec.search_optimum = max_sum_L_initial_conditional(p).optimum;
      break;
    }
    case TheoremId::T15: {
      const BoundResult b = bound_sfq15(n, p.ks[0], static_cast<int>(p.r()));
      rec.bound_value = b.value;
      rec.branch = branch_name(b.branch);
      rec.search_optimum = max_sum_L_initial(p).optimum;
      break;
    }
    case TheoremId::T12: {
      const BoundResult b = bound_hilton(n, p.ks[0], static_cast<int>(p.r()));
      rec.bound_value = b.value;
      rec.branch = branch_name(b.branch);
      SearchOptions opts;
      opts.min_sizes.assign(p.r(), 0);
      rec.search_optimum = max_sum_L_initial(p, opts).optimum;
      break;
    }
    case TheoremId::T13:
      rec.bound_value = bound_hm(n, p.ks[0]);
      rec.branch = branch_name(Branch::CoverStar);
      rec.search_optimum = max_sum_L_initial(p).optimum;
      break;
    case TheoremId::T14:
      rec.bound_value = bound_ft(n, p.ks[0], p.ks[1], false).value;
      rec.branch = branch_name(Branch::CoverStar);
      rec.search_optimum = max_sum_L_initial(p).optimum;
      break;
    case TheoremId::T36: {
      const BoundResult b = weighted_bound(n, p.ks[0], p.ks[1], item.tau, BigCount{static_cast<std::uint64_t>(item.c)});
      rec.profile += " tau=" + std::to_string(item.tau) + " c=" + std::to_string(item.c);
      rec.bound_value = b.value;
      rec.branch = branch_name(b.branch);
      rec.search_optimum =
          max_weighted_pair(n, p.ks[0], p.ks[1], BigCount{static_cast<std::uint64_t>(item.c)}, item.tau).optimum;
      break;
    }
  }
  rec.agreement = rec.bound_value == rec.search_optimum;
  if (cfg.timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    rec.elapsed_ms = static_cast<std::uint64_t>(ms.count());
  }
  return rec;
}

std::vector<ReportRecord> run_sweep(const SweepConfig& cfg) {
  const auto items = sweep_items(cfg);
  std::vector<ReportRecord> out(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  const auto count = static_cast<std::int64_t>(items.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      out[idx] = evaluate_item(items[idx], cfg);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

SweepSummary summarize(const std::vector<ReportRecord>& records) {
  SweepSummary s;
  s.checked = records.size();
  for (const auto& r : records) (r.agreement ? s.agreed : s.failed)++;
  return s;
}

std::string summary_line(const SweepSummary& s) {
  return "checked=" + std::to_string(s.checked) + " agreed=" + std::to_string(s.agreed) +
         " failed=" + std::to_string(s.failed);
}

}  // namespace cif
