#include <omp.h>

#include "cif/error.hpp"
#include "cif/report.hpp"
#include "cif/sweep.hpp"
#include "doctest.h"

using namespace cif;

namespace {

std::vector<ReportRecord> sample() {
  ReportRecord a{"n=10 k=5,3,2", "t17", BigCount{205}, "first", BigCount{205}, true, std::nullopt, std::nullopt};
  ReportRecord b{"n=6 k=3,3", "t36 tau=2 c=3", BigCount{30}, "second", BigCount{30}, true, 4, 12};
  ReportRecord c{"n=4 k=2,2", "t13", BigCount::parse("340282366920938463463374607431768211455"), "cover,star",
                 BigCount{0}, false, std::nullopt, 0};
  return {a, b, c};
}

}  // namespace

TEST_CASE("json round trip") {
  const auto recs = sample();
  const auto text = records_to_json(recs);
  CHECK(records_from_json(text) == recs);
  CHECK(text.find("\"version\": 1") != std::string::npos);
  CHECK(text.find("\"extremal_class_count\": null") != std::string::npos);
  CHECK(text.find("\"bound_value\": \"205\"") != std::string::npos);
  CHECK(records_to_json(records_from_json(text)) == text);
}

TEST_CASE("json rejects bad input") {
  CHECK_THROWS_AS(records_from_json("not json"), ParseError);
  CHECK_THROWS_AS(records_from_json(R"({"version": 2, "records": []})"), ParseError);
  CHECK_THROWS_AS(records_from_json(R"({"version": 1})"), ParseError);
  auto recs = sample();
  recs[0].agreement = false;
  CHECK_THROWS_AS(records_from_json(records_to_json(recs)), ParseError);
  recs = sample();
  recs[2].agreement = true;
  CHECK_THROWS_AS(records_from_json(records_to_json(recs)), ParseError);
  CHECK(records_from_json(R"({"version": 1, "records": []})").empty());
}

TEST_CASE("csv and text") {
  const auto csv = records_to_csv(sample());
  CHECK(csv.rfind("profile,theorem,bound_value,branch,search_optimum,agreement,extremal_class_count,elapsed_ms\n", 0) ==
        0);
  CHECK(csv.find("\"cover,star\"") != std::string::npos);
  CHECK(csv.find("n=10 k=5,3,2") != std::string::npos);
  const auto text = records_to_text(sample());
  CHECK(text.find("205") != std::string::npos);
  CHECK(render_records(sample(), Format::Csv) == csv);
  CHECK(parse_format("json") == Format::Json);
  CHECK_THROWS_AS(parse_format("xml"), ParseError);
}

TEST_CASE("config parsing") {
  const auto cfg = parse_sweep_config(R"({
    "n_range": [4, 7], "r_range": [2, 2], "k_max": 3,
    "theorems": ["t17", "T16"], "caps": {"search_n": 12},
    "output": {"path": "out.json", "format": "json"},
    "extra_profiles": [{"n": 9, "k": [4, 3, 2]}], "extremal": true, "timing": true})");
  CHECK(cfg.n_min == 4);
  CHECK(cfg.n_max == 7);
  CHECK(cfg.r_max == 2);
  CHECK(cfg.k_max == 3);
  CHECK(cfg.theorems == std::vector<TheoremId>{TheoremId::T17, TheoremId::T16});
  CHECK(cfg.caps.search_n == 12);
  CHECK(cfg.output_path == "out.json");
  CHECK(cfg.format == Format::Json);
  CHECK(cfg.extra_profiles.size() == 1);
  CHECK(cfg.extra_profiles[0].ks == std::vector<int>{4, 3, 2});
  CHECK(cfg.extremal);
  CHECK(cfg.timing);

  const auto def = parse_sweep_config("{}");
  CHECK(def.n_max == 10);
  CHECK(def.extra_profiles.size() == 1);

  CHECK_THROWS_AS(parse_sweep_config(R"({"n_range": [7, 4]})"), ParseError);
  CHECK_THROWS_AS(parse_sweep_config(R"({"r_range": [1, 3]})"), ParseError);
  CHECK_THROWS_AS(parse_sweep_config(R"({"theorems": []})"), ParseError);
  CHECK_THROWS_AS(parse_sweep_config(R"({"theorems": ["t99"]})"), ParseError);
  CHECK_THROWS_AS(parse_sweep_config(R"({"caps": {"search_n": 40}})"), ParseError);
  CHECK_THROWS_AS(parse_sweep_config(R"({"extra_profiles": [{"n": 3, "k": [5]}]})"), ParseError);
  CHECK_THROWS_AS(parse_sweep_config("[1, 2]"), ParseError);
}

TEST_CASE("sweep items respect hypotheses") {
  SweepConfig cfg;
  cfg.theorems = {TheoremId::T17, TheoremId::T16, TheoremId::T14, TheoremId::T36};
  for (const auto& it : sweep_items(cfg)) {
    if (it.theorem == TheoremId::T17) CHECK_FALSE(it.profile.ordered_hypothesis_failure());
    if (it.theorem == TheoremId::T16) {
      REQUIRE(it.profile.istar);
      CHECK_FALSE(it.profile.conditional_hypothesis_failure(*it.profile.istar));
    }
    if (it.theorem == TheoremId::T14) CHECK(it.profile.ks[0] >= it.profile.ks[1]);
    if (it.theorem == TheoremId::T36) {
      CHECK(it.tau >= 1);
      CHECK(it.tau <= it.profile.ks[1]);
    }
  }
}

TEST_CASE("sweep agrees and is deterministic") {
  SweepConfig cfg;
  cfg.n_max = 8;
  cfg.theorems = {TheoremId::T17, TheoremId::T16, TheoremId::T12, TheoremId::T13, TheoremId::T14, TheoremId::T15,
                  TheoremId::T36};
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto serial = run_sweep(cfg);
  omp_set_num_threads(std::max(saved, 4));
  const auto parallel = run_sweep(cfg);
  omp_set_num_threads(saved);
  CHECK(serial == parallel);
  const auto s = summarize(serial);
  CHECK(s.checked == serial.size());
  CHECK(s.failed == 0);
  CHECK(summary_line(s) == "checked=" + std::to_string(s.checked) + " agreed=" + std::to_string(s.checked) + " failed=0");
  for (const auto& r : serial) CHECK_FALSE(r.elapsed_ms);
}
