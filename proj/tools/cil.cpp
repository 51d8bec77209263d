// cil: bounds, searches and sweeps for non-empty cross-intersecting families.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cif/auxgraph.hpp"
#include "cif/bounds.hpp"
#include "cif/constructions.hpp"
#include "cif/error.hpp"
#include "cif/extremal.hpp"
#include "cif/full_space.hpp"
#include "cif/report.hpp"
#include "cif/search.hpp"
#include "cif/sweep.hpp"
#include "json.hpp"

namespace {

using namespace cif;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDisagree = 3;

struct Args {
  int n = 0;
  std::string k;
  int istar = 0;  // 1-based, 0 = unset
  std::string theorem = "t17";
  std::string engine = "prefix";
  std::string extremal_engine = "full";
  int s = 0;
  std::uint64_t c = 1;
  int tau = 0;
  int l = 0;
  bool second_part = false;
  std::string format = "text";
  std::string out;
  std::string config;
  std::string family;
  bool timing = false;
};

/// Ground-set cap for search-type commands; CIL_MAX_N may only lower it.
int ground_cap() {
  int cap = kMaxSearchN;
  if (const char* env = std::getenv("CIL_MAX_N")) {
    try {
      cap = std::min(cap, std::stoi(env));
    } catch (const std::exception&) {
      throw ParseError(std::string("CIL_MAX_N is not an integer: ") + env);
    }
  }
  return cap;
}

void check_cap(int n) {
  const int cap = ground_cap();
  if (n > cap) throw CapExceeded("n=" + std::to_string(n) + " exceeds the ground-set cap " + std::to_string(cap));
}

Profile profile_of(const Args& a) {
  Profile p{a.n, parse_k_list(a.k), std::nullopt};
  if (a.istar > 0) p.istar = static_cast<std::size_t>(a.istar - 1);
  p.validate();
  return p;
}

TheoremId theorem_of(const Args& a) {
  auto t = parse_theorem(a.theorem);
  if (!t) throw ParseError("unknown theorem '" + a.theorem + "'");
  return *t;
}

void emit(const Args& a, const std::string& text) {
  if (a.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(a.out, std::ios::binary);
  if (!f) throw ParseError("cannot write " + a.out);
  f << text;
}

std::string max_line(const BigCount& first, const BigCount& second, const BigCount& value) {
  return "max{" + first.to_string() + ", " + second.to_string() + "} = " + value.to_string();
}

int cmd_bound(const Args& a) {
  const TheoremId t = theorem_of(a);
  const std::vector<int> ks = parse_k_list(a.k);
  const auto need = [&](std::size_t count) {
    if (ks.size() != count) throw std::invalid_argument(theorem_name(t) + " takes " + std::to_string(count) + " uniformities");
  };
  const auto need_uniform = [&] {
    for (int k : ks) {
      if (k != ks[0]) throw std::invalid_argument(theorem_name(t) + " takes equal uniformities");
    }
  };
  std::optional<BoundResult> br;
  BigCount single;
  std::string formula;
  bool coincide = false;
  switch (t) {
    case TheoremId::T17:
      br = bound_thm17(a.n, ks);
      break;
    case TheoremId::T16:
      if (a.istar < 1) throw std::invalid_argument("t16 needs --istar");
      br = bound_thm16(a.n, ks, static_cast<std::size_t>(a.istar - 1));
      break;
    case TheoremId::T15:
      need_uniform();
      br = bound_sfq15(a.n, ks[0], static_cast<int>(ks.size()));
      break;
    case TheoremId::T12:
      need_uniform();
      br = bound_hilton(a.n, ks[0], static_cast<int>(ks.size()));
      break;
    case TheoremId::T13:
      need(2);
      need_uniform();
      single = bound_hm(a.n, ks[0]);
      formula = "C(n,k) - C(n-k,k) + 1";
      break;
    case TheoremId::T14: {
      need(2);
      const FtBound fb = bound_ft(a.n, ks[0], ks[1], a.second_part);
      single = fb.value;
      coincide = fb.branches_coincide;
      formula = a.second_part ? "bound under |F_2| >= C(n-1,l-1)" : "C(n,k) - C(n-l,k) + 1";
      break;
    }
    case TheoremId::T36:
      need(2);
      if (a.tau < 1) throw std::invalid_argument("t36 needs --tau");
      br = weighted_bound(a.n, ks[0], ks[1], a.tau, BigCount{a.c});
      break;
  }

  std::string head = theorem_name(t) + " n=" + std::to_string(a.n) + " k=" + k_list_text(ks);
  if (t == TheoremId::T16) head += " istar=" + std::to_string(a.istar);
  if (t == TheoremId::T36) head += " tau=" + std::to_string(a.tau) + " c=" + std::to_string(a.c);

  const Format f = parse_format(a.format);
  if (f == Format::Json) {
    ordered_json j;
    j["theorem"] = theorem_name(t);
    j["profile"] = head.substr(head.find(' ') + 1);
    if (br) {
      j["value"] = br->value.to_string();
      j["branch"] = branch_name(br->branch);
      j["arguments"] = {br->first.to_string(), br->second.to_string()};
      j["optimal_s"] = br->optimal_s;
    } else {
      j["value"] = single.to_string();
      j["branch"] = nullptr;
      if (t == TheoremId::T14 && a.second_part) j["branches_coincide"] = coincide;
    }
    emit(a, j.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream os;
  os << head << "\n";
  if (br) {
    os << max_line(br->first, br->second, br->value) << "\n";
    os << "branch: " << branch_name(br->branch) << "\n";
    if (!br->optimal_s.empty()) {
      os << "optimal s:";
      for (int s : br->optimal_s) os << ' ' << s;
      os << "\n";
    }
  } else {
    os << formula << " = " << single << "\n";
    if (coincide) os << "both expressions coincide\n";
  }
  emit(a, os.str());
  return kExitOk;
}

int cmd_search(const Args& a) {
  check_cap(a.n);
  Certificate cert;
  const TheoremId t = theorem_of(a);
  if (t == TheoremId::T36) {
    const std::vector<int> ks = parse_k_list(a.k);
    if (ks.size() != 2) throw std::invalid_argument("t36 takes two uniformities k,l");
    if (a.tau < 1) throw std::invalid_argument("t36 needs --tau");
    cert = max_weighted_pair(a.n, ks[0], ks[1], BigCount{a.c}, a.tau);
  } else {
    const Profile p = profile_of(a);
    if (a.engine == "full") {
      cert = full_space_max(p);
    } else if (a.engine != "prefix") {
      throw ParseError("unknown engine '" + a.engine + "' (prefix, full)");
    } else if (p.istar) {
      cert = max_sum_L_initial_conditional(p);
    } else {
      cert = max_sum_L_initial(p);
    }
  }
  emit(a, parse_format(a.format) == Format::Json ? certificate_to_json(cert) : certificate_to_text(cert));
  return cert.bound && !cert.bound_agreement ? kExitDisagree : kExitOk;
}

int cmd_extremal(const Args& a) {
  check_cap(a.n);
  const Profile p = profile_of(a);
  ExtremalOptions opts;
  opts.theorem = theorem_of(a);
  if (a.extremal_engine == "full") {
    opts.engine = Engine::Full;
  } else if (a.extremal_engine == "prefix") {
    opts.engine = Engine::Prefix;
  } else {
    throw ParseError("unknown engine '" + a.extremal_engine + "' (prefix, full)");
  }
  const Certificate cert = enumerate_extremal(p, opts);
  emit(a, parse_format(a.format) == Format::Json ? certificate_to_json(cert) : certificate_to_text(cert));
  return cert.bound_agreement ? kExitOk : kExitDisagree;
}

int cmd_verify(const Args& a) {
  SweepConfig cfg;
  if (!a.config.empty()) {
    std::ifstream in(a.config);
    if (!in) throw ParseError("cannot read " + a.config);
    std::stringstream ss;
    ss << in.rdbuf();
    cfg = parse_sweep_config(ss.str());
  }
  cfg.caps.search_n = std::min(cfg.caps.search_n, ground_cap());
  if (a.timing) cfg.timing = true;
  if (!a.out.empty()) cfg.output_path = a.out;
  if (a.format != "text" || a.config.empty()) cfg.format = parse_format(a.format);
  if (sweep_items(cfg).empty()) throw ParseError("sweep selects no profiles");

  const auto records = run_sweep(cfg);
  const std::string body = render_records(records, cfg.format);
  const SweepSummary sum = summarize(records);
  if (cfg.output_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(cfg.output_path, std::ios::binary);
    if (!f) throw ParseError("cannot write " + cfg.output_path);
    f << body;
  }
  std::cout << summary_line(sum) << "\n";
  return sum.failed == 0 ? kExitOk : kExitDisagree;
}

int cmd_shadow(const Args& a) {
  const Family fam = parse_family(a.family);
  check_cap(fam.n());
  if (fam.empty()) throw std::invalid_argument("shadow needs a non-empty family");
  const int l = a.l > 0 ? a.l : fam.k();
  const Family d = disjointness_shadow(fam, l);
  const int n = fam.n();
  const int k = fam.k();

  // Threshold C(n-s, l) applies when |A| = C(n-s, k-s) and n >= k + l.
  std::vector<int> levels;
  for (int s = 1; s <= k && n >= k + l; ++s) {
    if (binom(n - s, k - s) == BigCount{fam.size()}) levels.push_back(s);
  }
  Mask common = ground_mask(n);
  for (Mask m : fam.members()) common &= m;

  ordered_json j;
  j["family"] = to_text(fam);
  j["l"] = l;
  j["shadow"] = to_text(d);
  j["size"] = std::to_string(d.size());
  j["checks"] = ordered_json::array();
  std::ostringstream os;
  os << "D_" << l << ": " << to_text(d) << "\n";
  os << "size: " << d.size() << "\n";
  for (int s : levels) {
    const BigCount threshold = binom(n - s, l);
    const bool star = popcount(common) >= s;
    const BigCount size{d.size()};
    const std::string verdict = size < threshold ? "violation" : size == threshold ? "equality" : "strict";
    os << "s=" << s << " threshold C(" << n - s << "," << l << ") = " << threshold << ": " << verdict
       << (star ? " (star)" : " (non-star)") << "\n";
    j["checks"].push_back({{"s", s}, {"threshold", threshold.to_string()}, {"verdict", verdict}, {"star", star}});
  }
  if (levels.empty()) os << "no threshold: needs n >= k + l and |A| = C(n-s,k-s) for some s\n";
  emit(a, parse_format(a.format) == Format::Json ? j.dump(2) + "\n" : os.str());
  return kExitOk;
}

int cmd_auxgraph(const Args& a) {
  check_cap(a.n);
  if (a.istar < 1) throw std::invalid_argument("auxgraph needs --istar");
  const std::vector<int> ks = parse_k_list(a.k);
  const AuxGraph g = build_aux_graph(a.n, ks, static_cast<std::size_t>(a.istar - 1), a.s);
  const PartClassification pc = classify_parts(g);
  const IndependentSet ind = max_independent_set(g);
  const Matching mt = max_matching(g);

  const std::size_t center = g.parts[g.istar].size();
  const std::size_t rest = g.vertex_count() - center;
  std::vector<std::string> sides;
  if (ind.size == center) sides.emplace_back("X_istar");
  if (ind.size == rest) sides.emplace_back("other parts");

  ordered_json j;
  j["profile"] = "n=" + std::to_string(a.n) + " k=" + k_list_text(ks) + " istar=" + std::to_string(a.istar) +
                 " s=" + std::to_string(a.s);
  j["part_sizes"] = ordered_json::array();
  std::ostringstream os;
  os << j["profile"].get<std::string>() << "\nparts:";
  for (std::size_t i = 0; i < g.parts.size(); ++i) {
    j["part_sizes"].push_back(std::to_string(g.parts[i].size()));
    os << (i ? " / " : " ") << g.parts[i].size();
  }
  os << "\nedges: " << g.edge_count << "\n";
  auto one_based = [](const std::vector<std::size_t>& v) {
    std::vector<std::size_t> out;
    for (auto x : v) out.push_back(x + 1);
    return out;
  };
  auto list = [](const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  os << "H1=" << list(one_based(pc.h1)) << " H2=" << list(one_based(pc.h2)) << "\n";
  j["edges"] = std::to_string(g.edge_count);
  j["h1"] = one_based(pc.h1);
  j["h2"] = one_based(pc.h2);
  j["h2_perfect_matching"] = ordered_json::array();
  for (std::size_t i : pc.h2) {
    const bool pm = induces_perfect_matching(g, i);
    os << "part " << i + 1 << ": " << (pm ? "perfect matching" : "not a perfect matching") << "\n";
    j["h2_perfect_matching"].push_back(pm);
  }
  os << "matching number: " << mt.size << "\nindependence number: " << ind.size << "\n";
  os << "attained by: " << (sides.empty() ? std::string("neither full side") : sides.front() + (sides.size() > 1 ? " and " + sides.back() : "")) << "\n";
  j["matching_number"] = std::to_string(mt.size);
  j["independence_number"] = std::to_string(ind.size);
  j["attained_by"] = sides;
  j["expansion"] = ordered_json::array();
  bool ok = true;
  for (std::size_t i = 0; i < g.parts.size(); ++i) {
    if (i == g.istar) continue;
    const auto sw = expansion_sweep(g, i);
    os << "expansion into part " << i + 1 << ": checked=" << sw.checked << " violations=" << sw.violations
       << " interior_equalities=" << sw.interior_equalities << "\n";
    j["expansion"].push_back({{"part", i + 1},
                              {"checked", std::to_string(sw.checked)},
                              {"violations", std::to_string(sw.violations)},
                              {"interior_equalities", std::to_string(sw.interior_equalities)}});
    ok = ok && sw.violations == 0;
  }
  emit(a, parse_format(a.format) == Format::Json ? j.dump(2) + "\n" : os.str());
  return ok ? kExitOk : kExitDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cil: cross-intersecting family bounds, searches and sweeps"};
  app.require_subcommand(1);
  Args a;

  auto add_profile = [&](CLI::App* sub, bool required) {
    auto* on = sub->add_option("--n", a.n, "ground set size");
    auto* ok = sub->add_option("--k", a.k, "uniformities, comma separated");
    if (required) {
      on->required();
      ok->required();
    }
    sub->add_option("--istar", a.istar, "distinguished family (1-based)");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", a.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", a.out, "write output to this path");
  };

  auto* bound = app.add_subcommand("bound", "evaluate a closed-form bound");
  add_profile(bound, true);
  bound->add_option("--theorem", a.theorem, "t12, t13, t14, t15, t16, t17 or t36");
  bound->add_option("--c", a.c, "weight of the second family (t36)");
  bound->add_option("--tau", a.tau, "window parameter (t36)");
  bound->add_flag("--second-part", a.second_part, "t14 bound under |F_2| >= C(n-1,l-1)");
  add_output(bound);

  auto* search = app.add_subcommand("search", "maximize the size sum");
  add_profile(search, true);
  search->add_option("--engine", a.engine, "prefix or full");
  search->add_option("--theorem", a.theorem, "t36 switches to the weighted pair search");
  search->add_option("--c", a.c, "weight (t36)");
  search->add_option("--tau", a.tau, "window parameter (t36)");
  add_output(search);

  auto* extremal = app.add_subcommand("extremal", "enumerate optima and check the equality cases");
  add_profile(extremal, true);
  extremal->add_option("--engine", a.extremal_engine, "prefix or full");
  extremal->add_option("--theorem", a.theorem, "t17 or t16");
  add_output(extremal);

  auto* verify = app.add_subcommand("verify", "run a bound-versus-search sweep");
  verify->add_option("--config", a.config, "sweep config JSON");
  verify->add_flag("--timing", a.timing, "record elapsed_ms");
  add_output(verify);

  auto* shadow = app.add_subcommand("shadow", "disjointness shadow of a family");
  shadow->add_option("family", a.family, "family literal, e.g. \"n=4 k=2 {1.2}\"")->required();
  shadow->add_option("--l", a.l, "uniformity of the shadow (default k)");
  add_output(shadow);

  auto* aux = app.add_subcommand("auxgraph", "auxiliary graph statistics");
  add_profile(aux, true);
  aux->add_option("--s", a.s, "layer parameter, 1 <= s <= kbar - 1")->required();
  add_output(aux);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bound) return cmd_bound(a);
    if (*search) return cmd_search(a);
    if (*extremal) return cmd_extremal(a);
    if (*verify) return cmd_verify(a);
    if (*shadow) return cmd_shadow(a);
    if (*aux) return cmd_auxgraph(a);
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
