#include "cif/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "cif/bounds.hpp"
#include "cif/canonical.hpp"
#include "cif/error.hpp"
#include "cif/kernels.hpp"

namespace cif {

std::string theorem_name(TheoremId t) {
  switch (t) {
    case TheoremId::T12: return "t12";
    case TheoremId::T13: return "t13";
    case TheoremId::T14: return "t14";
    case TheoremId::T15: return "t15";
    case TheoremId::T16: return "t16";
    case TheoremId::T17: return "t17";
    case TheoremId::T36: return "t36";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (TheoremId t : {TheoremId::T12, TheoremId::T13, TheoremId::T14, TheoremId::T15, TheoremId::T16,
                      TheoremId::T17, TheoremId::T36}) {
    if (theorem_name(t) == s) return t;
  }
  return std::nullopt;
}

Family star_P(int n, int l, Mask S) {
  validate_kset(KSet{S, n});
  if (popcount(S) > l) throw std::invalid_argument("star_P: |S| exceeds l");
  if (l > n) throw std::invalid_argument("star_P: l exceeds n");
  std::vector<Mask> out;
  for (Mask m : all_ksets(n, l)) {
    if ((m & S) == S) out.push_back(m);
  }
  return Family(n, l, std::move(out));
}

Family cover_R(int n, int k, Mask S) {
  validate_kset(KSet{S, n});
  if (S == 0) throw std::invalid_argument("cover_R: S must be non-empty");
  if (k < 0 || k > n) throw std::invalid_argument("cover_R: k outside [0, n]");
  std::vector<Mask> out;
  for (Mask m : all_ksets(n, k)) {
    if (meets(m, S)) out.push_back(m);
  }
  return Family(n, k, std::move(out));
}

Family disjointness_shadow(const Family& a, int l) {
  if (l < 1 || l > a.n()) throw std::invalid_argument("disjointness_shadow: l outside [1, n]");
  if (a.empty()) return Family(a.n(), l, {});
  const auto candidates = all_ksets(a.n(), l);
  return Family(a.n(), l, kernels::shadow_parallel(a.members(), candidates));
}

Family max_partner(const Family& a, int l) {
  if (a.empty()) throw std::invalid_argument("max_partner: family is empty, partner unconstrained");
  const Family shadow = disjointness_shadow(a, l);
  std::vector<Mask> out;
  for (Mask m : all_ksets(a.n(), l)) {
    if (!shadow.contains(m)) out.push_back(m);
  }
  return Family(a.n(), l, std::move(out));
}

BigCount size_sum(std::span<const Family> fams) {
  BigCount s;
  for (const Family& f : fams) s += f.size();
  return s;
}

bool pairwise_cross_intersecting(std::span<const Family> fams) {
  for (std::size_t i = 0; i < fams.size(); ++i) {
    for (std::size_t j = i + 1; j < fams.size(); ++j) {
      if (!is_cross_intersecting(fams[i], fams[j])) return false;
    }
  }
  return true;
}

bool is_maximal(std::span<const Family> fams) {
  for (std::size_t i = 0; i < fams.size(); ++i) {
    for (Mask cand : all_ksets(fams[i].n(), fams[i].k())) {
      if (fams[i].contains(cand)) continue;
      bool addable = true;
      for (std::size_t j = 0; j < fams.size() && addable; ++j) {
        if (j == i) continue;
        for (Mask m : fams[j].members()) {
          if (!meets(m, cand)) {
            addable = false;
            break;
          }
        }
      }
      if (addable) return false;
    }
  }
  return true;
}

std::optional<Family> nonstar_maximum_intersecting(int n, int k) {
  if (k < 2 || n > 2 * k || n <= k) return std::nullopt;
  const Family star = star_P(n, k, mask_of(n, {1}));
  std::vector<Mask> ms(star.members().begin(), star.members().end());
  const Mask last = ms.back();
  // At n = 2k the complement of the removed set is the only k-set it fails
  // to meet; below 2k any two k-sets meet.
  const Mask swap_in = (n == 2 * k) ? (ground_mask(n) & ~last) : (prefix_mask(k + 1) & ~Mask{1});
  ms.back() = swap_in;
  Family f(n, k, std::move(ms));
  Mask common = ground_mask(n);
  for (Mask m : f.members()) common &= m;
  if (common != 0 || !is_intersecting(f)) return std::nullopt;
  return f;
}

namespace {

/// all k-sets except complements of `other`; requires n - other.k() == k.
Family complement_partner(const Family& other, int k) {
  const Family comp = complement_family(other);
  std::vector<Mask> out;
  for (Mask m : all_ksets(other.n(), k)) {
    if (!comp.contains(m)) out.push_back(m);
  }
  return Family(other.n(), k, std::move(out));
}

std::vector<std::uint64_t> representative_sizes(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out{lo, lo + (hi - lo) / 2, hi};
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Family> cover_star_tuple(int n, std::span<const int> ks, std::size_t center, int s) {
  std::vector<Family> fams;
  const Mask S = prefix_mask(s);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    fams.push_back(i == center ? cover_R(n, ks[i], S) : star_P(n, ks[i], S));
  }
  return fams;
}

std::vector<Family> all_stars_tuple(int n, std::span<const int> ks) {
  std::vector<Family> fams;
  for (int k : ks) fams.push_back(star_P(n, k, prefix_mask(1)));
  return fams;
}

std::vector<ExtremalTuple> finish(std::vector<ExtremalTuple> cands, const BigCount& target, int n) {
  std::erase_if(cands, [&](const ExtremalTuple& c) { return size_sum(c.fams) != target; });
  // Canonical keys cost n! relabelings per tuple; fall back to plain
  // equality when that is out of budget.
  std::uint64_t work = 0;
  for (const auto& c : cands) work += size_sum(c.fams).to_u64();
  for (int i = 2; i <= n && work <= 40'000'000; ++i) work *= static_cast<std::uint64_t>(i);
  const bool canonical = cands.size() > 1 && n <= kMaxCanonicalN && work <= 40'000'000;
  std::vector<ExtremalTuple> out;
  std::vector<CanonicalKey> seen_keys;
  for (auto& c : cands) {
    bool duplicate = false;
    if (canonical) {
      CanonicalKey key = canonical_form(c.fams);
      duplicate = std::find(seen_keys.begin(), seen_keys.end(), key) != seen_keys.end();
      if (!duplicate) seen_keys.push_back(std::move(key));
    } else {
      for (const auto& o : out) duplicate = duplicate || o.fams == c.fams;
    }
    if (!duplicate) out.push_back(std::move(c));
  }
  return out;
}

/// Equality case where one family sits opposite r-1 families of the common
/// uniformity h with n = h + k_center.
std::vector<ExtremalTuple> tight_case(int n, std::span<const int> ks, std::size_t center,
                                      std::uint64_t max_other, const std::string& tag) {
  const std::size_t r = ks.size();
  const int kc = ks[center];
  const int h = ks[center == 0 ? 1 : 0];
  std::vector<ExtremalTuple> out;
  if (r == 2) {
    const std::size_t other = 1 - center;
    for (std::uint64_t m : representative_sizes(1, max_other)) {
      Family f_other = lex_initial(n, h, m);
      std::vector<Family> fams(2);
      fams[center] = complement_partner(f_other, kc);
      fams[other] = std::move(f_other);
      out.push_back({std::move(fams), tag + "-complement-m" + std::to_string(m)});
    }
    return out;
  }
  if (n > 2 * h) {
    out.push_back({all_stars_tuple(n, ks), tag + "-all-stars"});
    return out;
  }
  std::vector<std::pair<Family, std::string>> inter{{star_P(n, h, prefix_mask(1)), "star"}};
  if (auto ns = nonstar_maximum_intersecting(n, h)) inter.emplace_back(std::move(*ns), "nonstar");
  for (auto& [f, name] : inter) {
    std::vector<Family> fams;
    for (std::size_t i = 0; i < r; ++i) fams.push_back(i == center ? complement_partner(f, kc) : f);
    out.push_back({std::move(fams), tag + "-intersecting-" + name});
  }
  return out;
}

}  // namespace

std::vector<ExtremalTuple> extremal_candidates(const Profile& p, TheoremId theorem) {
  p.validate();
  const int n = p.n;
  const auto& ks = p.ks;
  const std::size_t r = p.r();

  if (theorem == TheoremId::T17) {
    if (auto f = p.ordered_hypothesis_failure()) throw HypothesisError("hypothesis violated: " + *f);
    const BigCount target = bound_thm17(n, ks).value;
    const int k1 = ks[0];
    const int kr = ks[r - 1];
    std::vector<ExtremalTuple> cands;
    if (n > k1 + kr) {
      cands.push_back({all_stars_tuple(n, ks), "t17-all-stars"});
      for (std::size_t j = 0; j < r; ++j) {
        if (ks[j] == k1) {
          cands.push_back({cover_star_tuple(n, ks, j, kr), "t17-cover-star-j" + std::to_string(j + 1)});
        }
      }
    } else if (r == 2) {
      cands = tight_case(n, ks, 0, binom(n, ks[1]).to_u64() - 1, "t17");
    } else if (k1 > ks[1]) {
      cands.push_back({all_stars_tuple(n, ks), "t17-all-stars"});
    } else {
      cands = tight_case(n, ks, 0, 0, "t17");
    }
    return finish(std::move(cands), target, n);
  }

  if (theorem == TheoremId::T16) {
    if (!p.istar) throw std::invalid_argument("t16 candidates need istar");
    const std::size_t is = *p.istar;
    if (auto f = p.conditional_hypothesis_failure(is)) throw HypothesisError("hypothesis violated: " + *f);
    const BigCount target = bound_thm16(n, ks, is).value;
    const int kb = p.kbar(is);
    std::vector<ExtremalTuple> cands;
    if (n > kb + ks[is]) {
      cands.push_back({cover_star_tuple(n, ks, is, 1), "t16-cover-star-s1"});
      cands.push_back({cover_star_tuple(n, ks, is, kb), "t16-cover-star-s" + std::to_string(kb)});
    } else {
      cands = tight_case(n, ks, is, binom(n - 1, kb - 1).to_u64(), "t16");
    }
    return finish(std::move(cands), target, n);
  }

  throw std::invalid_argument("no equality characterization for theorem " + theorem_name(theorem));
}

}  // namespace cif
