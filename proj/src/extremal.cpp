#include "cif/extremal.hpp"

#include <algorithm>
#include <set>

#include "cif/bounds.hpp"
#include "cif/canonical.hpp"
#include "cif/error.hpp"

namespace cif {

std::string engine_name(Engine e) { return e == Engine::Full ? "full" : "prefix"; }

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::Classes:
      return "classes";
    case Shape::ComplementPair:
      return "complement-pair";
    case Shape::CommonIntersecting:
      return "common-intersecting";
  }
  return "?";
}

Family complement_partner_of(const Family& f, int k) {
  const Mask all = ground_mask(f.n());
  std::vector<Mask> out;
  for (Mask a : all_ksets(f.n(), k)) {
    if (!f.contains(all & ~a)) out.push_back(a);
  }
  return Family(f.n(), k, std::move(out));
}

ExtremalCase classify_extremal(const Profile& p, TheoremId theorem) {
  p.validate();
  const int n = p.n;
  const auto& ks = p.ks;
  const std::size_t r = p.r();
  ExtremalCase c;
  if (theorem == TheoremId::T17) {
    if (auto why = p.ordered_hypothesis_failure()) throw HypothesisError("hypothesis violated: " + *why);
    c.bound = bound_thm17(n, ks).value;
    c.center = 0;
    c.h = ks[r - 1];
    if (n > ks[0] + ks[r - 1]) {
      c.shape = Shape::Classes;
    } else if (r == 2) {
      c.shape = Shape::ComplementPair;
      c.lo = 1;
      c.hi = binom(n, ks[1]).to_u64() - 1;
    } else if (ks[0] > ks[1]) {
      c.shape = Shape::Classes;
    } else {
      c.shape = Shape::CommonIntersecting;
    }
    return c;
  }
  if (theorem == TheoremId::T16) {
    if (!p.istar) throw std::invalid_argument("t16 needs istar");
    const std::size_t is = *p.istar;
    if (is >= r) throw std::invalid_argument("istar out of range");
    if (auto why = p.conditional_hypothesis_failure(is)) throw HypothesisError("hypothesis violated: " + *why);
    c.bound = bound_thm16(n, ks, is).value;
    c.center = is;
    c.h = p.kbar(is);
    if (n > c.h + ks[is]) {
      c.shape = Shape::Classes;
    } else if (r == 2) {
      c.shape = Shape::ComplementPair;
      c.lo = 1;
      c.hi = binom(n - 1, c.h - 1).to_u64();
    } else if (n > 2 * c.h) {
      c.shape = Shape::Classes;
    } else {
      c.shape = Shape::CommonIntersecting;
    }
    return c;
  }
  throw std::invalid_argument("no equality characterization for theorem " + theorem_name(theorem));
}

namespace {

bool complement_pair_ok(std::span<const Family> fams, const ExtremalCase& c) {
  const Family& center = fams[c.center];
  const Family& other = fams[1 - c.center];
  return other.size() >= c.lo && other.size() <= c.hi && center == complement_partner_of(other, center.k());
}

bool common_intersecting_ok(std::span<const Family> fams, const ExtremalCase& c) {
  const Family* common = nullptr;
  for (std::size_t i = 0; i < fams.size(); ++i) {
    if (i == c.center) continue;
    if (common == nullptr) {
      common = &fams[i];
    } else if (!(fams[i] == *common)) {
      return false;
    }
  }
  const int n = common->n();
  return is_intersecting(*common) && BigCount{common->size()} == binom(n - 1, c.h - 1) &&
         fams[c.center] == complement_partner_of(*common, fams[c.center].k());
}

/// Number of tuples the ComplementPair characterization admits.
BigCount complement_pair_count(const Profile& p, const ExtremalCase& c) {
  const auto pool = static_cast<int>(binom(p.n, c.h).to_u64());
  BigCount total;
  for (std::uint64_t m = c.lo; m <= c.hi; ++m) total += binom(pool, static_cast<int>(m));
  return total;
}

std::set<std::vector<std::uint64_t>> candidate_sizes(const std::vector<ExtremalTuple>& cands) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& t : cands) {
    std::vector<std::uint64_t> v;
    for (const auto& f : t.fams) v.push_back(f.size());
    out.insert(std::move(v));
  }
  return out;
}

Certificate run_full(const Profile& p, const ExtremalOptions& opts, const ExtremalCase& c) {
  FullSpaceOptions fo = opts.full;
  if (opts.theorem == TheoremId::T16) {
    fo.min_sizes.assign(p.r(), 1);
    fo.min_sizes[c.center] = binom(p.n - 1, p.ks[c.center] - 1).to_u64();
  }
  Certificate cert = full_space_max(p, fo);
  cert.engine = "full";
  cert.bound = c.bound;
  cert.bound_theorem = theorem_name(opts.theorem);
  bool ok = cert.optimum == c.bound;

  if (c.shape == Shape::Classes) {
    if (!cert.classes_complete || p.n > kMaxCanonicalN) {
      cert.notes.push_back("class comparison unavailable");
      ok = false;
    } else {
      std::set<CanonicalKey> expected;
      for (const auto& t : extremal_candidates(p, opts.theorem)) expected.insert(canonical_form(t.fams));
      const std::set<CanonicalKey> got(cert.extremal_classes.begin(), cert.extremal_classes.end());
      const bool same = expected == got;
      cert.notes.push_back(std::string("classes match candidates: ") + (same ? "yes" : "no"));
      ok = ok && same;
    }
    cert.bound_agreement = ok;
    return cert;
  }

  // Structural checks on every optimum, streamed a second time so nothing
  // is capped.
  std::uint64_t failures = 0;
  for_each_full_space_optimum(
      p, cert.optimum,
      [&](std::span<const Family> fams) {
        const bool good = c.shape == Shape::ComplementPair ? complement_pair_ok(fams, c) : common_intersecting_ok(fams, c);
        if (!good) ++failures;
      },
      fo);
  cert.notes.push_back("structural check failures: " + std::to_string(failures));
  ok = ok && failures == 0;
  if (c.shape == Shape::ComplementPair) {
    const BigCount expected = complement_pair_count(p, c);
    const bool all = expected == BigCount{cert.optima_count};
    cert.notes.push_back("optima " + std::to_string(cert.optima_count) + " of " + expected.to_string() +
                         " admitted tuples");
    ok = ok && all;
  } else {
    cert.notes.push_back("intersecting families are not classified; classes reported without completeness claim");
  }
  cert.bound_agreement = ok;
  return cert;
}

Certificate run_prefix(const Profile& p, const ExtremalOptions& opts, const ExtremalCase& c) {
  Certificate cert = opts.theorem == TheoremId::T16 ? max_sum_L_initial_conditional(p) : max_sum_L_initial(p);
  cert.bound = c.bound;
  cert.bound_theorem = theorem_name(opts.theorem);
  std::set<std::vector<std::uint64_t>> expected;
  const std::uint64_t whole = binom(p.n, p.ks[c.center]).to_u64();
  if (c.shape == Shape::Classes) {
    expected = candidate_sizes(extremal_candidates(p, opts.theorem));
  } else if (c.shape == Shape::ComplementPair) {
    for (std::uint64_t m = c.lo; m <= c.hi; ++m) {
      std::vector<std::uint64_t> v(2);
      v[c.center] = whole - m;
      v[1 - c.center] = m;
      expected.insert(v);
    }
  } else {
    const std::uint64_t star = binom(p.n - 1, c.h - 1).to_u64();
    std::vector<std::uint64_t> v(p.r(), star);
    v[c.center] = whole - star;
    expected.insert(v);
  }
  const std::set<std::vector<std::uint64_t>> got(cert.optimal_size_vectors.begin(), cert.optimal_size_vectors.end());
  const bool same = expected == got;
  cert.notes.push_back(std::string("size vectors match characterization: ") + (same ? "yes" : "no"));
  cert.bound_agreement = cert.optimum == c.bound && same;
  return cert;
}

}  // namespace

Certificate enumerate_extremal(const Profile& p, const ExtremalOptions& opts) {
  const ExtremalCase c = classify_extremal(p, opts.theorem);
  Certificate cert = opts.engine == Engine::Full ? run_full(p, opts, c) : run_prefix(p, opts, c);
  cert.notes.insert(cert.notes.begin(), "characterization: " + shape_name(c.shape));
  return cert;
}

}  // namespace cif
