#include "cif/full_space.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <set>

#include "cif/bounds.hpp"
#include "cif/canonical.hpp"
#include "cif/constructions.hpp"
#include "cif/error.hpp"

namespace cif {

namespace {

using Word = std::uint64_t;

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<std::uint64_t> lower_bounds(const Profile& p, const FullSpaceOptions& opts) {
  std::vector<std::uint64_t> lo(p.r(), 1);
  if (!opts.min_sizes.empty()) {
    if (opts.min_sizes.size() != p.r()) throw std::invalid_argument("min_sizes must have one entry per family");
    for (std::size_t i = 0; i < p.r(); ++i) lo[i] = std::max<std::uint64_t>(1, opts.min_sizes[i]);
  }
  return lo;
}

/// Shared read-only tables for one profile.
struct Model {
  int n = 0;
  std::size_t r = 0;
  std::vector<std::vector<Mask>> univ;
  std::size_t top = 0;
  std::vector<std::size_t> levels;  // enumerated families, outermost first
  std::vector<std::size_t> off;     // word offset of each family in a state
  std::vector<std::size_t> words;
  std::size_t total_words = 0;
  std::vector<std::size_t> row_base;  // first meet row of each family
  std::vector<Word> meet;             // one state-sized row per enumerated set
  std::vector<Word> full;             // initial state: everything alive
  std::vector<std::uint64_t> lo;
  std::size_t max_depth = 0;

  Model(const Profile& p, const std::vector<std::uint64_t>& lower) : n(p.n), r(p.r()), lo(lower) {
    for (int k : p.ks) univ.push_back(all_ksets(n, k));
    for (std::size_t i = 1; i < r; ++i) {
      if (univ[i].size() > univ[top].size()) top = i;
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (i != top) levels.push_back(i);
    }
    std::stable_sort(levels.begin(), levels.end(),
                     [&](std::size_t a, std::size_t b) { return univ[a].size() < univ[b].size(); });
    off.resize(r);
    words.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
      off[i] = total_words;
      words[i] = (univ[i].size() + 63) / 64;
      total_words += words[i];
    }
    full.assign(total_words, 0);
    for (std::size_t i = 0; i < r; ++i) set_all(full.data(), i);

    row_base.assign(r, 0);
    std::size_t rows = 0;
    for (std::size_t f : levels) {
      row_base[f] = rows;
      rows += univ[f].size();
      max_depth += univ[f].size();
    }
    meet.assign(rows * total_words, 0);
    for (std::size_t f : levels) {
      for (std::size_t x = 0; x < univ[f].size(); ++x) {
        Word* row = meet.data() + (row_base[f] + x) * total_words;
        for (std::size_t g = 0; g < r; ++g) {
          if (g == f) {
            set_all(row, g);
            continue;
          }
          for (std::size_t y = 0; y < univ[g].size(); ++y) {
            if (meets(univ[f][x], univ[g][y])) row[off[g] + y / 64] |= Word{1} << (y % 64);
          }
        }
      }
    }
  }

  void set_all(Word* state, std::size_t g) const {
    const std::size_t count = univ[g].size();
    for (std::size_t w = 0; w < words[g]; ++w) {
      const std::size_t bits = std::min<std::size_t>(64, count - w * 64);
      state[off[g] + w] = bits == 64 ? ~Word{0} : ((Word{1} << bits) - 1);
    }
  }

  [[nodiscard]] std::uint64_t count(const Word* state, std::size_t g) const {
    std::uint64_t c = 0;
    for (std::size_t w = 0; w < words[g]; ++w) c += static_cast<std::uint64_t>(std::popcount(state[off[g] + w]));
    return c;
  }

  [[nodiscard]] bool alive(const Word* state, std::size_t g, std::size_t x) const {
    return (state[off[g] + x / 64] >> (x % 64)) & 1U;
  }
};

enum class Mode { Value, Collect };

/// Per-thread search state.
class Walker {
 public:
  Walker(const Model& m, Mode mode) : m_(m), mode_(mode), buf_((m.max_depth + 1) * m.total_words), chosen_(m.r) {
    std::copy(m.full.begin(), m.full.end(), buf_.begin());
  }

  std::atomic<std::uint64_t>* best = nullptr;  // Value mode
  std::uint64_t target = 0;                    // Collect mode
  std::function<void(const std::vector<std::vector<std::uint32_t>>&, const Word*)> on_optimum;

  /// Children of the root restricted to first element x of the outermost level.
  void run_first(std::size_t x) {
    const std::size_t f = m_.levels[0];
    if (!m_.alive(state(0), f, x)) return;
    if (extend(0, x, 0, 0)) {
      chosen_[f].push_back(static_cast<std::uint32_t>(x));
      node(0, x + 1, 1, 0, 1);
      chosen_[f].pop_back();
    }
  }

  void run_all() { node(0, 0, 0, 0, 0); }

 private:
  Word* state(std::size_t d) { return buf_.data() + d * m_.total_words; }

  /// Writes state d+1 = state d AND meet row of x in family levels[level];
  /// false when the child cannot reach the current goal.
  bool extend(std::size_t level, std::size_t x, std::uint64_t closed, std::size_t d) {
    const std::size_t f = m_.levels[level];
    const Word* src = state(d);
    Word* dst = state(d + 1);
    const Word* row = m_.meet.data() + (m_.row_base[f] + x) * m_.total_words;
    for (std::size_t w = 0; w < m_.total_words; ++w) dst[w] = src[w] & row[w];
    std::uint64_t ub = closed;
    for (std::size_t q = level; q < m_.levels.size(); ++q) {
      const std::size_t g = m_.levels[q];
      const std::uint64_t c = m_.count(dst, g);
      if (c < m_.lo[g]) return false;
      ub += c;
    }
    const std::uint64_t c = m_.count(dst, m_.top);
    if (c < m_.lo[m_.top]) return false;
    ub += c;
    if (mode_ == Mode::Value) return ub > best->load(std::memory_order_relaxed);
    return ub >= target;
  }

  void node(std::size_t level, std::size_t next_x, std::uint64_t count, std::uint64_t closed, std::size_t d) {
    const std::size_t f = m_.levels[level];
    if (count >= m_.lo[f]) close(level, closed + count, d);
    for (std::size_t x = next_x; x < m_.univ[f].size(); ++x) {
      if (!m_.alive(state(d), f, x)) continue;
      if (!extend(level, x, closed, d)) continue;
      chosen_[f].push_back(static_cast<std::uint32_t>(x));
      node(level, x + 1, count + 1, closed, d + 1);
      chosen_[f].pop_back();
    }
  }

  void close(std::size_t level, std::uint64_t closed, std::size_t d) {
    if (level + 1 < m_.levels.size()) {
      node(level + 1, 0, 0, closed, d);
      return;
    }
    const std::uint64_t top_count = m_.count(state(d), m_.top);
    if (top_count < m_.lo[m_.top]) return;
    const std::uint64_t value = closed + top_count;
    if (mode_ == Mode::Value) {
      std::uint64_t cur = best->load(std::memory_order_relaxed);
      while (value > cur && !best->compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
      }
    } else if (value == target) {
      on_optimum(chosen_, state(d));
    }
  }

  const Model& m_;
  Mode mode_;
  std::vector<Word> buf_;
  std::vector<std::vector<std::uint32_t>> chosen_;
};

BigCount optimum_impl(const Profile& p, const FullSpaceOptions& opts, bool parallel) {
  check_full_space_caps(p);
  const Model m(p, lower_bounds(p, opts));
  std::atomic<std::uint64_t> best{0};
  const auto first = static_cast<std::int64_t>(m.univ[m.levels[0]].size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::int64_t x = 0; x < first; ++x) {
    Walker w(m, Mode::Value);
    w.best = &best;
    w.run_first(static_cast<std::size_t>(x));
  }
  if (best.load() == 0) throw HypothesisError("hypothesis violated: no feasible non-empty tuple for " + p.text());
  return best.load();
}

}  // namespace

void check_full_space_caps(const Profile& p) {
  p.validate();
  if (p.r() == 2) {
    const BigCount smaller = std::min(binom(p.n, p.ks[0]), binom(p.n, p.ks[1]));
    if (smaller > BigCount{20} || p.n > kMaxSearchN) {
      throw CapExceeded("full-space search: r = 2 needs min C(n, k_i) <= 20, got " + smaller.to_string());
    }
    return;
  }
  if (p.n > 5) throw CapExceeded("full-space search: r >= 3 needs n <= 5, got n=" + std::to_string(p.n));
}

BigCount full_space_optimum(const Profile& p, const FullSpaceOptions& opts) { return optimum_impl(p, opts, true); }

BigCount full_space_optimum_serial(const Profile& p, const FullSpaceOptions& opts) {
  return optimum_impl(p, opts, false);
}

BigCount full_space_optimum_literal(const Profile& p) {
  check_full_space_caps(p);
  const Model m(p, std::vector<std::uint64_t>(p.r(), 1));
  std::uint64_t best = 0;
  if (p.r() == 2) {
    const std::size_t b = m.levels[0];
    const auto& ub = m.univ[b];
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << ub.size()); ++sub) {
      std::vector<Mask> members;
      for (std::size_t y = 0; y < ub.size(); ++y) {
        if ((sub >> y) & 1U) members.push_back(ub[y]);
      }
      const Family fb(p.n, p.ks[b], members);
      const Family fa = max_partner(fb, p.ks[m.top]);
      if (!fa.empty()) best = std::max<std::uint64_t>(best, fa.size() + fb.size());
    }
  } else {
    std::vector<std::vector<Mask>> picked(m.levels.size());
    std::function<void(std::size_t)> rec = [&](std::size_t level) {
      if (level == m.levels.size()) {
        for (std::size_t a = 0; a < picked.size(); ++a) {
          for (std::size_t b = a + 1; b < picked.size(); ++b) {
            for (Mask x : picked[a]) {
              for (Mask y : picked[b]) {
                if (!meets(x, y)) return;
              }
            }
          }
        }
        std::uint64_t total = 0;
        for (const auto& v : picked) total += v.size();
        std::uint64_t top = 0;
        for (Mask t : m.univ[m.top]) {
          bool ok = true;
          for (const auto& v : picked) {
            for (Mask x : v) ok = ok && meets(t, x);
          }
          top += ok ? 1 : 0;
        }
        if (top > 0) best = std::max(best, total + top);
        return;
      }
      const auto& u = m.univ[m.levels[level]];
      for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << u.size()); ++sub) {
        picked[level].clear();
        for (std::size_t y = 0; y < u.size(); ++y) {
          if ((sub >> y) & 1U) picked[level].push_back(u[y]);
        }
        rec(level + 1);
      }
    };
    rec(0);
  }
  if (best == 0) throw HypothesisError("hypothesis violated: no feasible non-empty tuple for " + p.text());
  return best;
}

std::uint64_t for_each_full_space_optimum(const Profile& p, const BigCount& target, const OptimumVisitor& visit,
                                          const FullSpaceOptions& opts) {
  check_full_space_caps(p);
  const Model m(p, lower_bounds(p, opts));
  std::uint64_t seen = 0;
  Walker w(m, Mode::Collect);
  w.target = target.to_u64();
  w.on_optimum = [&](const std::vector<std::vector<std::uint32_t>>& chosen, const Word* state) {
    std::vector<Family> fams;
    fams.reserve(m.r);
    for (std::size_t i = 0; i < m.r; ++i) {
      std::vector<Mask> members;
      if (i == m.top) {
        for (std::size_t y = 0; y < m.univ[i].size(); ++y) {
          if (m.alive(state, i, y)) members.push_back(m.univ[i][y]);
        }
      } else {
        for (std::uint32_t x : chosen[i]) members.push_back(m.univ[i][x]);
      }
      fams.emplace_back(p.n, p.ks[i], std::move(members));
    }
    ++seen;
    visit(fams);
  };
  w.run_all();
  return seen;
}

Certificate full_space_max(const Profile& p, const FullSpaceOptions& opts) {
  Certificate cert;
  cert.profile = p;
  cert.engine = "full";
  cert.optimum = full_space_optimum(p, opts);

  std::set<std::vector<std::uint64_t>> sizes;
  std::vector<std::vector<Family>> kept;
  const std::size_t cap = opts.class_cap;
  cert.optima_count = for_each_full_space_optimum(
      p, cert.optimum,
      [&](std::span<const Family> fams) {
        std::vector<std::uint64_t> v;
        for (const auto& f : fams) v.push_back(f.size());
        sizes.insert(std::move(v));
        if (kept.size() <= cap) kept.emplace_back(fams.begin(), fams.end());
      },
      opts);
  cert.optimal_size_vectors.assign(sizes.begin(), sizes.end());
  for (std::size_t w = 0; w < kept.size() && w < 16; ++w) cert.witnesses.push_back(kept[w]);

  const bool within = p.n <= kMaxCanonicalN && cert.optima_count <= cap &&
                      cert.optima_count * factorial(p.n) <= opts.canonical_budget;
  if (within) {
    std::set<CanonicalKey> keys;
    for (const auto& t : kept) keys.insert(canonical_form(t));
    cert.extremal_classes.assign(keys.begin(), keys.end());
    cert.classes_complete = true;
  } else {
    cert.notes.push_back("canonical classes skipped: " + std::to_string(cert.optima_count) + " optima");
  }

  std::vector<int> sorted = p.ks;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (p.n >= sorted[0] + sorted[1]) {
    cert.bound = bound_thm17(p.n, sorted).value;
    cert.bound_theorem = "t17";
    cert.bound_agreement = *cert.bound == cert.optimum;
  }
  return cert;
}

}  // namespace cif
