#include "cif/auxgraph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "cif/bigcount.hpp"
#include "cif/constructions.hpp"
#include "cif/error.hpp"

namespace cif {

namespace {

void violated(const std::string& what) { throw HypothesisError("hypothesis violated: " + what); }

/// All t-subsets of [s+2, n].
std::vector<Mask> slack_sets(int n, int s, int t) {
  auto base = all_ksets(n - s - 1, t);
  for (Mask& m : base) m <<= static_cast<unsigned>(s + 1);
  return base;
}

std::size_t checked_part(const AuxGraph& g, std::size_t i) {
  if (i >= g.parts.size()) throw std::invalid_argument("part index out of range");
  if (i == g.istar) throw std::invalid_argument("part index must differ from istar");
  return i;
}

}  // namespace

std::size_t AuxGraph::part_of(std::size_t v) const {
  const auto it = std::upper_bound(offset.begin(), offset.end(), v);
  return static_cast<std::size_t>(it - offset.begin()) - 1;
}

AuxGraph build_aux_graph(int n, std::span<const int> ks, std::size_t istar, int s) {
  const std::size_t r = ks.size();
  if (r < 2) violated("r >= 2");
  if (istar >= r) violated("istar in [1, r]");
  if (n < 1 || n > kMaxGroundSet) throw CapExceeded("auxiliary graph: n outside [1, " + std::to_string(kMaxGroundSet) + "]");
  const int ki = ks[istar];
  if (ki < 2) violated("k_istar >= 2");
  int kbar = -1;
  for (std::size_t i = 0; i < r; ++i) {
    if (i == istar) continue;
    if (ks[i] < 1) violated("k_i >= 1");
    if (n < ks[i] + ki) {
      violated("n=" + std::to_string(n) + " >= k_" + std::to_string(i + 1) + " + k_istar=" + std::to_string(ks[i] + ki));
    }
    kbar = kbar < 0 ? ks[i] : std::min(kbar, ks[i]);
  }
  if (s < 1 || s + 1 > kbar) {
    violated("2 <= s + 1 <= kbar (s=" + std::to_string(s) + ", kbar=" + std::to_string(kbar) + ")");
  }
  BigCount total;
  for (std::size_t i = 0; i < r; ++i) total += binom(n - s - 1, i == istar ? ki - 1 : ks[i] - s);
  if (total > BigCount{kMaxAuxVertices}) {
    throw CapExceeded("auxiliary graph: " + total.to_string() + " vertices exceeds " + std::to_string(kMaxAuxVertices));
  }

  AuxGraph g;
  g.n = n;
  g.s = s;
  g.istar = istar;
  g.ks.assign(ks.begin(), ks.end());
  std::size_t count = 0;
  for (std::size_t i = 0; i < r; ++i) {
    g.parts.push_back(slack_sets(n, s, i == istar ? ki - 1 : ks[i] - s));
    g.offset.push_back(count);
    count += g.parts.back().size();
  }
  g.adj.resize(count);
  const auto& center = g.parts[istar];
  for (std::size_t i = 0; i < r; ++i) {
    if (i == istar) continue;
    for (std::size_t u = 0; u < center.size(); ++u) {
      for (std::size_t v = 0; v < g.parts[i].size(); ++v) {
        if (meets(center[u], g.parts[i][v])) continue;
        const auto a = static_cast<std::uint32_t>(g.vertex(istar, u));
        const auto b = static_cast<std::uint32_t>(g.vertex(i, v));
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
        ++g.edge_count;
      }
    }
  }
  for (auto& list : g.adj) std::sort(list.begin(), list.end());
  return g;
}

PartClassification classify_parts(const AuxGraph& g) {
  PartClassification c;
  const int ki = g.ks[g.istar];
  for (std::size_t i = 0; i < g.ks.size(); ++i) {
    if (i == g.istar) continue;
    if (g.n > g.ks[i] + ki) {
      c.h1.push_back(i);
    } else if (g.n == g.ks[i] + ki) {
      c.h2.push_back(i);
    }
  }
  return c;
}

bool induces_perfect_matching(const AuxGraph& g, std::size_t i) {
  checked_part(g, i);
  if (g.parts[i].size() != g.parts[g.istar].size()) return false;
  auto degree_into = [&](std::size_t v, std::size_t part) {
    return std::count_if(g.adj[v].begin(), g.adj[v].end(), [&](std::uint32_t w) { return g.part_of(w) == part; });
  };
  for (std::size_t u = 0; u < g.parts[g.istar].size(); ++u) {
    if (degree_into(g.vertex(g.istar, u), i) != 1) return false;
  }
  for (std::size_t v = 0; v < g.parts[i].size(); ++v) {
    if (degree_into(g.vertex(i, v), g.istar) != 1) return false;
  }
  return true;
}

ExpansionCheck neighborhood_expansion_check(const AuxGraph& g, std::size_t i, std::span<const std::size_t> q) {
  checked_part(g, i);
  const std::size_t left = g.parts[g.istar].size();
  const std::size_t right = g.parts[i].size();
  std::vector<char> in_q(left, 0);
  std::vector<char> hit(right, 0);
  std::size_t q_size = 0;
  std::size_t n_size = 0;
  for (std::size_t u : q) {
    if (u >= left) throw std::invalid_argument("Q holds a vertex outside part istar");
    if (in_q[u]) continue;
    in_q[u] = 1;
    ++q_size;
    for (std::uint32_t w : g.adj[g.vertex(g.istar, u)]) {
      if (g.part_of(w) != i) continue;
      const std::size_t local = w - g.offset[i];
      if (!hit[local]) {
        hit[local] = 1;
        ++n_size;
      }
    }
  }
  const BigCount lhs = BigCount{n_size} * BigCount{left};
  const BigCount rhs = BigCount{right} * BigCount{q_size};
  return {lhs >= rhs, lhs == rhs};
}

kernels::ExpansionSweep expansion_sweep(const AuxGraph& g, std::size_t i, std::uint64_t samples) {
  checked_part(g, i);
  const std::size_t left = g.parts[g.istar].size();
  const std::size_t right = g.parts[i].size();
  if (left <= 18 && right <= 64) {
    std::vector<std::uint64_t> nb(left, 0);
    for (std::size_t u = 0; u < left; ++u) {
      for (std::uint32_t w : g.adj[g.vertex(g.istar, u)]) {
        if (g.part_of(w) == i) nb[u] |= std::uint64_t{1} << (w - g.offset[i]);
      }
    }
    return kernels::expansion_sweep_parallel(nb, static_cast<int>(right));
  }
  kernels::ExpansionSweep out;
  auto tally = [&](const std::vector<std::size_t>& q) {
    const auto c = neighborhood_expansion_check(g, i, q);
    ++out.checked;
    out.violations += c.holds ? 0 : 1;
    if (c.equality && !q.empty() && q.size() != left) ++out.interior_equalities;
  };
  std::vector<std::size_t> q;
  if (left <= 18) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << left); ++mask) {
      q.clear();
      for (std::size_t u = 0; u < left; ++u) {
        if ((mask >> u) & 1U) q.push_back(u);
      }
      tally(q);
    }
    return out;
  }
  std::mt19937_64 rng(0x5eedULL + left * 131 + right);
  for (std::uint64_t t = 0; t < samples; ++t) {
    q.clear();
    for (std::size_t u = 0; u < left; ++u) {
      if (rng() & 1U) q.push_back(u);
    }
    tally(q);
  }
  return out;
}

Matching max_matching(const AuxGraph& g) {
  const std::size_t nv = g.vertex_count();
  const std::size_t center = g.parts[g.istar].size();
  const bool root_center = center <= nv - center;
  std::vector<std::size_t> roots;
  for (std::size_t v = 0; v < nv; ++v) {
    if ((g.part_of(v) == g.istar) == root_center) roots.push_back(v);
  }
  Matching m;
  m.mate.assign(nv, -1);
  std::vector<std::size_t> seen(nv, 0);
  std::size_t stamp = 0;
  // Iterative DFS for an augmenting path from root.
  auto augment = [&](std::size_t root) {
    struct Frame {
      std::size_t v;
      std::size_t next;
    };
    std::vector<Frame> stack{{root, 0}};
    std::vector<std::size_t> via;  // right vertex taken from each frame
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next == g.adj[f.v].size()) {
        stack.pop_back();
        if (!via.empty()) via.pop_back();
        continue;
      }
      const std::size_t w = g.adj[f.v][f.next++];
      if (seen[w] == stamp) continue;
      seen[w] = stamp;
      if (m.mate[w] < 0) {
        via.push_back(w);
        for (std::size_t d = 0; d < stack.size(); ++d) {
          const std::size_t u = stack[d].v;
          const std::size_t x = via[d];
          m.mate[u] = static_cast<std::int64_t>(x);
          m.mate[x] = static_cast<std::int64_t>(u);
        }
        return true;
      }
      via.push_back(w);
      stack.push_back({static_cast<std::size_t>(m.mate[w]), 0});
    }
    return false;
  };
  for (std::size_t root : roots) {
    ++stamp;
    if (augment(root)) ++m.size;
  }
  return m;
}

IndependentSet max_independent_set(const AuxGraph& g) {
  const Matching m = max_matching(g);
  const std::size_t nv = g.vertex_count();
  const std::size_t center = g.parts[g.istar].size();
  const bool root_center = center <= nv - center;
  auto on_root_side = [&](std::size_t v) { return (g.part_of(v) == g.istar) == root_center; };

  // Z: reachable from unmatched root-side vertices along alternating paths.
  std::vector<char> z(nv, 0);
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < nv; ++v) {
    if (on_root_side(v) && m.mate[v] < 0) {
      z[v] = 1;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    for (std::uint32_t w : g.adj[u]) {
      if (z[w]) continue;
      z[w] = 1;
      if (m.mate[w] >= 0 && !z[static_cast<std::size_t>(m.mate[w])]) {
        const auto x = static_cast<std::size_t>(m.mate[w]);
        z[x] = 1;
        queue.push_back(x);
      }
    }
  }
  IndependentSet out;
  for (std::size_t v = 0; v < nv; ++v) {
    if (on_root_side(v) == static_cast<bool>(z[v])) out.vertices.push_back(v);
  }
  out.size = out.vertices.size();
  if (out.size + m.size != nv) throw std::logic_error("matching and independent set disagree");
  return out;
}

std::vector<std::uint32_t> adjacency_masks(const AuxGraph& g) {
  if (g.vertex_count() > 26) throw CapExceeded("brute-force independence needs at most 26 vertices");
  std::vector<std::uint32_t> out(g.vertex_count(), 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (std::uint32_t w : g.adj[v]) out[v] |= std::uint32_t{1} << w;
  }
  return out;
}

std::vector<Family> independent_set_to_families(const AuxGraph& g, std::span<const std::size_t> indep) {
  std::vector<char> in(g.vertex_count(), 0);
  for (std::size_t v : indep) {
    if (v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    in[v] = 1;
  }
  for (std::size_t v : indep) {
    for (std::uint32_t w : g.adj[v]) {
      if (in[w]) throw std::invalid_argument("vertex set is not independent");
    }
  }
  const Mask head = prefix_mask(g.s);
  const Mask next = Mask{1} << static_cast<unsigned>(g.s);
  std::vector<Family> out;
  for (std::size_t i = 0; i < g.parts.size(); ++i) {
    const int k = g.ks[i];
    const Family base = i == g.istar ? cover_R(g.n, k, head) : star_P(g.n, k, head | next);
    std::vector<Mask> members(base.members().begin(), base.members().end());
    for (std::size_t local = 0; local < g.parts[i].size(); ++local) {
      if (!in[g.vertex(i, local)]) continue;
      members.push_back(g.parts[i][local] | (i == g.istar ? next : head));
    }
    out.emplace_back(g.n, k, std::move(members));
  }
  return out;
}

}  // namespace cif
