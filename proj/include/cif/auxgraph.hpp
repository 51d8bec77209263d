#ifndef CIF_AUXGRAPH_HPP
#define CIF_AUXGRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "cif/family.hpp"
#include "cif/kernels.hpp"

namespace cif {

/// The r-partite graph on slack sets. Part istar holds the (k_istar - 1)-
/// subsets of [s+2, n]; part i != istar holds the (k_i - s)-subsets of
/// [s+2, n]. Edges join a vertex of part istar to a disjoint vertex of
/// another part, so the graph is bipartite between part istar and the rest.
/// Parts with equal underlying sets stay distinct: vertices are numbered
/// part by part.
struct AuxGraph {
  int n = 0;
  int s = 0;
  std::size_t istar = 0;
  std::vector<int> ks;
  std::vector<std::vector<Mask>> parts;
  std::vector<std::size_t> offset;  ///< global index of each part's first vertex
  std::vector<std::vector<std::uint32_t>> adj;
  std::size_t edge_count = 0;

  [[nodiscard]] std::size_t vertex_count() const { return adj.size(); }
  [[nodiscard]] std::size_t part_of(std::size_t v) const;
  [[nodiscard]] std::size_t vertex(std::size_t part, std::size_t local) const { return offset[part] + local; }
};

inline constexpr std::size_t kMaxAuxVertices = 20000;

/// istar is 0-based. Requires 1 <= s <= kbar - 1, k_istar >= 2 and
/// n >= k_i + k_istar for every i != istar.
AuxGraph build_aux_graph(int n, std::span<const int> ks, std::size_t istar, int s);

/// Indices i != istar with n > k_i + k_istar (h1) and n == k_i + k_istar (h2).
struct PartClassification {
  std::vector<std::size_t> h1;
  std::vector<std::size_t> h2;
};
PartClassification classify_parts(const AuxGraph& g);

/// Every vertex of part istar and part i has exactly one neighbour in the other.
bool induces_perfect_matching(const AuxGraph& g, std::size_t i);

struct ExpansionCheck {
  bool holds = false;
  bool equality = false;
};
/// |N_i(Q)| * |X_istar| >= |X_i| * |Q| for Q given as local indices into
/// part istar. Throws for i == istar or out of range.
ExpansionCheck neighborhood_expansion_check(const AuxGraph& g, std::size_t i, std::span<const std::size_t> q);

/// The check over every Q when |X_istar| <= 18 (OpenMP kernel), otherwise
/// over `samples` random Q drawn from a fixed seed.
kernels::ExpansionSweep expansion_sweep(const AuxGraph& g, std::size_t i, std::uint64_t samples = 10000);

struct Matching {
  std::size_t size = 0;
  std::vector<std::int64_t> mate;  ///< partner of each vertex or -1
};
/// Augmenting paths rooted on the smaller side, vertices in index order.
Matching max_matching(const AuxGraph& g);

struct IndependentSet {
  std::size_t size = 0;
  std::vector<std::size_t> vertices;  ///< global indices, ascending
};
/// |V| minus the matching number, witness from the Koenig cover.
IndependentSet max_independent_set(const AuxGraph& g);

/// Neighbour masks for the brute-force kernel; requires |V| <= 26.
std::vector<std::uint32_t> adjacency_masks(const AuxGraph& g);

/// Lifts an independent set to families: part istar becomes
/// R_s plus {s+1} joined to each chosen vertex, part i becomes P_{s+1} plus
/// [s] joined to each chosen vertex. Throws if indep is not independent.
std::vector<Family> independent_set_to_families(const AuxGraph& g, std::span<const std::size_t> indep);

}  // namespace cif

#endif  // CIF_AUXGRAPH_HPP
