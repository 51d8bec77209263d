#include <random>

#include "cif/kernels.hpp"
#include "cif/kset.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cif;
using namespace cif::kernels;

TEST_CASE("shadow kernels agree") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const int n = 4 + static_cast<int>(rng() % 6);
    const auto fam_all = all_ksets(n, 2);
    std::vector<Mask> fam;
    for (Mask m : fam_all) {
      if (rng() % 3 == 0) fam.push_back(m);
    }
    const auto cands = all_ksets(n, 1 + static_cast<int>(rng() % 3));
    const auto a = shadow_serial(fam, cands);
    CHECK(a == shadow_parallel(fam, cands));
    for (Mask d : cands) {
      bool hit = false;
      for (Mask m : fam) hit = hit || (m & d) == 0;
      CHECK(hit == (std::find(a.begin(), a.end(), d) != a.end()));
    }
  }
}

TEST_CASE("first-disjoint kernels agree with a scan") {
  for (int n = 2; n <= 8; ++n) {
    for (int a = 1; a <= n; ++a) {
      for (int b = 1; b <= n; ++b) {
        const auto rows = oracle::lex_masks(n, a);
        const auto cols = oracle::lex_masks(n, b);
        const auto s = first_disjoint_serial(rows, cols);
        CHECK(s == first_disjoint_parallel(rows, cols));
        for (std::size_t i = 0; i < rows.size(); ++i) {
          std::uint64_t ref = cols.size();
          for (std::size_t j = 0; j < cols.size(); ++j) {
            if ((rows[i] & cols[j]) == 0) {
              ref = j;
              break;
            }
          }
          CHECK(s[i] == ref);
        }
      }
    }
  }
}

TEST_CASE("expansion sweep kernels") {
  // Complete bipartite K_{3,4}: only the empty Q has an empty neighbourhood.
  std::vector<std::uint64_t> full(3, 0b1111);
  auto e = expansion_sweep_serial(full, 4);
  CHECK(e.checked == 8);
  CHECK(e.violations == 0);
  CHECK(e.interior_equalities == 0);
  // A perfect matching on 4 + 4 is tight everywhere.
  std::vector<std::uint64_t> pm{1, 2, 4, 8};
  e = expansion_sweep_parallel(pm, 4);
  CHECK(e.violations == 0);
  CHECK(e.interior_equalities == 14);
  // A left vertex with no neighbour violates for Q = {it}.
  std::vector<std::uint64_t> bad{0b11, 0};
  CHECK(expansion_sweep_serial(bad, 2).violations > 0);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::uint64_t> nb(1 + rng() % 12);
    const int right = 1 + static_cast<int>(rng() % 20);
    for (auto& x : nb) x = rng() & ((std::uint64_t{1} << right) - 1);
    const auto a = expansion_sweep_serial(nb, right);
    const auto b = expansion_sweep_parallel(nb, right);
    CHECK(a.checked == b.checked);
    CHECK(a.violations == b.violations);
    CHECK(a.interior_equalities == b.interior_equalities);
  }
}

TEST_CASE("independence kernels") {
  // Path on 4 vertices: 0-1-2-3.
  std::vector<std::uint32_t> path{0b0010, 0b0101, 0b1010, 0b0100};
  CHECK(independence_brute_serial(path) == 2);
  CHECK(independence_brute_parallel(path) == 2);
  // Star with centre 0 and three leaves.
  std::vector<std::uint32_t> star{0b1110, 0b0001, 0b0001, 0b0001};
  CHECK(independence_brute_serial(star) == 3);
  // 5-cycle.
  std::vector<std::uint32_t> c5(5);
  for (std::uint32_t v = 0; v < 5; ++v) c5[v] = (1U << ((v + 1) % 5)) | (1U << ((v + 4) % 5));
  CHECK(independence_brute_parallel(c5) == 2);
  CHECK(independence_brute_serial(std::vector<std::uint32_t>{}) == 0);
}

TEST_CASE("shadow scan kernels") {
  // n=5, k=l=2, families of size C(4,1)=4 against threshold C(4,2)=6.
  const auto a = shadow_scan_serial(5, 2, 2, 4, 1, 6);
  const auto b = shadow_scan_parallel(5, 2, 2, 4, 1, 6);
  CHECK(a.below == b.below);
  CHECK(a.equal == b.equal);
  CHECK(a.equal_non_star == b.equal_non_star);
  CHECK(a.below == 0);
  CHECK(a.equal == 5);  // the five point stars
  CHECK(a.equal_non_star == 0);

  // Direct enumeration of all 4-subsets of the 10 two-sets.
  const auto sets = all_ksets(5, 2);
  std::uint64_t equal = 0;
  std::uint64_t below = 0;
  for (std::uint32_t pick = 0; pick < (1U << sets.size()); ++pick) {
    if (std::popcount(pick) != 4) continue;
    int d = 0;
    for (Mask t : sets) {
      bool hit = false;
      for (std::size_t i = 0; i < sets.size(); ++i) hit = hit || (((pick >> i) & 1U) && (sets[i] & t) == 0);
      d += hit ? 1 : 0;
    }
    equal += d == 6 ? 1 : 0;
    below += d < 6 ? 1 : 0;
  }
  CHECK(equal == a.equal);
  CHECK(below == a.below);
}
