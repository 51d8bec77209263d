#include "cif/kernels.hpp"

#include <bit>
#include <stdexcept>

#include "cif/error.hpp"

namespace cif::kernels {

std::vector<Mask> shadow_serial(std::span<const Mask> family, std::span<const Mask> candidates) {
  std::vector<Mask> out;
  for (Mask d : candidates) {
    for (Mask a : family) {
      if (!meets(a, d)) {
        out.push_back(d);
        break;
      }
    }
  }
  return out;
}

std::vector<Mask> shadow_parallel(std::span<const Mask> family, std::span<const Mask> candidates) {
  const auto count = static_cast<std::int64_t>(candidates.size());
  std::vector<char> hit(candidates.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    const Mask d = candidates[static_cast<std::size_t>(i)];
    for (Mask a : family) {
      if (!meets(a, d)) {
        hit[static_cast<std::size_t>(i)] = 1;
        break;
      }
    }
  }
  std::vector<Mask> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (hit[i]) out.push_back(candidates[i]);
  }
  return out;
}

namespace {
std::uint64_t first_disjoint_one(Mask row, std::span<const Mask> cols) {
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (!meets(row, cols[j])) return j;
  }
  return cols.size();
}
}  // namespace

std::vector<std::uint64_t> first_disjoint_serial(std::span<const Mask> rows, std::span<const Mask> cols) {
  std::vector<std::uint64_t> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = first_disjoint_one(rows[i], cols);
  return out;
}

std::vector<std::uint64_t> first_disjoint_parallel(std::span<const Mask> rows, std::span<const Mask> cols) {
  std::vector<std::uint64_t> out(rows.size());
  const auto count = static_cast<std::int64_t>(rows.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = first_disjoint_one(rows[static_cast<std::size_t>(i)], cols);
  }
  return out;
}

namespace {

void check_expansion_input(std::span<const std::uint64_t> neighbours, int right_size) {
  if (neighbours.size() > 30) throw CapExceeded("expansion sweep limited to 30 left vertices");
  if (right_size < 0 || right_size > 64) throw CapExceeded("expansion sweep limited to 64 right vertices");
}

struct ExpansionStep {
  bool violation = false;
  bool interior_equality = false;
};

ExpansionStep expansion_at(std::span<const std::uint64_t> neighbours, int right_size, std::uint64_t q) {
  std::uint64_t nb = 0;
  for (std::uint64_t t = q; t != 0; t &= t - 1) nb |= neighbours[static_cast<std::size_t>(std::countr_zero(t))];
  const auto left = static_cast<std::uint64_t>(neighbours.size());
  const std::uint64_t lhs = static_cast<std::uint64_t>(std::popcount(nb)) * left;
  const std::uint64_t rhs = static_cast<std::uint64_t>(right_size) * static_cast<std::uint64_t>(std::popcount(q));
  const std::uint64_t full = left == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << left) - 1);
  return {lhs < rhs, lhs == rhs && q != 0 && q != full};
}

}  // namespace

ExpansionSweep expansion_sweep_serial(std::span<const std::uint64_t> neighbours, int right_size) {
  check_expansion_input(neighbours, right_size);
  ExpansionSweep out;
  const std::uint64_t total = std::uint64_t{1} << neighbours.size();
  for (std::uint64_t q = 0; q < total; ++q) {
    auto st = expansion_at(neighbours, right_size, q);
    out.violations += st.violation;
    out.interior_equalities += st.interior_equality;
  }
  out.checked = total;
  return out;
}

ExpansionSweep expansion_sweep_parallel(std::span<const std::uint64_t> neighbours, int right_size) {
  check_expansion_input(neighbours, right_size);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << neighbours.size());
  std::uint64_t violations = 0;
  std::uint64_t interior = 0;
#pragma omp parallel for schedule(static) reduction(+ : violations, interior)
  for (std::int64_t q = 0; q < total; ++q) {
    auto st = expansion_at(neighbours, right_size, static_cast<std::uint64_t>(q));
    violations += st.violation;
    interior += st.interior_equality;
  }
  return ExpansionSweep{static_cast<std::uint64_t>(total), violations, interior};
}

namespace {

bool independent(std::span<const std::uint32_t> adjacency, std::uint32_t s) {
  for (std::uint32_t t = s; t != 0; t &= t - 1) {
    if (adjacency[static_cast<std::size_t>(std::countr_zero(t))] & s) return false;
  }
  return true;
}

void check_brute_input(std::span<const std::uint32_t> adjacency) {
  if (adjacency.size() > 26) throw CapExceeded("brute-force independence limited to 26 vertices");
}

}  // namespace

int independence_brute_serial(std::span<const std::uint32_t> adjacency) {
  check_brute_input(adjacency);
  const std::uint32_t total = std::uint32_t{1} << adjacency.size();
  int best = 0;
  for (std::uint32_t s = 0; s < total; ++s) {
    const int c = std::popcount(s);
    if (c > best && independent(adjacency, s)) best = c;
  }
  return best;
}

int independence_brute_parallel(std::span<const std::uint32_t> adjacency) {
  check_brute_input(adjacency);
  const auto total = static_cast<std::int64_t>(std::uint32_t{1} << adjacency.size());
  int best = 0;
#pragma omp parallel for schedule(static) reduction(max : best)
  for (std::int64_t s = 0; s < total; ++s) {
    const auto m = static_cast<std::uint32_t>(s);
    const int c = std::popcount(m);
    if (c > best && independent(adjacency, m)) best = c;
  }
  return best;
}

namespace {

struct ScanSetup {
  std::vector<std::uint64_t> disjoint;  // per k-set: targets disjoint from it
  std::vector<Mask> universe;
};

ScanSetup scan_setup(int n, int k, int l) {
  ScanSetup st;
  st.universe = all_ksets(n, k);
  const auto targets = all_ksets(n, l);
  if (targets.size() > 64) throw CapExceeded("shadow scan limited to 64 target sets");
  st.disjoint.resize(st.universe.size());
  for (std::size_t u = 0; u < st.universe.size(); ++u) {
    std::uint64_t m = 0;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (!meets(st.universe[u], targets[t])) m |= std::uint64_t{1} << t;
    }
    st.disjoint[u] = m;
  }
  return st;
}

struct ScanState {
  const ScanSetup* setup;
  int size;
  int s;
  std::uint64_t threshold;
  ShadowScan acc;

  void dfs(std::size_t next, int chosen, std::uint64_t shadow, Mask common) {
    ++acc.visited;
    if (static_cast<std::uint64_t>(std::popcount(shadow)) > threshold) return;
    if (chosen == size) {
      const auto d = static_cast<std::uint64_t>(std::popcount(shadow));
      if (d < threshold) {
        ++acc.below;
      } else {
        ++acc.equal;
        if (popcount(common) < s) ++acc.equal_non_star;
      }
      return;
    }
    const std::size_t n_univ = setup->universe.size();
    for (std::size_t u = next; u + static_cast<std::size_t>(size - chosen) <= n_univ; ++u) {
      dfs(u + 1, chosen + 1, shadow | setup->disjoint[u], common & setup->universe[u]);
    }
  }
};

void add(ShadowScan& into, const ShadowScan& from) {
  into.below += from.below;
  into.equal += from.equal;
  into.equal_non_star += from.equal_non_star;
  into.visited += from.visited;
}

}  // namespace

ShadowScan shadow_scan_serial(int n, int k, int l, int size, int s, std::uint64_t threshold) {
  const ScanSetup setup = scan_setup(n, k, l);
  ScanState st{&setup, size, s, threshold, {}};
  if (size == 0) {
    st.dfs(0, 0, 0, ground_mask(n));
    return st.acc;
  }
  for (std::size_t u = 0; u + static_cast<std::size_t>(size) <= setup.universe.size(); ++u) {
    st.dfs(u + 1, 1, setup.disjoint[u], setup.universe[u]);
  }
  return st.acc;
}

ShadowScan shadow_scan_parallel(int n, int k, int l, int size, int s, std::uint64_t threshold) {
  const ScanSetup setup = scan_setup(n, k, l);
  if (size == 0) return shadow_scan_serial(n, k, l, size, s, threshold);
  const auto roots = static_cast<std::int64_t>(setup.universe.size()) - size + 1;
  ShadowScan total;
#pragma omp parallel
  {
    ScanState st{&setup, size, s, threshold, {}};
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t u = 0; u < roots; ++u) {
      const auto uu = static_cast<std::size_t>(u);
      st.dfs(uu + 1, 1, setup.disjoint[uu], setup.universe[uu]);
    }
#pragma omp critical
    add(total, st.acc);
  }
  return total;
}

}  // namespace cif::kernels
