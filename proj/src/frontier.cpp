#include "cif/frontier.hpp"

#include <algorithm>
#include <stdexcept>

#include "cif/bigcount.hpp"
#include "cif/error.hpp"
#include "cif/kernels.hpp"
#include "cif/kset.hpp"

namespace cif {

namespace {

void check_args(int n, int k_i, int k_j) {
  if (n < 1 || n > kMaxSearchN) {
    throw CapExceeded("frontier table: n=" + std::to_string(n) + " outside [1, " + std::to_string(kMaxSearchN) + "]");
  }
  if (k_i < 1 || k_i > n || k_j < 1 || k_j > n) throw std::invalid_argument("frontier table: uniformity outside [1, n]");
}

}  // namespace

FrontierTable frontier_table(int n, int k_i, int k_j) {
  check_args(n, k_i, k_j);
  const auto rows = all_ksets(n, k_i);
  const auto cols = all_ksets(n, k_j);
  FrontierTable t{n, k_i, k_j, {}};
  t.f.resize(rows.size() + 1);
  std::uint64_t bound = cols.size();
  t.f[0] = bound;
  for (std::size_t m = 1; m <= rows.size(); ++m) {
    const Mask a = rows[m - 1];
    // The first `bound` columns already meet rows 0..m-2; cut at the first
    // one disjoint from the new row.
    for (std::uint64_t p = 0; p < bound; ++p) {
      if (!meets(a, cols[p])) {
        bound = p;
        break;
      }
    }
    t.f[m] = bound;
  }
  return t;
}

FrontierTable frontier_table_parallel(int n, int k_i, int k_j) {
  check_args(n, k_i, k_j);
  const auto rows = all_ksets(n, k_i);
  const auto cols = all_ksets(n, k_j);
  const auto first = kernels::first_disjoint_parallel(rows, cols);
  FrontierTable t{n, k_i, k_j, {}};
  t.f.resize(rows.size() + 1);
  t.f[0] = cols.size();
  for (std::size_t m = 1; m <= rows.size(); ++m) t.f[m] = std::min(t.f[m - 1], first[m - 1]);
  return t;
}

FrontierTable frontier_table_last_member(int n, int k_i, int k_j) {
  check_args(n, k_i, k_j);
  const auto rows = all_ksets(n, k_i);
  const auto cols = all_ksets(n, k_j);
  FrontierTable t{n, k_i, k_j, {}};
  t.f.resize(rows.size() + 1);
  t.f[0] = cols.size();
  for (std::size_t m = 1; m <= rows.size(); ++m) {
    std::uint64_t best = 0;
    for (std::uint64_t p = cols.size(); p >= 1; --p) {
      if (meets(rows[m - 1], cols[p - 1])) {
        best = p;
        break;
      }
    }
    t.f[m] = best;
  }
  return t;
}

bool last_member_rule_agrees(int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    for (int a = 1; a <= n; ++a) {
      for (int b = 1; b <= n; ++b) {
        if (frontier_table(n, a, b).f != frontier_table_last_member(n, a, b).f) return false;
      }
    }
  }
  return true;
}

}  // namespace cif
