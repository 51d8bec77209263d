#include "cif/bounds.hpp"

#include <algorithm>

#include "cif/error.hpp"

namespace cif {

namespace {

[[noreturn]] void violated(const std::string& what) { throw HypothesisError("hypothesis violated: " + what); }

std::string ineq(const std::string& lhs, int a, const char* op, const std::string& rhs, int b) {
  return lhs + " " + op + " " + rhs + " (" + std::to_string(a) + " vs " + std::to_string(b) + ")";
}

void require_positive(std::span<const int> ks) {
  if (ks.size() < 2) violated("r >= 2");
  for (int k : ks) {
    if (k < 1) violated("k_i >= 1");
  }
}

BoundResult pick(BigCount first, BigCount second, Branch first_branch, int s_first, int s_second) {
  BoundResult out;
  out.first = first;
  out.second = second;
  if (first > second) {
    out.value = first;
    out.branch = first_branch;
    out.optimal_s = {s_first};
  } else if (second > first) {
    out.value = second;
    out.branch = Branch::AllStars;
    out.optimal_s = {s_second};
  } else {
    out.value = first;
    out.branch = Branch::Tie;
    out.optimal_s = {s_second, s_first};
  }
  std::sort(out.optimal_s.begin(), out.optimal_s.end());
  out.optimal_s.erase(std::unique(out.optimal_s.begin(), out.optimal_s.end()), out.optimal_s.end());
  return out;
}

}  // namespace

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::CoverStar: return "cover-star";
    case Branch::AllStars: return "all-stars";
    case Branch::FullFamily: return "full-family";
    case Branch::Tie: return "tie";
  }
  return "?";
}

BigCount all_stars_sum(int n, std::span<const int> ks) {
  BigCount sum;
  for (int k : ks) sum += binom(n - 1, k - 1);
  return sum;
}

BigCount g_eval(int n, std::span<const int> ks, int s) {
  require_positive(ks);
  if (n < ks[0]) violated(ineq("n", n, ">=", "k_1", ks[0]));
  const int kmin = *std::min_element(ks.begin() + 1, ks.end());
  if (s < 1 || s > kmin) violated(ineq("s", s, "in [1, min(k_2..k_r)] ->", "min", kmin));
  if (s > n) violated(ineq("s", s, "<=", "n", n));
  BigCount v = binom(n, ks[0]) - binom(n - s, ks[0]);
  for (std::size_t i = 1; i < ks.size(); ++i) v += binom(n - s, ks[i] - s);
  return v;
}

EndpointArgmax g_endpoint_argmax(int n, std::span<const int> ks) {
  require_positive(ks);
  const std::size_t r = ks.size();
  const int k1 = ks[0];
  const int kr = ks[r - 1];
  for (std::size_t i = 1; i < r; ++i) {
    if (ks[i] < kr) violated("k_r = min(k_2..k_r)");
  }
  for (std::size_t i = 1; i + 1 < r; ++i) {
    if (n < k1 + ks[i]) violated(ineq("n", n, ">=", "k_1 + k_" + std::to_string(i + 1), k1 + ks[i]));
  }
  if (n <= k1 + kr) violated(ineq("n", n, ">", "k_1 + k_r", k1 + kr));

  EndpointArgmax out;
  for (int s = 1; s <= kr; ++s) {
    const BigCount v = g_eval(n, ks, s);
    if (out.s_star.empty() || v > out.value) {
      out.value = v;
      out.s_star = {s};
    } else if (v == out.value) {
      out.s_star.push_back(s);
    }
  }
  for (int s : out.s_star) {
    if (s != 1 && s != kr) out.endpoint_only = false;
  }
  return out;
}

BoundResult bound_thm17(int n, std::span<const int> ks) {
  require_positive(ks);
  for (std::size_t i = 1; i < ks.size(); ++i) {
    if (ks[i] > ks[i - 1]) violated("k_1 >= k_2 >= ... >= k_r");
  }
  if (n < ks[0] + ks[1]) violated(ineq("n", n, ">=", "k_1 + k_2", ks[0] + ks[1]));
  const int kr = ks.back();
  return pick(g_eval(n, ks, kr), all_stars_sum(n, ks), Branch::CoverStar, kr, 1);
}

BoundResult bound_thm16(int n, std::span<const int> ks, std::size_t istar) {
  require_positive(ks);
  if (istar >= ks.size()) violated("istar in [1, r]");
  const int ki = ks[istar];
  int kbar = -1;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i == istar) continue;
    if (n < ks[i] + ki) {
      violated(ineq("n", n, ">=", "k_" + std::to_string(i + 1) + " + k_istar", ks[i] + ki));
    }
    if (kbar < 0 || ks[i] < kbar) kbar = ks[i];
  }
  BigCount cover = binom(n, ki) - binom(n - kbar, ki);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i != istar) cover += binom(n - kbar, ks[i] - kbar);
  }
  return pick(cover, all_stars_sum(n, ks), Branch::CoverStar, kbar, 1);
}

BigCount bound_hm(int n, int k) {
  if (k < 1) violated("k >= 1");
  if (n < 2 * k) violated(ineq("n", n, ">=", "2k", 2 * k));
  return binom(n, k) - binom(n - k, k) + 1;
}

FtBound bound_ft(int n, int k, int l, bool second_part) {
  if (l < 1) violated("l >= 1");
  if (k < l) violated(ineq("k", k, ">=", "l", l));
  if (n < k + l) violated(ineq("n", n, ">=", "k + l", k + l));
  if (!second_part) return {binom(n, k) - binom(n - l, k) + 1, false};
  const BigCount stars = binom(n - 1, k - 1) + binom(n - 1, l - 1);
  if (k == l && k >= 2) {
    const BigCount hm = binom(n, k) - binom(n - k, k) + 1;
    return {hm, hm == stars};
  }
  return {stars, false};
}

BoundResult bound_sfq15(int n, int k, int r) {
  if (k < 1) violated("k >= 1");
  if (r < 2) violated("r >= 2");
  if (n < 2 * k) violated(ineq("n", n, ">=", "2k", 2 * k));
  const BigCount cover = binom(n, k) - binom(n - k, k) + static_cast<std::uint64_t>(r - 1);
  const BigCount stars = binom(n - 1, k - 1) * static_cast<std::uint64_t>(r);
  return pick(cover, stars, Branch::CoverStar, k, 1);
}

BoundResult bound_hilton(int n, int k, int r) {
  if (k < 1) violated("k >= 1");
  if (r < 2) violated("r >= 2");
  if (n < 2 * k) violated(ineq("n", n, ">=", "2k", 2 * k));
  BoundResult out = pick(binom(n, k), binom(n - 1, k - 1) * static_cast<std::uint64_t>(r),
                         Branch::FullFamily, 0, 1);
  out.optimal_s.clear();
  return out;
}

BoundResult weighted_bound(int n, int k, int l, int tau, const BigCount& c) {
  if (k < 1 || l < 1) violated("k, l >= 1");
  if (n < k + l) violated(ineq("n", n, ">=", "k + l", k + l));
  if (tau < 1 || tau > l) violated(ineq("tau", tau, "in [1, l] ->", "l", l));
  if (c < BigCount{1}) violated("c >= 1");
  const BigCount first = binom(n, k) - binom(n - tau, k) + c * binom(n - tau, l - tau);
  const BigCount second = binom(n - 1, k - 1) + c * binom(n - 1, l - 1);
  return pick(first, second, Branch::CoverStar, tau, 1);
}

bool lemma24_check(int n, int k, int s) {
  if (n < 1 || k < 1 || s < 1) violated("n, k, s >= 1");
  if (s > n) violated(ineq("s", s, "<=", "n", n));
  // Compared additively so no difference can go negative.
  BigCount rhs1 = binom(n - s, k);
  for (int i = 1; i <= s; ++i) rhs1 += binom(n - i, k - 1);
  BigCount rhs2 = binom(n - s, k - s);
  for (int i = 0; i <= s - 1; ++i) rhs2 += binom(n - i - 1, k - i);
  const BigCount lhs = binom(n, k);
  return lhs == rhs1 && lhs == rhs2;
}

Lemma25Result lemma25_compare(int n, std::span<const int> ks) {
  require_positive(ks);
  const std::size_t r = ks.size();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (n < ks[i] + ks[j]) {
        violated(ineq("n", n, ">=", "k_" + std::to_string(i + 1) + " + k_" + std::to_string(j + 1), ks[i] + ks[j]));
      }
    }
  }
  if (ks[0] <= ks[1]) violated(ineq("k_1", ks[0], ">", "k_2", ks[1]));
  int kbar = ks[0];
  for (std::size_t i = 2; i < r; ++i) kbar = std::min(kbar, ks[i]);
  if (kbar <= 1) violated(ineq("kbar", kbar, ">", "1", 1));

  const BigCount lhs = all_stars_sum(n, ks);
  BigCount rhs = binom(n, ks[1]) - binom(n - kbar, ks[1]);
  for (std::size_t i = 0; i < r; ++i) {
    if (i != 1) rhs += binom(n - kbar, ks[i] - kbar);
  }
  Lemma25Result out;
  out.ordering = lhs <=> rhs;
  out.equality_predicted = (r == 2 && n == ks[0] + ks[1]);
  out.equality_condition_holds = ((out.ordering == std::strong_ordering::equal) == out.equality_predicted);
  return out;
}

}  // namespace cif
