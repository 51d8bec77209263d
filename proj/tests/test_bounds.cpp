#include "cif/bounds.hpp"
#include "cif/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cif;

namespace {

std::uint64_t C(int n, int k) { return oracle::choose(n, k); }

/// g(s) from the oracle triangle.
std::uint64_t g_ref(int n, const std::vector<int>& ks, int s) {
  std::uint64_t v = C(n, ks[0]) - C(n - s, ks[0]);
  for (std::size_t i = 1; i < ks.size(); ++i) v += C(n - s, ks[i] - s);
  return v;
}

}  // namespace

TEST_CASE("g_eval values") {
  const std::vector<int> ks{5, 3, 2};
  CHECK(g_eval(10, ks, 1) == BigCount{171});
  CHECK(g_eval(10, ks, 2) == BigCount{205});
  CHECK(g_eval(12, std::vector<int>{5, 4, 3}, 3) == BigCount{676});
  CHECK_THROWS_AS((void)g_eval(10, ks, 3), HypothesisError);
  CHECK_THROWS_AS((void)g_eval(10, ks, 0), HypothesisError);
  for (int n = 2; n <= 14; ++n) {
    for (int a = 1; a <= 5; ++a) {
      for (int b = 1; b <= 5; ++b) {
        for (int c = 1; c <= 5; ++c) {
          const std::vector<int> v{a, b, c};
          if (n < a) continue;
          for (int s = 1; s <= std::min({b, c, n}); ++s) CHECK(g_eval(n, v, s).to_u64() == g_ref(n, v, s));
          // g(1) is the all-stars sum.
          CHECK(g_eval(n, v, 1) == all_stars_sum(n, v));
        }
      }
    }
  }
}

TEST_CASE("g endpoint argmax") {
  auto e = g_endpoint_argmax(10, std::vector<int>{5, 3, 2});
  CHECK(e.s_star == std::vector<int>{2});
  CHECK(e.value == BigCount{205});
  e = g_endpoint_argmax(12, std::vector<int>{5, 4, 3});
  CHECK(e.s_star == std::vector<int>{3});
  CHECK(e.value == BigCount{676});
  CHECK(g_eval(12, std::vector<int>{5, 4, 3}, 1) == BigCount{550});
  CHECK(g_eval(12, std::vector<int>{5, 4, 3}, 2) == BigCount{595});
  e = g_endpoint_argmax(10, std::vector<int>{3, 3, 3});
  CHECK(e.s_star == std::vector<int>{1});
  CHECK(e.value == BigCount{108});
  CHECK(g_eval(10, std::vector<int>{3, 3, 3}, 3) == BigCount{87});
  CHECK_THROWS_AS((void)g_endpoint_argmax(5, std::vector<int>{3, 2}), HypothesisError);
  CHECK_THROWS_AS((void)g_endpoint_argmax(12, std::vector<int>{5, 2, 3}), HypothesisError);
}

TEST_CASE("ordered theorem bound") {
  auto b = bound_thm17(10, std::vector<int>{5, 3, 2});
  CHECK(b.value == BigCount{205});
  CHECK(b.branch == Branch::CoverStar);
  CHECK(b.first == BigCount{205});
  CHECK(b.second == BigCount{171});
  b = bound_thm17(4, std::vector<int>{2, 2});
  CHECK(b.value == BigCount{6});
  CHECK(b.branch == Branch::Tie);
  b = bound_thm17(6, std::vector<int>{3, 3, 3});
  CHECK(b.first == BigCount{21});
  CHECK(b.value == BigCount{30});
  CHECK(b.branch == Branch::AllStars);
  CHECK_THROWS_AS((void)bound_thm17(3, std::vector<int>{2, 2}), HypothesisError);
  CHECK_THROWS_AS((void)bound_thm17(9, std::vector<int>{2, 3}), HypothesisError);
}

TEST_CASE("conditional theorem bound") {
  auto b = bound_thm16(10, std::vector<int>{5, 3, 2}, 2);
  CHECK(b.first == BigCount{46});
  CHECK(b.second == BigCount{171});
  CHECK(b.value == BigCount{171});
  CHECK(b.branch == Branch::AllStars);
  CHECK(bound_thm16(10, std::vector<int>{5, 3, 2}, 0).value == BigCount{205});
  b = bound_thm16(4, std::vector<int>{2, 2}, 0);
  CHECK(b.value == BigCount{6});
  CHECK(b.branch == Branch::Tie);
  CHECK_THROWS_AS((void)bound_thm16(7, std::vector<int>{5, 3, 2}, 0), HypothesisError);
}

TEST_CASE("the two theorems agree where both apply") {
  for (int n = 2; n <= 12; ++n) {
    for (int a = 1; a <= 5; ++a) {
      for (int b = 1; b <= a; ++b) {
        for (int c = 0; c <= b; ++c) {
          std::vector<int> ks{a, b};
          if (c > 0) ks.push_back(c);
          if (n < a + b) continue;
          BigCount best;
          bool any = false;
          for (std::size_t i = 0; i < ks.size(); ++i) {
            if (ks[i] != a) continue;
            bool ok = true;
            for (std::size_t j = 0; j < ks.size(); ++j) ok = ok && (j == i || n >= ks[i] + ks[j]);
            if (!ok) continue;
            const BigCount v = bound_thm16(n, ks, i).value;
            if (!any || v > best) best = v;
            any = true;
          }
          if (any) CHECK(best == bound_thm17(n, ks).value);
        }
      }
    }
  }
}

TEST_CASE("two-family and uniform bounds") {
  CHECK(bound_hm(4, 2) == BigCount{6});
  CHECK(bound_hm(5, 2) == BigCount{8});
  for (int k = 1; k <= 10; ++k) CHECK(bound_hm(2 * k, k) == binom(2 * k, k));
  CHECK_THROWS_AS((void)bound_hm(3, 2), HypothesisError);

  CHECK(bound_ft(5, 3, 2, false).value == BigCount{10});
  CHECK(bound_ft(5, 3, 2, true).value == BigCount{10});
  const auto ft = bound_ft(4, 2, 2, true);
  CHECK(ft.value == BigCount{6});
  CHECK(ft.branches_coincide);
  CHECK_THROWS_AS((void)bound_ft(5, 2, 3, false), HypothesisError);

  auto s = bound_sfq15(4, 2, 2);
  CHECK(s.value == BigCount{6});
  CHECK(s.branch == Branch::Tie);
  s = bound_sfq15(6, 3, 3);
  CHECK(s.first == BigCount{21});
  CHECK(s.second == BigCount{30});
  CHECK(s.value == BigCount{30});
  s = bound_sfq15(6, 2, 3);
  CHECK(s.value == BigCount{15});
  CHECK(s.branch == Branch::AllStars);

  auto h = bound_hilton(6, 2, 2);
  CHECK(h.value == BigCount{15});
  CHECK(h.branch == Branch::FullFamily);
  h = bound_hilton(6, 2, 4);
  CHECK(h.value == BigCount{20});
  CHECK(h.branch == Branch::AllStars);
  h = bound_hilton(6, 2, 3);
  CHECK(h.branch == Branch::Tie);
}

TEST_CASE("weighted bound") {
  auto w = weighted_bound(5, 2, 3, 3, BigCount{1});
  CHECK(w.value == BigCount{10});
  CHECK(w.branch == Branch::Tie);
  w = weighted_bound(10, 7, 3, 3, BigCount{2});
  CHECK(w.first == BigCount{121});
  CHECK(w.second == BigCount{156});
  CHECK(w.value == BigCount{156});
  w = weighted_bound(6, 3, 3, 1, BigCount{1});
  CHECK(w.value == BigCount{20});
  CHECK(w.branch == Branch::Tie);
  CHECK_THROWS_AS((void)weighted_bound(5, 3, 3, 1, BigCount{1}), HypothesisError);
  CHECK_THROWS_AS((void)weighted_bound(8, 3, 3, 4, BigCount{1}), HypothesisError);
  CHECK_THROWS_AS((void)weighted_bound(8, 3, 3, 1, BigCount{0}), HypothesisError);
}

TEST_CASE("telescoping identities") {
  CHECK(lemma24_check(10, 5, 2));
  CHECK(lemma24_check(6, 3, 3));
  CHECK(lemma24_check(5, 5, 1));
  for (int n = 1; n <= 30; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int s = 1; s <= k; ++s) CHECK(lemma24_check(n, k, s));
    }
  }
  CHECK_THROWS((void)lemma24_check(3, 2, 4));
}

TEST_CASE("sum versus cover comparison") {
  auto c = lemma25_compare(5, std::vector<int>{3, 2});
  CHECK(c.ordering == std::strong_ordering::equal);
  CHECK(c.equality_predicted);
  CHECK(c.equality_condition_holds);
  c = lemma25_compare(6, std::vector<int>{3, 2});
  CHECK(c.ordering == std::strong_ordering::greater);
  CHECK(c.equality_condition_holds);
  c = lemma25_compare(7, std::vector<int>{3, 2, 2});
  CHECK(c.ordering == std::strong_ordering::greater);
  CHECK_THROWS_AS((void)lemma25_compare(7, std::vector<int>{2, 2}), HypothesisError);
  CHECK_THROWS_AS((void)lemma25_compare(7, std::vector<int>{3, 2, 1}), HypothesisError);
}
