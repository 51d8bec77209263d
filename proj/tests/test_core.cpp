#include <algorithm>
#include <numeric>
#include <random>

#include "cif/bigcount.hpp"
#include "cif/canonical.hpp"
#include "cif/error.hpp"
#include "cif/family.hpp"
#include "cif/kset.hpp"
#include "cif/profile.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cif;

TEST_CASE("binom matches the Pascal triangle") {
  const auto t = oracle::pascal(120);
  for (int n = 0; n <= 120; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(binom(n, k).rep() == t[n][k]);
  }
  CHECK(binom(5, -1) == BigCount{0});
  CHECK(binom(5, 6) == BigCount{0});
  CHECK_THROWS_AS((void)binom(-1, 0), std::invalid_argument);
}

TEST_CASE("binom known values") {
  CHECK(binom(10, 5) == BigCount{252});
  CHECK(binom(0, 0) == BigCount{1});
  CHECK(binom(60, 30).to_string() == "118264581564861424");
  CHECK(binom(100, 50).to_string() == "100891344545564193334812497256");
}

TEST_CASE("BigCount arithmetic is checked") {
  const BigCount max = BigCount::from_rep(~BigCount::Rep{0});
  CHECK_THROWS_AS(max + BigCount{1}, std::overflow_error);
  CHECK_THROWS_AS(BigCount{1} - BigCount{2}, std::overflow_error);
  CHECK_THROWS_AS(max * BigCount{2}, std::overflow_error);
  CHECK_THROWS_AS(BigCount{1} / BigCount{0}, std::domain_error);
  CHECK((BigCount{7} * BigCount{6}).to_string() == "42");
  CHECK(BigCount::parse("340282366920938463463374607431768211455") == max);
  CHECK_THROWS((void)BigCount::parse("340282366920938463463374607431768211456"));
  CHECK_THROWS((void)BigCount::parse("12a"));
  CHECK_THROWS((void)BigCount::parse(""));
  CHECK_THROWS((void)max.to_u64());
}

TEST_CASE("lex_less agrees with tuple order") {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto sets = oracle::subsets(n, k);
      for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = 0; j < sets.size(); ++j) {
          CHECK(lex_less(oracle::to_mask(sets[i]), oracle::to_mask(sets[j])) == (sets[i] < sets[j]));
        }
      }
    }
  }
}

TEST_CASE("all_ksets, lex_rank and lex_unrank against enumeration") {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto ref = oracle::lex_masks(n, k);
      CHECK(all_ksets(n, k) == ref);
      for (std::size_t i = 0; i < ref.size(); ++i) {
        CHECK(lex_rank(KSet{ref[i], n}) == i);
        CHECK(lex_unrank(n, k, i).mask == ref[i]);
      }
      CHECK_THROWS_AS((void)lex_unrank(n, k, ref.size()), std::out_of_range);
    }
  }
}

TEST_CASE("lex rank round trip at n = 24") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 2000; ++t) {
    const int k = 1 + static_cast<int>(rng() % 24);
    const std::uint64_t total = binom(24, k).to_u64();
    const std::uint64_t idx = rng() % total;
    const KSet s = lex_unrank(24, k, idx);
    CHECK(s.size() == k);
    CHECK(lex_rank(s) == idx);
  }
  CHECK(lex_rank(KSet{mask_of(5, {1, 2, 3}), 5}) == 0);
  CHECK(lex_rank(KSet{mask_of(5, {3, 4, 5}), 5}) == 9);
}

TEST_CASE("kset validation") {
  CHECK_THROWS(validate_kset(KSet{mask_of(4, {1}), 0}));
  CHECK_THROWS(validate_kset(KSet{Mask{1} << 5, 4}));
  CHECK_THROWS((void)mask_of(4, {5}));
  CHECK(set_text(mask_of(9, {1, 5, 9})) == "1.5.9");
}

TEST_CASE("Family normalizes and validates") {
  const Family f(5, 2, {mask_of(5, {2, 3}), mask_of(5, {1, 2}), mask_of(5, {2, 3})});
  CHECK(f.size() == 2);
  CHECK(f.members()[0] == mask_of(5, {1, 2}));
  CHECK(f.contains(mask_of(5, {2, 3})));
  CHECK_FALSE(f.contains(mask_of(5, {1, 3})));
  CHECK_THROWS(Family(5, 2, {mask_of(5, {1, 2, 3})}));
  CHECK_THROWS(Family(3, 2, {Mask{0b11000}}));
}

TEST_CASE("lex_initial and is_L_initial") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto ref = oracle::lex_masks(n, k);
      for (std::size_t m = 0; m <= ref.size(); ++m) {
        const Family f = lex_initial(n, k, m);
        CHECK(std::equal(f.members().begin(), f.members().end(), ref.begin()));
        CHECK(f.size() == m);
        CHECK(is_L_initial(f));
      }
    }
  }
  CHECK_FALSE(is_L_initial(Family(4, 2, {mask_of(4, {1, 3})})));
  CHECK_THROWS((void)lex_initial(4, 2, 7));
}

TEST_CASE("cross-intersection predicates") {
  const Family a(4, 2, {mask_of(4, {1, 2})});
  const Family b(4, 2, {mask_of(4, {3, 4})});
  const Family c(4, 2, {mask_of(4, {1, 3}), mask_of(4, {2, 3})});
  CHECK_FALSE(is_cross_intersecting(a, b));
  CHECK(is_cross_intersecting(a, c));
  CHECK(is_cross_intersecting(a, Family(4, 2, {})));
  CHECK_THROWS(is_cross_intersecting(a, Family(5, 2, {})));
  CHECK(is_intersecting(c));
  CHECK_FALSE(is_intersecting(Family(4, 2, {mask_of(4, {1, 2}), mask_of(4, {3, 4})})));
  const Family comp = complement_family(c);
  CHECK(comp.k() == 2);
  CHECK(comp.contains(mask_of(4, {2, 4})));
  CHECK(comp.contains(mask_of(4, {1, 4})));
}

TEST_CASE("family text round trip") {
  const Family f(6, 3, {mask_of(6, {1, 2, 3}), mask_of(6, {2, 4, 6})});
  CHECK(to_text(f) == "n=6 k=3 {1.2.3, 2.4.6}");
  CHECK(parse_family(to_text(f)) == f);
  CHECK(parse_family("n=4 k=2 {}") == Family(4, 2, {}));
  CHECK(parse_family("  n=4  k=2 { 1.2 ,3.4 } ").size() == 2);
  CHECK_THROWS_AS((void)parse_family("n=4 k=2 {1.2"), ParseError);
  CHECK_THROWS_AS((void)parse_family("n=4 {1.2}"), ParseError);
  CHECK_THROWS_AS((void)parse_family("n=4 k=2 {1.5}"), ParseError);
  CHECK_THROWS_AS((void)parse_family("n=4 k=2 {1.2.3}"), ParseError);
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + static_cast<int>(rng() % 4);
    std::vector<Family> fams;
    for (int k : {2, 1 + static_cast<int>(rng() % 2)}) {
      std::vector<Mask> ms;
      for (Mask m : all_ksets(n, k)) {
        if (rng() % 2) ms.push_back(m);
      }
      fams.emplace_back(n, k, ms);
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(fams) == canonical_form(permute_families(fams, perm)));
  }
}

TEST_CASE("canonical form separates non-isomorphic tuples") {
  // A star and a triangle of 2-sets on [4] have the same size.
  const Family star(4, 2, {mask_of(4, {1, 2}), mask_of(4, {1, 3}), mask_of(4, {1, 4})});
  const Family tri(4, 2, {mask_of(4, {1, 2}), mask_of(4, {1, 3}), mask_of(4, {2, 3})});
  CHECK_FALSE(canonical_form(std::vector{star}) == canonical_form(std::vector{tri}));
  // Tuple order matters.
  const Family one(4, 1, {mask_of(4, {1})});
  CHECK_FALSE(canonical_form(std::vector{star, one}) == canonical_form(std::vector{one, star}));
  CHECK(canonical_form(std::vector{star}).to_text() == "n=4 k=2 {1.2, 1.3, 1.4}");
  CHECK_THROWS_AS((void)canonical_form(std::vector{lex_initial(11, 1, 1)}), CapExceeded);
}

TEST_CASE("profile parsing and hypotheses") {
  CHECK(parse_k_list("5,3,2") == std::vector<int>{5, 3, 2});
  CHECK_THROWS((void)parse_k_list("5,,2"));
  CHECK_THROWS((void)parse_k_list("5,x"));
  const Profile p{10, {5, 3, 2}, 2};
  CHECK(p.text() == "n=10 k=5,3,2 istar=3");
  CHECK(p.kbar(2) == 3);
  CHECK_FALSE(p.ordered_hypothesis_failure());
  CHECK_FALSE(p.conditional_hypothesis_failure(2));
  CHECK(Profile{3, {2, 2}, std::nullopt}.ordered_hypothesis_failure());
  CHECK(Profile{8, {2, 3}, std::nullopt}.ordered_hypothesis_failure());
  CHECK(Profile{7, {5, 3, 2}, std::nullopt}.conditional_hypothesis_failure(0));
  CHECK_THROWS(Profile{4, {5, 1}, std::nullopt}.validate());
  CHECK_THROWS(Profile{4, {2}, std::nullopt}.validate());
  CHECK_THROWS_AS((Profile{25, {2, 2}, std::nullopt}.validate()), CapExceeded);
}
