#include <hesslab/permutation.hpp>

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

using namespace hesslab;

TEST_CASE("group operations") {
  const Permutation w({3, 1, 4, 2});
  CHECK(w * w.inverse() == Permutation::identity(4));
  CHECK(w.inverse() * w == Permutation::identity(4));
  CHECK(Permutation::longest_element(4).length() == 6);
  CHECK(Permutation::simple_reflection(2, 4) == Permutation({1, 3, 2, 4}));
  CHECK(w.length() == 3);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1, 2}), std::invalid_argument);
}

TEST_CASE("tableau entries") {
  const Permutation w({5, 2, 3, 4, 1});
  CHECK(tableau_entry(w, 2, 4) == 3);
  CHECK(tableau_entry(w, 1, 1) == w(1));
  CHECK(tableau_entry(Permutation({4, 3, 2, 1}), 3, 3) == 4);
  CHECK_THROWS_AS(tableau_entry(w, 3, 2), std::out_of_range);
  CHECK_THROWS_AS(tableau_entry(w, 1, 6), std::out_of_range);
}

TEST_CASE("bruhat order basics") {
  const Permutation w({4, 2, 3, 1});
  CHECK(bruhat_leq(Permutation::identity(4), w));
  CHECK(bruhat_leq(w, w));
  CHECK_THROWS_AS(bruhat_leq(Permutation::identity(3), w), std::invalid_argument);
  // [2143] <= [4231]: fixed by the subword oracle
  const bool oracle =
      oracles::interval_by_subwords(w).count(Permutation({2, 1, 4, 3})) > 0;
  CHECK(bruhat_leq(Permutation({2, 1, 4, 3}), w) == oracle);
}

TEST_CASE("rank conditions give a third route to the Bruhat order") {
  // v <= w iff r_{p,q}(v) >= r_{p,q}(w) for all p, q
  for (int n = 2; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (const Permutation& v : perms)
      for (const Permutation& w : perms) {
        bool dominates = true;
        for (int p = 1; p <= n && dominates; ++p)
          for (int q = 1; q <= n && dominates; ++q)
            if (rank_count(v, p, q) < rank_count(w, p, q)) dominates = false;
        CHECK(bruhat_leq(v, w) == dominates);
      }
  }
  CHECK_THROWS_AS(rank_count(Permutation::identity(3), 0, 1), std::out_of_range);
}

TEST_CASE("bruhat order matches the reduced-word subword oracle, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    const auto perms = all_permutations(n);
    for (const Permutation& w : perms) {
      const auto interval = oracles::interval_by_subwords(w);
      for (const Permutation& v : perms)
        REQUIRE(bruhat_leq(v, w) == (interval.count(v) > 0));
    }
  }
}

TEST_CASE("bruhat order is a partial order with the classical symmetries") {
  for (int n = 2; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    const Permutation w0 = Permutation::longest_element(n);
    for (const Permutation& v : perms)
      for (const Permutation& w : perms) {
        const bool vw = bruhat_leq(v, w);
        if (vw && bruhat_leq(w, v)) CHECK(v == w);
        CHECK(vw == bruhat_leq(v.inverse(), w.inverse()));
        CHECK(vw == bruhat_leq(w * w0, v * w0));
      }
    // transitivity on a sample plane: v <= u <= w implies v <= w
    for (const Permutation& v : perms)
      for (const Permutation& u : perms) {
        if (!bruhat_leq(v, u)) continue;
        for (const Permutation& w : perms)
          if (bruhat_leq(u, w)) CHECK(bruhat_leq(v, w));
      }
  }
}

TEST_CASE("pattern containment") {
  const Permutation w({6, 3, 1, 5, 2, 4});
  const auto hit = contains_pattern(w, Permutation({4, 2, 3, 1}));
  REQUIRE(hit.has_value());
  CHECK(*hit == std::vector<int>{1, 2, 4, 5});
  CHECK_FALSE(contains_pattern(w, Permutation({4, 3, 2, 1})).has_value());
  const auto one = contains_pattern(w, Permutation({1}));
  REQUIRE(one.has_value());
  CHECK(*one == std::vector<int>{1});
}

TEST_CASE("pattern containment transposes to inverses") {
  // w contains p iff w^{-1} contains p^{-1}
  for (const Permutation& w : all_permutations(5))
    for (const auto& pw : {std::vector<int>{2, 3, 1}, std::vector<int>{4, 2, 3, 1},
                           std::vector<int>{1, 3, 2, 4}}) {
      const Permutation p(pw);
      CHECK(contains_pattern(w, p).has_value() ==
            contains_pattern(w.inverse(), p.inverse()).has_value());
    }
}

TEST_CASE("avoider counts") {
  const Permutation p({4, 2, 3, 1});
  CHECK(count_avoiders(4, Permutation({1})) == 0);
  CHECK(count_avoiders(3, p) == 6);
  for (int n = 4; n <= 6; ++n) CHECK(count_avoiders(n, p) == oracles::count_avoiders_brute(n, p));
  // ratio |S_n(p)|/n! strictly decreasing on an initial stretch
  double prev = 2.0;
  long long fact = 6;
  for (int n = 4; n <= 7; ++n) {
    fact *= n;
    const double ratio = double(count_avoiders(n, p)) / double(fact);
    CHECK(ratio < prev);
    prev = ratio;
  }
}

TEST_CASE("lower intervals") {
  CHECK(lower_interval(Permutation::identity(4)).members.size() == 1);
  CHECK(lower_interval(Permutation::longest_element(4)).members.size() == 24);
  for (int n = 3; n <= 6; ++n) {
    long long fact = 1;
    for (int t = 2; t <= n; ++t) fact *= t;
    for (int i = 1; i < n; ++i) {
      long long fi = 1, fni = 1;
      for (int t = 2; t <= i; ++t) fi *= t;
      for (int t = 2; t <= n - i; ++t) fni *= t;
      const Permutation w = Permutation::simple_reflection(i, n) * Permutation::longest_element(n);
      CHECK(lower_interval_size(w) == fact - fi * fni);
    }
  }
  CHECK_THROWS_AS(lower_interval(Permutation::identity(9)), std::invalid_argument);
}

TEST_CASE("signed permutations") {
  CHECK(is_signed(Permutation::identity(4)));
  CHECK(is_signed(Permutation({2, 1, 4, 3})));
  CHECK_FALSE(is_signed(Permutation({2, 1, 3, 4})));
  CHECK_THROWS_AS(is_signed(Permutation({2, 1, 3})), std::invalid_argument);

  for (int n = 1; n <= 3; ++n) {
    const auto group = signed_permutations(2 * n);
    long long expect = 1;
    for (int t = 1; t <= n; ++t) expect *= 2 * t;
    CHECK(static_cast<long long>(group.size()) == expect);  // 2^n n!
    // subgroup: closed under product and inverse
    std::set<Permutation> set(group.begin(), group.end());
    for (const Permutation& a : group) {
      CHECK(set.count(a.inverse()) == 1);
      for (const Permutation& b : group) CHECK(set.count(a * b) == 1);
    }
  }
}
