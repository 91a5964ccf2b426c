#include <algorithm>
#include <catch2/catch.hpp>

#include "support.hpp"

using namespace borderbases;
using bbtest::q_points;
using bbtest::term_set;

TEST_CASE("brute force order ideals of three points") {
  auto x = q_points({{2, 3}, {1, 4}, {5, 0}});
  auto all = brute_force_all_order_ideals(x);
  REQUIRE(all == std::vector<OrderIdealSet>{term_set({"1", "x2", "x2^2"}, 2),
                                            term_set({"1", "x1", "x1^2"}, 2)});
}

TEST_CASE("brute force on a single point") {
  auto x = q_points({{3, 1}});
  auto all = brute_force_all_order_ideals(x);
  REQUIRE(all == std::vector<OrderIdealSet>{term_set({"1"}, 2)});
  REQUIRE(brute_force_all_quasi_order_ideals(x) == all);
}

TEST_CASE("brute force finds the unreachable order ideal") {
  auto x = q_points({{0, 0}, {0, -1}, {1, 0}, {1, 1}, {-1, 1}});
  auto all = brute_force_all_order_ideals(x);
  auto target = term_set({"1", "x1", "x2", "x1^2", "x2^2"}, 2);
  REQUIRE(std::count(all.begin(), all.end(), target) == 1);
}

TEST_CASE("quasi sets always contain the plain order ideals") {
  SplitMix64 rng(515151);
  for (int trial = 0; trial < 8; ++trial) {
    std::size_t s = 2 + rng.next() % 4, n = 1 + rng.next() % 2;
    auto x = bbtest::random_q_points(rng.next(), s, n);
    auto plain = brute_force_all_order_ideals(x);
    auto quasi = brute_force_all_quasi_order_ideals(x);
    for (const auto& oi : plain) REQUIRE(std::count(quasi.begin(), quasi.end(), oi) == 1);
  }
}

TEST_CASE("bounds are enforced") {
  auto x = bbtest::random_q_points(5, 8, 2);
  REQUIRE_THROWS_AS(brute_force_all_order_ideals(x), OracleTooLarge);
  OracleBounds wide{.max_points = 8, .max_arity = 4};
  REQUIRE_NOTHROW(brute_force_all_order_ideals(x, wide));
}

TEST_CASE("engines reproduce the oracle on random instances") {
  SplitMix64 rng(424242);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t s = 2 + rng.next() % 4, n = 1 + rng.next() % 3;
    auto keys = [](const auto& pairs) {
      std::vector<OrderIdealSet> out;
      for (const auto& p : pairs) out.push_back(p.order_ideal);
      return out;
    };
    if (trial % 2 == 0) {
      auto x = bbtest::random_q_points(rng.next(), s, n);
      REQUIRE(keys(bm_all_order_ideals(x).pairs) == brute_force_all_order_ideals(x));
      REQUIRE(keys(fg_all_quasi_order_ideals(x).pairs) == brute_force_all_quasi_order_ideals(x));
    } else {
      auto x = bbtest::random_fp_points(rng.next(), s, n, 11);
      REQUIRE(keys(bm_all_order_ideals(x).pairs) == brute_force_all_order_ideals(x));
      REQUIRE(keys(fg_all_quasi_order_ideals(x).pairs) == brute_force_all_quasi_order_ideals(x));
    }
  }
}
