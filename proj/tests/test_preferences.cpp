#include <stdexcept>
#include <vector>

#include "barternet/preference.hpp"
#include "doctest.h"

using namespace barternet;

TEST_SUITE("preferences") {

TEST_CASE("construction validates good ids") {
  CHECK_NOTHROW(PreferenceOrder({3, 1, 2}));
  CHECK_NOTHROW(PreferenceOrder{});
  CHECK(PreferenceOrder{}.empty());
  CHECK_THROWS_AS(PreferenceOrder({1, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PreferenceOrder({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PreferenceOrder({-3}), std::invalid_argument);
}

TEST_CASE("rank queries") {
  PreferenceOrder p({3, 1, 2});
  CHECK(p.size() == 3);
  CHECK(p.goods() == std::vector<GoodId>{3, 1, 2});
  CHECK(p.rank_of(3) == 0);
  CHECK(p.rank_of(1) == 1);
  CHECK(p.rank_of(2) == 2);
  CHECK(p.ranks(2));
  CHECK_FALSE(p.ranks(4));
  CHECK(p.prefers(3, 2));
  CHECK_FALSE(p.prefers(2, 3));
  CHECK_FALSE(p.prefers(1, 1));
  CHECK(p.weakly_prefers(1, 1));
  CHECK_THROWS_AS(p.rank_of(9), std::invalid_argument);
  CHECK_THROWS_AS(p.prefers(1, 9), std::invalid_argument);
}

TEST_CASE("restriction keeps relative order") {
  PreferenceOrder p({5, 3, 6, 8, 2, 1, 4, 7});
  CHECK(p.restricted_to({1, 4, 5}) == PreferenceOrder({5, 1, 4}));
  CHECK(p.restricted_to({8}) == PreferenceOrder({8}));
  CHECK(p.restricted_to({}) == PreferenceOrder{});
  CHECK_THROWS_AS(p.restricted_to({5, 9}), std::invalid_argument);
}

TEST_CASE("top choice over a menu") {
  PreferenceOrder p({5, 3, 6, 8, 2, 1, 4, 7});
  CHECK(p.top_choice({1, 4, 5}) == 5);
  CHECK(p.top_choice({7}) == 7);
  CHECK(p.top_choice({4, 7, 1, 2}) == 2);
  CHECK_THROWS_AS(p.top_choice({}), std::invalid_argument);
  CHECK_THROWS_AS(p.top_choice({1, 9}), std::invalid_argument);
}

TEST_CASE("equality is by ranking") {
  CHECK(PreferenceOrder({1, 2}) == PreferenceOrder({1, 2}));
  CHECK(PreferenceOrder({1, 2}) != PreferenceOrder({2, 1}));
  CHECK(PreferenceOrder({1, 2}) != PreferenceOrder({1, 2, 3}));
}

}  // TEST_SUITE
