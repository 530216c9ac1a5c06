#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "harmchoice/axioms.hpp"
#include "oracle.hpp"

using namespace harmchoice;
using fixture::code_of;

namespace {

std::set<Alternative> as_set(const std::vector<Alternative>& v) { return {v.begin(), v.end()}; }

std::set<std::pair<Menu::Mask, Menu::Mask>> menu_pairs(const std::vector<Reversal>& revs) {
  std::set<std::pair<Menu::Mask, Menu::Mask>> out;
  for (const auto& r : revs) out.insert({r.first.mask(), r.second.mask()});
  return out;
}

}  // namespace

TEST_CASE("find_reversals on the fixtures") {
  const auto single = fixture::load("single_reversal");
  const auto& g = single.ground;
  const auto revs = find_reversals(single.choice);
  REQUIRE(revs.size() == 1);
  CHECK(((revs[0].first == fixture::menu(g, {"x", "y"}) && revs[0].second == fixture::menu(g, {"x", "y", "z"}))));
  CHECK(as_set({revs[0].first_pick, revs[0].second_pick}) == as_set({fixture::id(g, "x"), fixture::id(g, "y")}));

  CHECK(find_reversals(ChoiceFunction::maximizing(LinearOrder::identity(5))).empty());

  const auto incons = fixture::load("inconsistent4");
  std::set<std::pair<Alternative, Alternative>> pairs;
  for (const auto& r : find_reversals(incons.choice))
    pairs.insert({std::min(r.first_pick, r.second_pick), std::max(r.first_pick, r.second_pick)});
  CHECK(pairs.size() == 6);
}

TEST_CASE("satisfies_warp") {
  const GroundSet g({"0", "5", "20"});
  CHECK(satisfies_warp(ChoiceFunction::maximizing(fixture::order(g, "0,5,20"))));
  CHECK_FALSE(satisfies_warp(fixture::load("single_reversal").choice));
  const auto donation = fixture::load("donation");
  CHECK_FALSE(satisfies_warp(donation.choice));
  CHECK(menu_pairs(find_reversals(donation.choice)).count(
            {fixture::menu(donation.ground, {"0", "5"}).mask(), fixture::menu(donation.ground, {"0", "5", "20"}).mask()}) == 1);
}

TEST_CASE("constant_selection_witnesses") {
  const auto donation = fixture::load("donation");
  CHECK(constant_selection_witnesses(donation.choice) == std::vector<Alternative>{fixture::id(donation.ground, "0")});
  const auto single = fixture::load("single_reversal");
  CHECK(constant_selection_witnesses(single.choice) ==
        std::vector<Alternative>{fixture::id(single.ground, "x"), fixture::id(single.ground, "y")});
  CHECK_FALSE(constant_selection_witnesses(ChoiceFunction::maximizing(LinearOrder::identity(4))));
  CHECK_FALSE(constant_selection_witnesses(fixture::load("inconsistent4").choice));
}

TEST_CASE("check_cns on the fixtures") {
  const auto single = fixture::load("single_reversal");
  const auto w = check_cns(single.choice, 1);
  REQUIRE(w);
  REQUIRE(w->items.size() == 1);
  CHECK((w->items[0] == fixture::id(single.ground, "x") || w->items[0] == fixture::id(single.ground, "y")));
  REQUIRE(w->paired_reversals.size() == 1);
  CHECK(w->paired_reversals[0] == find_reversals(single.choice)[0]);
  CHECK_FALSE(check_cns(single.choice, 2));

  const auto incons = fixture::load("inconsistent4");
  const auto w5 = check_cns(incons.choice, 3);
  REQUIRE(w5);
  CHECK(w5->items.size() == 3);
  for (std::size_t h = 0; h < 3; ++h) {
    const auto& r = w5->paired_reversals[h];
    const bool first = r.first_pick == w5->items[h];
    CHECK((first || r.second_pick == w5->items[h]));
    const Alternative other = first ? r.second_pick : r.first_pick;
    CHECK(std::find(w5->items.begin(), w5->items.end(), other) == w5->items.end());
  }

  CHECK(code_of([&] { check_cns(single.choice, 0); }) == ErrorCode::InvalidJ);
  CHECK(code_of([&] { check_cns(single.choice, 3); }) == ErrorCode::InvalidJ);
}

TEST_CASE("is_inconsistent") {
  CHECK(is_inconsistent(fixture::load("inconsistent4").choice));
  CHECK_FALSE(is_inconsistent(fixture::load("single_reversal").choice));
  CHECK_FALSE(is_inconsistent(ChoiceFunction::maximizing(LinearOrder::identity(3))));
}

TEST_CASE("axioms agree with the oracle on every choice at n = 3, 4") {
  for (int n = 3; n <= 4; ++n) {
    std::size_t count = 0;
    oracle::for_each_choice(n, [&](const oracle::Choice& oc) {
      ++count;
      const auto c = oracle::to_library(oc);
      const auto revs = oracle::reversals(oc);

      const auto lib_revs = find_reversals(c);
      REQUIRE(lib_revs.size() == revs.size());
      for (const auto& r : lib_revs) {
        CHECK(r.first_pick == c(r.first));
        CHECK(r.second_pick == c(r.second));
        CHECK(r.first_pick != r.second_pick);
        CHECK(canonical_less(r.first, r.second));
        const Menu::Mask both = r.first.mask() & r.second.mask();
        CHECK(((both >> r.first_pick) & (both >> r.second_pick) & 1u) == 1u);
      }
      CHECK(satisfies_warp(c) == revs.empty());
      CHECK(is_inconsistent(c) == oracle::inconsistent(oc));

      const auto cs = constant_selection_witnesses(c);
      const auto ocs = oracle::constant_selection(oc);
      CHECK(cs.has_value() == !ocs.empty());
      if (cs) {
        CHECK(as_set(*cs) == std::set<Alternative>(ocs.begin(), ocs.end()));
        CHECK((cs->size() == 1 || cs->size() == 2));
      }

      int hits = 0;
      for (int j = 1; j < n; ++j) {
        const auto w = check_cns(c, j);
        const auto sets = oracle::cns_sets(oc, j);
        REQUIRE(w.has_value() == !sets.empty());
        if (!w) continue;
        ++hits;
        CHECK(std::set<int>(w->items.begin(), w->items.end()) == *std::min_element(sets.begin(), sets.end()));
      }
      CHECK(hits == (revs.empty() ? 0 : 1));
      CHECK(check_cns(c, 1).has_value() == cs.has_value());
      CHECK(check_cns(c, n - 1).has_value() == is_inconsistent(c));
    });
    CHECK(count == (n == 3 ? 24u : 20736u));
  }
}

TEST_CASE("one-item ground set") {
  // Every pair of distinct items is co-selected vacuously, matching sp = n - 1 = 0.
  const auto c = ChoiceFunction::maximizing(LinearOrder::identity(1));
  CHECK(satisfies_warp(c));
  CHECK(is_inconsistent(c));
  CHECK(find_reversals(c).empty());
}
