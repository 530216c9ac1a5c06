#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "harmchoice/axioms.hpp"
#include "harmchoice/core.hpp"
#include "harmchoice/io.hpp"
#include "oracle.hpp"

using namespace harmchoice;
using fixture::code_of;

namespace {

std::vector<ChoiceRow> single_reversal_rows(const GroundSet& g) {
  using fixture::id, fixture::menu;
  return {{menu(g, {"x", "y", "z"}), id(g, "x")},
          {menu(g, {"x", "y"}), id(g, "y")},
          {menu(g, {"y", "z"}), id(g, "z")},
          {menu(g, {"x", "z"}), id(g, "x")}};
}

}  // namespace

TEST_CASE("max_of picks the best member") {
  const GroundSet g({"h", "mh", "ml", "l"});
  CHECK(max_of(fixture::menu(g, {"h", "mh", "l"}), fixture::order(g, "h,mh,ml,l")) == 0u);

  const GroundSet xyz({"x", "y", "z"});
  CHECK(max_of(fixture::menu(xyz, {"z"}), fixture::order(xyz, "x,y,z")) == 2u);
  CHECK(max_of(fixture::menu(xyz, {"x", "y"}), fixture::order(xyz, "z,y,x")) == 1u);
  CHECK(code_of([&] { max_of(Menu::of({5}), LinearOrder::identity(3)); }) == ErrorCode::InvalidMenu);
}

TEST_CASE("max_of never has a better member in the menu") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    std::vector<Alternative> r(n);
    std::iota(r.begin(), r.end(), 0u);
    std::shuffle(r.begin(), r.end(), rng);
    const LinearOrder order(r);
    const Menu m = Menu::from_mask(1 + static_cast<Menu::Mask>(rng() % ((1u << n) - 1)));
    const Alternative best = max_of(m, order);
    CHECK(m.contains(best));
    for (Alternative b : m.members()) CHECK(order.position(best) <= order.position(b));
  }
}

TEST_CASE("validate_choice accepts a total table and fills singletons") {
  const GroundSet g({"x", "y", "z"});
  auto rows = single_reversal_rows(g);
  const auto partial = validate_choice(rows, g);
  CHECK(partial.warnings.size() == 3);
  for (Alternative a = 0; a < 3; ++a) rows.push_back({Menu::of({a}), a});
  const auto full = validate_choice(rows, g);
  CHECK(full.warnings.empty());
  CHECK(full.choice == partial.choice);
  CHECK(full.choice.menu_count() == 7);
  CHECK(full.choice(fixture::menu(g, {"x", "y"})) == fixture::id(g, "y"));
}

TEST_CASE("validate_choice rejects invalid datasets") {
  const GroundSet g({"x", "y", "z"});
  auto rows = single_reversal_rows(g);

  SUBCASE("missing menu") {
    rows.pop_back();  // {x,z}
    try {
      validate_choice(rows, g);
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MissingMenu);
      CHECK(std::string(e.what()).find("{x,z}") != std::string::npos);
    }
  }
  SUBCASE("pick outside menu") {
    rows[1].pick = fixture::id(g, "z");
    CHECK(code_of([&] { validate_choice(rows, g); }) == ErrorCode::PickNotInMenu);
  }
  SUBCASE("duplicate menu") {
    rows.push_back({fixture::menu(g, {"y", "x"}), fixture::id(g, "x")});
    try {
      validate_choice(rows, g);
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DuplicateMenu);
      CHECK(std::string(e.what()).find("rows 2 and 5") != std::string::npos);
    }
  }
  SUBCASE("menu outside ground set") {
    rows.push_back({Menu::of({0, 3}), 0});
    CHECK(code_of([&] { validate_choice(rows, g); }) == ErrorCode::InvalidMenu);
  }
}

TEST_CASE("primitive validation") {
  CHECK(code_of([] { GroundSet({}); }) == ErrorCode::InvalidGroundSet);
  CHECK(code_of([] { GroundSet({"a", "a"}); }) == ErrorCode::InvalidGroundSet);
  CHECK(code_of([] { GroundSet({"a", ""}); }) == ErrorCode::InvalidGroundSet);
  CHECK(code_of([] { Menu::from_mask(0); }) == ErrorCode::InvalidMenu);
  CHECK(code_of([] { LinearOrder({0, 0, 1}); }) == ErrorCode::InvalidOrder);
  CHECK(code_of([] { LinearOrder({0, 3, 1}); }) == ErrorCode::InvalidOrder);
  CHECK(code_of([] { ChoiceFunction::check_size(21); }) == ErrorCode::GroundSetTooLarge);
  CHECK(code_of([] { ChoiceFunction::from_picks(2, {0, 1, 1, 0}); }) == ErrorCode::PickNotInMenu);
  const GroundSet g({"a", "b"});
  CHECK(code_of([&] { parse_order("a", g); }) == ErrorCode::InvalidOrder);
  CHECK(code_of([&] { parse_order("a,c", g); }) == ErrorCode::InvalidOrder);
  CHECK(code_of([&] { parse_order("a,a", g); }) == ErrorCode::InvalidOrder);
  CHECK(parse_order(" b , a ", g) == LinearOrder({1, 0}));
}

TEST_CASE("canonical menu order is size first then lexicographic") {
  const auto& order = MenuOrder::of(3);
  std::vector<std::vector<Alternative>> got;
  for (Menu m : order.menus()) got.push_back(m.members());
  const std::vector<std::vector<Alternative>> want = {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
  CHECK(got == want);
  for (std::size_t r = 0; r < order.menus().size(); ++r) CHECK(order.rank(order.menus()[r]) == r);

  // Same order as sorting the member lists with the oracle's comparison.
  auto ms = oracle::menus(5);
  std::sort(ms.begin(), ms.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  const auto& five = MenuOrder::of(5);
  REQUIRE(ms.size() == five.menus().size());
  for (std::size_t r = 0; r < ms.size(); ++r) {
    const auto m = five.menus()[r].members();
    CHECK(oracle::Items(m.begin(), m.end()) == ms[r]);
  }
}

TEST_CASE("maximizing choices satisfy WARP and match the oracle") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& o : oracle::all_orders(n)) {
      const auto c = ChoiceFunction::maximizing(oracle::to_library(o));
      CHECK(satisfies_warp(c));
      CHECK(oracle::from_library(c).pick == oracle::maximization(o).pick);
    }
}

TEST_CASE("serialization round trip reproduces picks") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto c = ChoiceFunction::tabulate(n, [&](Menu m) {
      const auto mem = m.members();
      return mem[rng() % mem.size()];
    });
    const GroundSet g = GroundSet::letters(n);
    CHECK(parse_dataset(dataset_to_json(g, c)).choice == c);
    CHECK(parse_dataset(dataset_to_text(g, c)).choice == c);
  }
}
