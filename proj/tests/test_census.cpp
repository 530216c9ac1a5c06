#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "harmchoice/axioms.hpp"
#include "harmchoice/census.hpp"
#include "harmchoice/degree.hpp"
#include "oracle.hpp"

using namespace harmchoice;
using fixture::code_of;

namespace {

std::map<int, std::uint64_t> oracle_distribution(int n) {
  std::map<int, std::uint64_t> out;
  for (int s = 0; s < n; ++s) out[s] = 0;
  oracle::for_each_choice(n, [&](const oracle::Choice& c) { ++out[oracle::sp(c)]; });
  return out;
}

}  // namespace

TEST_CASE("census totals") {
  CHECK(count_choice_functions(2) == "2");
  CHECK(count_choice_functions(3) == "24");
  CHECK(count_choice_functions(4) == "20736");
  CHECK(count_choice_functions(5) == "309586821120");
  CHECK(code_of([] { enumerate_census(5); }) == ErrorCode::GroundSetTooLarge);
}

TEST_CASE("exact census at n = 2") {
  const auto r = enumerate_census(2);
  CHECK(r.exact);
  CHECK(r.total == "2");
  CHECK(r.counts_by_sp == std::map<int, std::uint64_t>{{0, 2}, {1, 0}});
  CHECK(r.strongly_harmful == 0);
  CHECK(r.strongly_harmful_fraction == 0.0);
}

TEST_CASE("exact census distributions match the brute-force oracle") {
  const auto r3 = enumerate_census(3);
  const auto o3 = oracle_distribution(3);
  CHECK(r3.counts_by_sp == o3);
  CHECK(r3.counts_by_sp == std::map<int, std::uint64_t>{{0, 6}, {1, 18}, {2, 0}});

  const auto r4 = enumerate_census(4, 2);
  const auto o4 = oracle_distribution(4);
  CHECK(r4.counts_by_sp == o4);
  CHECK(r4.counts_by_sp == std::map<int, std::uint64_t>{{0, 24}, {1, 2664}, {2, 16464}, {3, 1584}});
  CHECK(r4.strongly_harmful == 1584);
  CHECK(r4.strongly_harmful_fraction == doctest::Approx(1584.0 / 20736.0));
  std::uint64_t sum = 0;
  for (auto [s, k] : r4.counts_by_sp) sum += k;
  CHECK(sum == 20736);
}

TEST_CASE("choice_at enumerates every choice exactly once") {
  std::set<std::vector<std::uint8_t>> seen;
  for (std::uint64_t i = 0; i < 24; ++i) {
    const auto c = choice_at(3, i);
    seen.insert({c.picks().begin(), c.picks().end()});
  }
  CHECK(seen.size() == 24);
}

TEST_CASE("sampled census") {
  const auto exact = enumerate_census(4);
  const auto s = sample_census(4, 100000, kDefaultSeed, 2);
  CHECK_FALSE(s.exact);
  CHECK(s.seed == kDefaultSeed);
  CHECK(s.samples == 100000u);
  CHECK(std::abs(s.strongly_harmful_fraction - exact.strongly_harmful_fraction) <= s.half_width);
  const double p = s.strongly_harmful_fraction;
  CHECK(s.half_width == doctest::Approx(1.96 * std::sqrt(p * (1 - p) / 100000)));

  const auto again = sample_census(4, 100000, kDefaultSeed, 1);
  CHECK(again.strongly_harmful == s.strongly_harmful);
  CHECK(again.estimates_by_sp.at(2).hits == s.estimates_by_sp.at(2).hits);
  CHECK(sample_census(4, 100000, kDefaultSeed + 1, 1).strongly_harmful != s.strongly_harmful);
}

TEST_CASE("generate_harmful reproduces the fixtures") {
  const auto projects = fixture::load("projects");
  const auto& g = projects.ground;
  using fixture::menu;
  ExplicitIndices map{{{menu(g, {"h", "mh", "ml", "l"}), 0},
                       {menu(g, {"h", "ml", "l"}), 0},
                       {menu(g, {"h", "mh"}), 0},
                       {menu(g, {"h", "l"}), 0},
                       {menu(g, {"ml", "l"}), 0},
                       {menu(g, {"h", "mh", "l"}), 1},
                       {menu(g, {"h", "ml"}), 1},
                       {menu(g, {"mh", "ml"}), 1},
                       {menu(g, {"h", "mh", "ml"}), 2},
                       {menu(g, {"mh", "ml", "l"}), 2},
                       {menu(g, {"mh", "l"}), 2}}};
  const auto gen = generate_harmful(fixture::order(g, "h,mh,ml,l"), map);
  CHECK(gen.choice == projects.choice);
  CHECK(gen.menu_index[menu(g, {"mh", "l"}).mask()] == 2);

  const auto donation = fixture::load("donation");
  const auto& g1 = donation.ground;
  ExplicitIndices map1{{{menu(g1, {"0", "5", "20"}), 0},
                        {menu(g1, {"0", "5"}), 1},
                        {menu(g1, {"0", "20"}), 1},
                        {menu(g1, {"5", "20"}), 1}}};
  CHECK(generate_harmful(fixture::order(g1, "0,5,20"), map1).choice == donation.choice);

  const auto o = LinearOrder({2, 0, 3, 1});
  const auto fixed0 = generate_harmful(o, FixedIndex{0});
  CHECK(fixed0.choice == ChoiceFunction::maximizing(o));
  CHECK(sp(fixed0.choice).sp == 0);
}

TEST_CASE("generate_harmful validation") {
  const auto o = LinearOrder::identity(3);
  CHECK(code_of([&] { generate_harmful(o, FixedIndex{3}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { generate_harmful(o, FixedIndex{-1}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { generate_harmful(o, UniformIndexUpTo{5}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { generate_harmful(o, ExplicitIndices{{{Menu::of({0, 1}), 1}}}); }) ==
        ErrorCode::MissingMenu);
  ExplicitIndices dup{{{Menu::of({0, 1}), 1}, {Menu::of({0, 1}), 0}}};
  CHECK(code_of([&] { generate_harmful(o, dup); }) == ErrorCode::DuplicateMenu);
}

TEST_CASE("generated choices respect their cap") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    std::vector<Alternative> r(n);
    std::iota(r.begin(), r.end(), 0u);
    std::shuffle(r.begin(), r.end(), rng);
    const int cap = static_cast<int>(rng() % n);
    const auto gen = generate_harmful(LinearOrder(r), UniformIndexUpTo{cap}, rng());
    CHECK(sp(gen.choice).sp <= cap);
    CHECK(*std::max_element(gen.menu_index.begin() + 1, gen.menu_index.end()) <= cap);
  }
  const auto o = LinearOrder::identity(5);
  CHECK(generate_harmful(o, UniformIndexUpTo{3}, 42).choice == generate_harmful(o, UniformIndexUpTo{3}, 42).choice);
}

TEST_CASE("construct_inconsistent") {
  for (int k = 2; k <= 4; ++k) {
    const auto d = construct_inconsistent(k);
    CHECK(d.ground.size() == static_cast<std::size_t>(2 * k));
    CHECK(d.ground.label(0) == "x*");
    CHECK(is_inconsistent(d.choice));
    CHECK(oracle::inconsistent(oracle::from_library(d.choice)));
  }
  CHECK(sp_bruteforce(construct_inconsistent(2).choice).sp == 3);
  CHECK(code_of([] { construct_inconsistent(1); }) == ErrorCode::IndexOutOfRange);
}
