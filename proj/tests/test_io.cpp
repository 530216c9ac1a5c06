#include "doctest.h"
#include "fixtures.hpp"
#include "harmchoice/io.hpp"
#include "harmchoice/report.hpp"

using namespace harmchoice;
using fixture::code_of;

TEST_CASE("JSON and text fixtures load the same choice") {
  for (const char* name : {"donation", "dishes", "projects", "single_reversal", "inconsistent4"}) {
    const auto j = fixture::load(name);
    const auto t = load_dataset(fixture::data_path(std::string(name) + ".txt"));
    CHECK(j.ground == t.ground);
    CHECK(j.choice == t.choice);
  }
  const auto single = fixture::load("single_reversal");
  CHECK(single.ground.labels() == std::vector<std::string>{"x", "y", "z"});
  CHECK(single.warnings.size() == 3);
}

TEST_CASE("dataset errors carry row locations") {
  try {
    load_dataset(fixture::data_path("duplicate.txt"));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateMenu);
    CHECK(std::string(e.what()).find("rows 2 and 5") != std::string::npos);
  }
  CHECK(code_of([] { load_dataset(fixture::data_path("missing.txt")); }) == ErrorCode::MissingMenu);
  try {
    load_dataset(fixture::data_path("bad_pick.json"));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PickNotInMenu);
    CHECK(std::string(e.what()).find("row 2") != std::string::npos);
  }
  CHECK(code_of([] { load_dataset(fixture::data_path("nonexistent.json")); }) == ErrorCode::ParseError);
}

TEST_CASE("malformed input is a ParseError") {
  CHECK(code_of([] { parse_dataset("{"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_dataset(R"({"alternatives": ["a"], "choices": 3})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_dataset(R"({"version": 2, "alternatives": ["a"], "choices": []})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] {
          parse_dataset(R"({"alternatives": ["a", "b"], "choices": [{"menu": ["a", "q"], "choice": "a"}]})");
        }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_dataset("a, b => a\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_dataset("alternatives: a, b\na, c -> a\n"); }) == ErrorCode::ParseError);
}

TEST_CASE("text format details") {
  const auto d = parse_dataset("# comment\n\nb, a -> a\n");
  CHECK(d.ground.labels() == std::vector<std::string>{"b", "a"});
  CHECK(d.choice(Menu::of({0, 1})) == 1u);
  CHECK(d.warnings.size() == 2);
}

TEST_CASE("analysis reports round-trip through JSON") {
  for (const char* name : {"donation", "dishes", "projects", "single_reversal", "inconsistent4"}) {
    const auto report = analyze(fixture::load(name));
    const auto json = to_json(report);
    CHECK(analysis_report_from_json(json) == report);
    CHECK(analysis_report_from_json(ReportJson::parse(json.dump())) == report);
    if (report.sp.sp == 0) {
      CHECK(report.reversals.empty());
      CHECK(report.elicited_orders.empty());
    }
  }
}

TEST_CASE("analyze collects the full picture") {
  const auto r5 = analyze(fixture::load("inconsistent4"));
  CHECK_FALSE(r5.warp);
  CHECK(r5.inconsistent);
  CHECK(r5.sp.sp == 3);
  REQUIRE(r5.partial_order);
  CHECK_FALSE(r5.elicited_orders.empty());

  const auto r4 = analyze(fixture::load("single_reversal"));
  CHECK(r4.sp.sp == 1);
  CHECK(r4.elicited_orders.size() == 2);
  CHECK(r4.reversals.size() == 1);
  CHECK(r4.menu_count == 7);

  const Dataset rational{GroundSet::letters(3), ChoiceFunction::maximizing(LinearOrder::identity(3)), {}};
  const auto r0 = analyze(rational);
  CHECK(r0.warp);
  CHECK(r0.sp.sp == 0);
  CHECK_FALSE(r0.partial_order);
  CHECK(to_json(r0)["partial_order"].is_null());
}

TEST_CASE("census reports serialize with stable fields") {
  const auto j = to_json(enumerate_census(3));
  CHECK(j["n"] == 3);
  CHECK(j["mode"] == "exact");
  CHECK(j["total"] == "24");
  CHECK(j["counts_by_sp"].size() == 3);
  CHECK(j["strongly_harmful"] == 0);
}
