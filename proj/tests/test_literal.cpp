#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "support.hpp"
#include "upnat/errors.hpp"
#include "upnat/literal.hpp"

using namespace upnat;

namespace {

const std::vector<Nat> kNone;

// Position reported by a SyntaxError, or -1 if parsing succeeded.
long syntax_position(const std::string& text) {
  try {
    parse_set(text);
  } catch (const SyntaxError& e) {
    return static_cast<long>(e.position());
  }
  return -1;
}

}  // namespace

TEST_CASE("parse_set examples") {
  CHECK(parse_set("{5,6}+4N") == UPSet::make(kNone, 5, 4, std::vector<Nat>{1, 2}));
  CHECK(parse_set("{0,3,4}|6+N") ==
        UPSet::make(std::vector<Nat>{0, 3, 4}, 6, 1, std::vector<Nat>{0}));
  CHECK(parse_set("{}") == UPSet::empty());
  CHECK(parse_set("N") == UPSet::naturals());
  CHECK(parse_set("0+N") == UPSet::naturals());
  CHECK(parse_set("{1,2,3}") == UPSet::finite(std::vector<Nat>{1, 2, 3}));
  CHECK(parse_set("2N") == UPSet::progression(0, 2));
  CHECK(parse_set("  3 + 2 N ") == UPSet::progression(3, 2));
  CHECK(parse_set("{}+4N").is_empty());
}

TEST_CASE("parse_set operators") {
  CHECK(parse_set("1+4N | 3+4N") == UPSet::progression(1, 2));
  CHECK(parse_set("2N & 3N") == UPSet::progression(0, 6));
  CHECK(parse_set("({5,6}+4N)-6") == parse_set("{0,3}+4N"));
  CHECK(parse_set("{5,6}+4N-6") == parse_set("{0,3}+4N"));
  // & binds tighter than |.
  CHECK(parse_set("{1}|2N&3N") == parse_set("{1}|6N"));
  CHECK(parse_set("({1}|2N)&3N") == parse_set("6N"));
  CHECK(parse_set("{5,6}+4N-2-4") == parse_set("{5,6}+4N-6"));
}

TEST_CASE("syntax errors carry a position") {
  CHECK(syntax_position("{5,6}+4N") == -1);
  CHECK(syntax_position("") == 0);
  CHECK(syntax_position("{5,6") == 4);
  CHECK(syntax_position("{5,,6}") == 3);
  CHECK(syntax_position("5") == 1);
  CHECK(syntax_position("N x") == 2);
  CHECK(syntax_position("(2N") == 3);
  CHECK(syntax_position("{1}|") == 4);
  CHECK(syntax_position("2N#") == 2);
  CHECK_THROWS_AS(parse_set("99999999999999999999999+N"), SyntaxError);
  CHECK_THROWS_AS(parse_set("1+0N"), SyntaxError);
}

TEST_CASE("format_set examples") {
  CHECK(format_set(UPSet::empty()) == "{}");
  CHECK(format_set(UPSet::naturals()) == "N");
  CHECK(format_set(UPSet::finite(std::vector<Nat>{4, 1})) == "{1,4}");
  CHECK(format_set(parse_set("{5,6}+4N")) == "{5,6}+4N");
  CHECK(format_set(parse_set("{3,5}+4N")) == "3+2N");
  CHECK(format_set(parse_set("{0,3,4}|6+N")) == "{0,3,4}|6+N");
  CHECK(format_set(parse_set("{0,4,8}+3N")) == "{0,3,4}|6+N");
  CHECK(format_set(parse_set("6+N")) == "6+N");
  CHECK(format_set(parse_set("{1}|7+3N")) == "{1}|7+3N");
}

TEST_CASE("property: parse_set(format_set(s)) == s") {
  oracle::Lcg64 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const UPSet s = upnat::testing::random_raw(rng, 12, 9).canonical();
    const std::string text = format_set(s);
    INFO(text);
    REQUIRE(parse_set(text) == s);
  }
}

TEST_CASE("parse_func") {
  CHECK(parse_func("x^2+3x+1") == FuncSpec::polynomial({1, 3, 1}));
  CHECK(parse_func("x^2") == FuncSpec::polynomial({0, 0, 1}));
  CHECK(parse_func("2*x + 5") == FuncSpec::polynomial({5, 2}));
  CHECK(parse_func("7") == FuncSpec::polynomial({7}));
  CHECK(parse_func("x^2-x+1") == FuncSpec::polynomial({1, -1, 1}));
  CHECK(parse_func("scale:3") == FuncSpec::scale(3));
  CHECK(parse_func("pow:2") == FuncSpec::power(2));
  CHECK(parse_func("table:[0,1,4,6]") == FuncSpec::table({0, 1, 4, 6}));
  CHECK_THROWS_AS(parse_func("x^"), SyntaxError);
  CHECK_THROWS_AS(parse_func("table:[0,1"), SyntaxError);
  CHECK_THROWS_AS(parse_func("pow:0"), SyntaxError);
  CHECK_THROWS_AS(parse_func("-2x+5"), std::domain_error);

  for (const char* text : {"x^2+3x+1", "scale:3", "pow:2", "table:[0,1,4,6]", "x^3-2x^2+2", "5"}) {
    CHECK(parse_func(parse_func(text).to_string()) == parse_func(text));
  }
}

TEST_CASE("parse_expr") {
  const LatticeExpr e = parse_expr("(L-2 & L-3) | (L-0 & L-1)");
  CHECK(e.clauses() == std::vector<LatticeExpr::Clause>{{0, 1}, {2, 3}});
  CHECK(parse_expr("((L-2)&(L-3))|((L-0)&(L-1))") == e);
  CHECK(parse_expr("L") == LatticeExpr::decrement(0));
  CHECK(parse_expr(e.to_string()) == e);
  CHECK_THROWS_AS(parse_expr("L-"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("M-1"), SyntaxError);
}
