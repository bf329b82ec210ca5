#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "upnat/func.hpp"
#include "upnat/oracle.hpp"
#include "upnat/polynomial.hpp"

using namespace upnat;

namespace {

Wide naive_eval(const std::vector<std::int64_t>& c, Nat x) {
  Wide sum = 0;
  Wide power = 1;
  for (std::int64_t ci : c) {
    sum += power * ci;
    power *= static_cast<Wide>(x);
  }
  return sum;
}

}  // namespace

TEST_CASE("construction trims and reports degree") {
  const Polynomial p({1, 3, 1, 0, 0});
  CHECK(p.coefficients() == std::vector<std::int64_t>{1, 3, 1});
  CHECK(p.degree() == 2);
  CHECK(p.leading() == 1);
  CHECK(Polynomial({0, 0}).is_zero());
  CHECK(Polynomial::monomial(4, 3).coefficients() == std::vector<std::int64_t>{0, 0, 0, 4});
}

TEST_CASE("evaluation") {
  const Polynomial p({1, 3, 1});
  CHECK(p.eval(0) == 1);
  CHECK(p.eval(2) == 11);
  CHECK(p.eval_mod(2, 4) == 3);
  CHECK(Polynomial({-5}).eval_mod(0, 3) == 1);
  CHECK_THROWS_AS(Polynomial::monomial(1, 5).eval(Nat{1} << 40), std::overflow_error);
}

TEST_CASE("property: eval and eval_mod agree with naive evaluation") {
  oracle::Lcg64 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::int64_t> c(1 + rng.below(5));
    for (auto& ci : c) ci = static_cast<std::int64_t>(rng.below(21)) - 10;
    const Polynomial p(c);
    const Nat x = rng.below(1000);
    const Nat m = 1 + rng.below(30);
    const Wide v = naive_eval(c, x);
    REQUIRE(p.eval(x) == v);
    Wide mod = v % static_cast<Wide>(m);
    if (mod < 0) mod += m;
    REQUIRE(p.eval_mod(x, m) == static_cast<Nat>(mod));
    REQUIRE(p.forward_difference().eval(x) == naive_eval(c, x + 1) - v);
  }
}

TEST_CASE("to_string") {
  CHECK(Polynomial({1, 3, 1}).to_string() == "x^2+3x+1");
  CHECK(Polynomial({5, -2}).to_string() == "-2x+5");
  CHECK(Polynomial().to_string() == "0");
  CHECK(Polynomial({0, 1}).to_string() == "x");
}

TEST_CASE("sign decisions") {
  CHECK_FALSE(first_negative(Polynomial({1, 3, 1})).has_value());
  CHECK(first_negative(Polynomial({5, -2})) == Nat{3});
  // x^2 - 7x + 11 dips below zero only at x = 3 and 4.
  CHECK(first_negative(Polynomial({11, -7, 1})) == Nat{3});
  CHECK(first_negative(Polynomial({-1})) == Nat{0});
  CHECK(monotone_from(Polynomial({1, 3, 1})) == 0);
  // x^2 - 5x: differences 2x - 4 are negative at 0 and 1.
  CHECK(monotone_from(Polynomial({0, -5, 1})) == 2);
  CHECK(monotone_from(Polynomial({7})) == 0);
  CHECK_THROWS_AS(monotone_from(Polynomial({0, -1})), std::domain_error);
}

TEST_CASE("property: first_negative matches a scan") {
  oracle::Lcg64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::int64_t> c(1 + rng.below(4));
    for (auto& ci : c) ci = static_cast<std::int64_t>(rng.below(41)) - 20;
    const Polynomial p(c);
    std::optional<Nat> scan;
    for (Nat x = 0; x < 200 && !scan; ++x) {
      if (naive_eval(c, x) < 0) scan = x;
    }
    INFO(p.to_string());
    REQUIRE(first_negative(p) == scan);
  }
}

TEST_CASE("FuncSpec") {
  CHECK(FuncSpec::scale(3)(4) == 12);
  CHECK(FuncSpec::power(3)(2) == 8);
  CHECK(FuncSpec::identity()(9) == 9);
  CHECK(FuncSpec::table({0, 1, 4, 6})(3) == 6);
  CHECK_THROWS_AS(FuncSpec::table({0, 1})(2), std::domain_error);
  CHECK_THROWS_AS(FuncSpec::polynomial({5, -2}), std::domain_error);
  CHECK_THROWS_AS(FuncSpec::power(0), std::domain_error);
  CHECK(FuncSpec::polynomial({1, -1, 1})(1) == 1);
  CHECK(FuncSpec::polynomial({7}).is_constant());
  CHECK(FuncSpec::table({2, 2, 2}).is_constant());
  CHECK_FALSE(FuncSpec::power(2).is_constant());
  CHECK(FuncSpec::power(2).as_polynomial() == Polynomial({0, 0, 1}));
  CHECK_FALSE(FuncSpec::table({1}).as_polynomial().has_value());
  CHECK(FuncSpec::table({1, 2}).domain_size() == Nat{2});
  CHECK(FuncSpec::scale(3).to_string() == "scale:3");
  CHECK(FuncSpec::table({0, 1, 4, 6}).to_string() == "table:[0,1,4,6]");
}
