#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "upnat/errors.hpp"
#include "upnat/literal.hpp"
#include "upnat/oracle.hpp"
#include "upnat/transforms.hpp"

using namespace upnat;

namespace {

UPSet set(const char* literal) { return parse_set(literal); }

// Union over a in f^-1(L) of the intersection of L - n over n in L - a. Both
// index sets are infinite but the terms repeat once a and n pass q + r, so
// sampling [0, q + r) of each (and a bit more for a) covers every term.
UPSet union_of_intersections(const FuncSpec& f, const UPSet& l, Nat a_limit) {
  const Nat len = l.threshold() + l.period();
  UPSet out = UPSet::empty();
  for (Nat a = 0; a <= a_limit; ++a) {
    if (!l.contains(f(a))) continue;
    UPSet term = UPSet::naturals();
    const UPSet la = decrement(l, a);
    for (Nat n = 0; n < len; ++n) {
      if (la.contains(n)) term = intersect(term, decrement(l, n));
    }
    out = unite(out, term);
  }
  return out;
}

}  // namespace

TEST_CASE("quotient and root examples") {
  const UPSet l = set("{5,6}+4N");
  CHECK(quotient(l, 2) == set("{3,5}+4N"));
  CHECK(root(l, 2) == set("{3,5}+4N"));
  CHECK(quotient(set("{1,2}+4N"), 3) == set("{2,3}+4N"));
  CHECK(root(set("{1,2}+4N"), 2) == set("{1,3}+4N"));
  const UPSet m = set("{0,3,4}|6+N");
  CHECK(root(m, 2) == set("{0}|2+N"));
  CHECK(root(m, 2) == decrement(m, 4));
  CHECK(quotient(m, 1) == m);
  CHECK(root(m, 1) == m);
  CHECK_THROWS_AS(quotient(m, 0), std::domain_error);
  CHECK_THROWS_AS(root(m, 0), std::domain_error);
}

TEST_CASE("preimage examples") {
  CHECK(preimage(FuncSpec::power(2), UPSet::finite(std::vector<Nat>{1, 2})) ==
        UPSet::finite(std::vector<Nat>{1}));
  CHECK(preimage(parse_func("x^2"), set("{5,6}+4N")) == set("{3,5}+4N"));
  CHECK(preimage(parse_func("7"), set("3+2N")) == UPSet::naturals());
  CHECK(preimage(parse_func("8"), set("3+2N")) == UPSet::empty());
  CHECK(preimage(parse_func("2x+1"), set("3N")) == set("1+3N"));
  CHECK_THROWS_AS(preimage(FuncSpec::table({0, 1}), set("N")), UnsupportedError);
}

TEST_CASE("property: preimage agrees with brute force") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const UPSet l = oracle::random_upset(seed, 10, 8);
    const FuncSpec f = oracle::random_polynomial(seed * 7919, 3, 5);
    const UPSet p = preimage(f, l);
    INFO(f.to_string() << " on " << format_set(l));
    REQUIRE(enumerate_upto(p, 150) == oracle::brute_preimage(f, l, 150));
  }
}

TEST_CASE("property: quotients and roots agree with brute force") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const UPSet l = oracle::random_upset(seed, 10, 8);
    const Nat k = 1 + seed % 4;
    CHECK(enumerate_upto(quotient(l, k), 120) == oracle::brute_preimage(FuncSpec::scale(k), l, 120));
    CHECK(enumerate_upto(root(l, k), 60) == oracle::brute_preimage(FuncSpec::power(k), l, 60));
  }
}

TEST_CASE("property: union of intersections reproduces the preimage") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const UPSet l = oracle::random_upset(seed, 8, 6);
    for (const FuncSpec& f : {FuncSpec::scale(2), FuncSpec::power(2), parse_func("x^2+x+1")}) {
      const UPSet p = preimage(f, l);
      const Nat a_limit = p.threshold() + 2 * l.threshold() + 2 * l.period();
      CHECK(union_of_intersections(f, l, a_limit) == p);
    }
  }
}

TEST_CASE("check_conditions") {
  SUBCASE("x^2 is proved") {
    const ConditionReport r = check_conditions(FuncSpec::power(2));
    CHECK(r.all_proved());
  }
  SUBCASE("table [0,1,4,6] breaks divisibility at (3,1)") {
    const ConditionReport r = check_conditions(FuncSpec::table({0, 1, 4, 6}));
    CHECK(r.divisibility.refuted());
    CHECK(r.divisibility.a == Nat{3});
    CHECK(r.divisibility.b == Nat{1});
    CHECK(r.growth.verdict == Verdict::kCheckedToBound);
    CHECK(r.growth.checked == 4);
    CHECK(r.monotone.verdict == Verdict::kCheckedToBound);
  }
  SUBCASE("constant 7 fails growth first at 8") {
    const ConditionReport r = check_conditions(parse_func("7"));
    CHECK(r.growth.refuted());
    CHECK(r.growth.a == Nat{8});
    CHECK(r.divisibility.verdict == Verdict::kProved);
    CHECK(r.monotone.verdict == Verdict::kProved);
  }
  SUBCASE("x^2-3x+3 dips") {
    const ConditionReport r = check_conditions(parse_func("x^2-3x+3"));
    CHECK(r.growth.refuted());
    CHECK(r.growth.a == Nat{2});
    CHECK(r.monotone.refuted());
    CHECK(r.monotone.a == Nat{1});
    CHECK(r.monotone.b == Nat{0});
    CHECK(r.divisibility.verdict == Verdict::kProved);
  }
  SUBCASE("tables are bounded by the requested bound") {
    const ConditionReport r = check_conditions(FuncSpec::table({0, 1, 2, 3, 4, 5}), 3);
    CHECK(r.growth.checked == 3);
    CHECK_FALSE(r.any_refuted());
  }
  SUBCASE("decreasing table") {
    const ConditionReport r = check_conditions(FuncSpec::table({3, 2}));
    CHECK(r.monotone.refuted());
    CHECK(r.monotone.a == Nat{1});
    CHECK(r.monotone.b == Nat{0});
    CHECK_FALSE(r.growth.refuted());
  }
  CHECK(to_string(Verdict::kCheckedToBound) == "checked-to-bound");
}

TEST_CASE("property: check_conditions on tables matches a direct scan") {
  oracle::Lcg64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Nat> values(1 + rng.below(7));
    for (auto& v : values) v = rng.below(12);
    const ConditionReport r = check_conditions(FuncSpec::table(values));
    bool growth = true, divisibility = true, monotone = true;
    for (Nat a = 0; a < values.size(); ++a) {
      growth = growth && values[a] >= a;
      for (Nat b = 0; b < a; ++b) {
        const auto diff = static_cast<std::int64_t>(values[a]) - static_cast<std::int64_t>(values[b]);
        divisibility = divisibility && diff % static_cast<std::int64_t>(a - b) == 0;
        monotone = monotone && diff >= 0;
      }
    }
    CHECK(r.growth.refuted() == !growth);
    CHECK(r.divisibility.refuted() == !divisibility);
    CHECK(r.monotone.refuted() == !monotone);
  }
}

TEST_CASE("preimage_expr") {
  const UPSet l = set("{5,6}+4N");
  const LatticeExpr e = preimage_expr(FuncSpec::power(2), l);
  CHECK(eval_expr(e, l) == set("{3,5}+4N"));
  CHECK(e.to_string() == "(L-0 & L-1) | (L-2 & L-3)");
  const LatticeExpr plain = preimage_expr(FuncSpec::power(2), l, ClauseForm::kPlain);
  CHECK(eval_expr(plain, l) == set("{3,5}+4N"));

  CHECK_THROWS_AS(preimage_expr(parse_func("7"), l), ConditionError);
  try {
    preimage_expr(parse_func("7"), l);
  } catch (const ConditionError& err) {
    CHECK(err.report().growth.refuted());
  }
  CHECK_THROWS_AS(preimage_expr(FuncSpec::table({0, 1}), l), ConditionError);

  // Empty preimage.
  const UPSet odd = set("1+2N");
  const LatticeExpr none = preimage_expr(FuncSpec::scale(2), odd);
  CHECK(eval_expr(none, odd) == UPSet::empty());
}

TEST_CASE("property: preimage_expr denotes the preimage") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const UPSet l = oracle::random_upset(seed, 10, 8);
    FuncSpec f = oracle::random_polynomial(seed * 31, 3, 5);
    if (!check_conditions(f).all_proved()) f = FuncSpec::polynomial({1, 2, 1});
    const UPSet p = preimage(f, l);
    INFO(f.to_string() << " on " << format_set(l));
    REQUIRE(eval_expr(preimage_expr(f, l), l) == p);
    REQUIRE(eval_expr(preimage_expr(f, l, ClauseForm::kPlain), l) == p);
  }
}

TEST_CASE("counterexample: divisibility") {
  const FuncSpec f = FuncSpec::table({0, 1, 4, 6});
  const CounterexampleCertificate cert = build_counterexample(f, check_conditions(f));
  CHECK(cert.kind == CertificateKind::kDivisibility);
  CHECK(cert.a == 3);
  CHECK(cert.b == Nat{1});
  CHECK(cert.ell == 1);
  CHECK(cert.k == 3);
  CHECK(cert.seed == UPSet::finite(std::vector<Nat>{0, 2, 4, 6}));
  CHECK(cert.verified);
  CHECK(verify_certificate(cert));

  CounterexampleCertificate tampered = cert;
  tampered.seed = UPSet::finite(std::vector<Nat>{0, 2, 4, 5});
  CHECK_FALSE(verify_certificate(tampered));
  tampered = cert;
  tampered.claims.front().in_seed = !tampered.claims.front().in_seed;
  CHECK_FALSE(verify_certificate(tampered));
}

TEST_CASE("counterexample: constant and growth") {
  const FuncSpec four = parse_func("4");
  const CounterexampleCertificate c = build_counterexample(four, check_conditions(four));
  CHECK(c.kind == CertificateKind::kConstant);
  CHECK(c.seed == set("5+N"));
  CHECK(verify_certificate(c));

  const FuncSpec dip = FuncSpec::table({0, 1, 2, 3, 4, 3});
  const CounterexampleCertificate g = build_counterexample(dip, check_conditions(dip));
  CHECK(g.kind == CertificateKind::kGrowth);
  CHECK(g.a == 5);
  CHECK(g.seed == UPSet::finite(std::vector<Nat>{3}));
  CHECK(verify_certificate(g));

  CHECK_THROWS_AS(build_counterexample(FuncSpec::power(2), check_conditions(FuncSpec::power(2))),
                  std::invalid_argument);
  CHECK(certificate_kind_from_string(to_string(CertificateKind::kGrowth)) == CertificateKind::kGrowth);
}

TEST_CASE("property: certificates for violating tables verify") {
  oracle::Lcg64 rng(404);
  int built = 0;
  for (int trial = 0; trial < 300 && built < 60; ++trial) {
    std::vector<Nat> values(2 + rng.below(5));
    for (auto& v : values) v = rng.below(10);
    const FuncSpec f = FuncSpec::table(values);
    const ConditionReport report = check_conditions(f);
    if (!report.any_refuted()) continue;
    ++built;
    const CounterexampleCertificate cert = build_counterexample(f, report);
    INFO(f.to_string());
    CHECK(cert.verified);
    CHECK(verify_certificate(cert));
    CounterexampleCertificate tampered = cert;
    tampered.seed = unite(cert.seed, UPSet::finite(std::vector<Nat>{cert.seed.threshold() + 1}));
    CHECK_FALSE(verify_certificate(tampered));
  }
  CHECK(built == 60);
}
