#include "upnat/transforms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace upnat {

UPSet quotient(const UPSet& s, Nat k) {
  if (k == 0) throw std::domain_error("quotient by zero");
  return preimage(FuncSpec::scale(k), s);
}

UPSet root(const UPSet& s, Nat k) {
  if (k == 0) throw std::domain_error("zeroth root");
  return preimage(FuncSpec::power(k), s);
}

UPSet preimage(const FuncSpec& f, const UPSet& s) {
  const auto poly = f.as_polynomial();
  if (!poly) throw UnsupportedError("preimage is not defined for table functions");
  if (s.is_empty()) return UPSet::empty();
  if (poly->degree() == 0) return s.contains(f(0)) ? UPSet::naturals() : UPSet::empty();

  const Nat q = s.threshold();
  const Nat r = s.period();

  Nat x0 = monotone_from(*poly);
  while (f(x0) < q) {
    if (++x0 > kMaxWindow) throw std::length_error("preimage threshold exceeds representation limit");
  }
  if (x0 + r > kMaxWindow) throw std::length_error("preimage window exceeds representation limit");

  const auto& residues = s.residues();
  std::vector<bool> bits(x0 + r);
  for (Nat x = 0; x < x0; ++x) bits[x] = s.contains(f(x));
  for (Nat x = x0; x < x0 + r; ++x) {
    bits[x] = std::binary_search(residues.begin(), residues.end(), poly->eval_mod(x, r));
  }
  return UPSet::from_window(x0, r, bits);
}

// ---------------------------------------------------------------------------

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kProved:
      return "proved";
    case Verdict::kRefuted:
      return "refuted";
    case Verdict::kCheckedToBound:
      return "checked-to-bound";
  }
  return "?";
}

namespace {

ConditionVerdict refuted(Nat a, std::optional<Nat> b = std::nullopt) {
  ConditionVerdict v;
  v.verdict = Verdict::kRefuted;
  v.a = a;
  v.b = b;
  return v;
}

ConditionReport check_table(const std::vector<Nat>& t, Nat bound) {
  const Nat n = std::min<Nat>(bound, t.size());
  ConditionVerdict checked;
  checked.verdict = Verdict::kCheckedToBound;
  checked.checked = n;

  ConditionReport report{checked, checked, checked};
  for (Nat a = 0; a < n; ++a) {
    if (t[a] < a) {
      report.growth = refuted(a);
      break;
    }
  }
  bool monotone_done = false;
  bool divisibility_done = false;
  for (Nat a = 1; a < n && !(monotone_done && divisibility_done); ++a) {
    for (Nat b = 0; b < a; ++b) {
      if (!monotone_done && t[a] < t[b]) {
        report.monotone = refuted(a, b);
        monotone_done = true;
      }
      const Nat diff = t[a] >= t[b] ? t[a] - t[b] : t[b] - t[a];
      if (!divisibility_done && diff % (a - b) != 0) {
        report.divisibility = refuted(a, b);
        divisibility_done = true;
      }
    }
  }
  return report;
}

}  // namespace

ConditionReport check_conditions(const FuncSpec& f, Nat bound) {
  switch (f.kind()) {
    case FuncSpec::Kind::kScale:
    case FuncSpec::Kind::kPower:
      return {};
    case FuncSpec::Kind::kTable:
      return check_table(f.table_values(), bound);
    case FuncSpec::Kind::kPolynomial:
      break;
  }
  const Polynomial p = *f.as_polynomial();
  ConditionReport report;
  // Integer polynomials always satisfy (a - b) | p(a) - p(b).
  if (auto a = first_negative(p - Polynomial({0, 1}))) report.growth = refuted(*a);
  if (auto x = first_negative(p.forward_difference())) report.monotone = refuted(*x + 1, *x);
  return report;
}

LatticeExpr preimage_expr(const FuncSpec& f, const UPSet& s, ClauseForm form) {
  const ConditionReport report = check_conditions(f);
  if (!report.all_proved()) {
    throw ConditionError("function " + f.to_string() +
                             " is not proved monotone with f(a) >= a and (a-b) | f(a)-f(b)",
                         report);
  }

  const UPSet pre = preimage(f, s);
  const DecrementFamily family(s);
  const Nat q = s.threshold();
  const Nat r = s.period();

  if (pre.is_empty()) {
    LatticeExpr::Clause all;
    UPSet meet = UPSet::naturals();
    for (std::size_t m = 0; m < family.size(); ++m) {
      all.push_back(family.representative(m));
      meet = intersect(meet, family.members()[m]);
    }
    if (!meet.is_empty()) {
      throw ExpressibilityError("preimage is empty but the empty set is not in the lattice of " +
                                std::to_string(s.threshold()) + "/" + std::to_string(r) + " seed");
    }
    LatticeExpr e(std::vector<LatticeExpr::Clause>{all});
    return form == ClauseForm::kSimplified ? simplify(e, s) : e;
  }

  // Both membership in the preimage and the decrement class of a repeat
  // with period r past max(q, threshold of the preimage).
  const Nat scan = std::max(q, pre.threshold()) + r;
  std::set<std::size_t> classes;
  for (Nat a = 0; a < scan; ++a) {
    if (pre.contains(a)) classes.insert(family.member_of_shift(a));
  }

  std::vector<LatticeExpr::Clause> clauses;
  for (std::size_t m : classes) {
    const UPSet& shifted = family.members()[m];
    std::set<Nat> shifts;
    for (Nat n = 0; n < q + r; ++n) {
      if (shifted.contains(n)) shifts.insert(family.representative(family.member_of_shift(n)));
    }
    if (shifts.empty()) throw std::logic_error("empty clause although f(a) >= a");
    clauses.emplace_back(shifts.begin(), shifts.end());
  }
  LatticeExpr e(std::move(clauses));
  return form == ClauseForm::kSimplified ? simplify(e, s) : e;
}

// ---------------------------------------------------------------------------

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::kDivisibility:
      return "divisibility";
    case CertificateKind::kGrowth:
      return "growth";
    case CertificateKind::kConstant:
      return "constant";
  }
  return "?";
}

CertificateKind certificate_kind_from_string(const std::string& s) {
  if (s == "divisibility") return CertificateKind::kDivisibility;
  if (s == "growth") return CertificateKind::kGrowth;
  if (s == "constant") return CertificateKind::kConstant;
  throw std::invalid_argument("unknown certificate kind '" + s + "'");
}

namespace {

UPSet divisibility_seed(Nat fa, Nat d, Nat k) {
  std::vector<Nat> elems;
  for (Nat j = 0; j <= k; ++j) elems.push_back(fa - j * d);
  return UPSet::finite(elems);
}

}  // namespace

CounterexampleCertificate build_counterexample(const FuncSpec& f, const ConditionReport& report,
                                               const LatticeOptions& options) {
  if (!report.any_refuted()) throw std::invalid_argument("condition report refutes nothing");

  CounterexampleCertificate cert;
  cert.f = f;
  if (f.kind() != FuncSpec::Kind::kTable && f.is_constant()) {
    const Nat c = f(0);
    cert.kind = CertificateKind::kConstant;
    cert.a = 0;
    cert.seed = UPSet::progression(c + 1, 1);
    cert.claims = {{0, c, false}};
  } else if (report.growth.refuted()) {
    const Nat a = *report.growth.a;
    const Nat fa = f(a);
    cert.kind = CertificateKind::kGrowth;
    cert.a = a;
    cert.seed = UPSet::finite(std::vector<Nat>{fa});
    cert.claims = {{a, fa, true}};
  } else {
    const ConditionVerdict& v = report.divisibility.refuted() ? report.divisibility : report.monotone;
    const Nat a = *v.a;
    const Nat b = *v.b;
    const Nat fa = f(a);
    const Nat fb = f(b);
    const Nat d = a - b;
    if (fa < a) throw std::logic_error("divisibility witness violates growth");
    cert.kind = CertificateKind::kDivisibility;
    cert.a = a;
    cert.b = b;
    cert.ell = (fa - a) / d;
    cert.k = fa / d;
    cert.seed = divisibility_seed(fa, d, cert.k);
    cert.claims = {{a, fa, true}, {b, fb, false}};
  }
  cert.verified = verify_certificate(cert, options);
  return cert;
}

namespace {

std::optional<Nat> try_eval(const FuncSpec& f, Nat x) {
  try {
    return f(x);
  } catch (const std::domain_error&) {
    return std::nullopt;
  } catch (const std::overflow_error&) {
    return std::nullopt;
  }
}

// Both checked properties are preserved by union and intersection, so
// holding on D(L) already settles them for the whole lattice. The full
// scan below is a second, independent pass when the lattice fits the cap.
template <class Pred>
bool holds_on_lattice(const UPSet& seed, const LatticeOptions& options, Pred pred) {
  const DecrementFamily family(seed);
  if (!std::all_of(family.members().begin(), family.members().end(), pred)) return false;
  try {
    const Lattice lattice = generate_lattice(seed, options);
    return std::all_of(lattice.members().begin(), lattice.members().end(), pred);
  } catch (const CapacityError&) {
    return true;
  }
}

bool verify_divisibility(const CounterexampleCertificate& c, const LatticeOptions& options) {
  if (!c.b || c.a <= *c.b) return false;
  const auto fa = try_eval(c.f, c.a);
  const auto fb = try_eval(c.f, *c.b);
  if (!fa || !fb) return false;
  const Nat d = c.a - *c.b;
  if (*fa < c.a) return false;
  if (*fa >= *fb && (*fa - *fb) % d == 0) return false;
  if (c.ell != (*fa - c.a) / d || c.k != *fa / d) return false;
  if (c.seed != divisibility_seed(*fa, d, c.k)) return false;
  if (!c.seed.contains(*fa) || c.seed.contains(*fb)) return false;

  // f^-1(L) contains a but not b; no member of the lattice separates them.
  return holds_on_lattice(c.seed, options,
                          [&](const UPSet& x) { return !x.contains(c.a) || x.contains(*c.b); });
}

bool verify_growth(const CounterexampleCertificate& c, const LatticeOptions& options) {
  const auto fa = try_eval(c.f, c.a);
  if (!fa || *fa >= c.a) return false;
  if (c.seed != UPSet::finite(std::vector<Nat>{*fa})) return false;

  // Every member lies inside [0, f(a)], so none contains a.
  std::vector<Nat> upto(*fa + 1);
  for (Nat x = 0; x <= *fa; ++x) upto[x] = x;
  const UPSet box = UPSet::finite(upto);
  return holds_on_lattice(c.seed, options, [&](const UPSet& x) { return is_subset(x, box); });
}

bool verify_constant(const CounterexampleCertificate& c, const LatticeOptions& options) {
  if (!c.f.is_constant()) return false;
  const auto value = try_eval(c.f, 0);
  if (!value) return false;
  if (c.seed != UPSet::progression(*value + 1, 1)) return false;
  if (c.f.kind() != FuncSpec::Kind::kTable && !preimage(c.f, c.seed).is_empty()) return false;
  if (c.seed.contains(*value)) return false;

  const Lattice lattice = generate_lattice(c.seed, options);
  return !lattice.contains(UPSet::empty());
}

}  // namespace

bool verify_certificate(const CounterexampleCertificate& cert, const LatticeOptions& options) {
  for (const Claim& claim : cert.claims) {
    const auto fx = try_eval(cert.f, claim.x);
    if (!fx || *fx != claim.fx || cert.seed.contains(claim.fx) != claim.in_seed) return false;
  }
  switch (cert.kind) {
    case CertificateKind::kDivisibility:
      return verify_divisibility(cert, options);
    case CertificateKind::kGrowth:
      return verify_growth(cert, options);
    case CertificateKind::kConstant:
      return verify_constant(cert, options);
  }
  return false;
}

}  // namespace upnat
