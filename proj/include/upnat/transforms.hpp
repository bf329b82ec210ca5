#pragma once

#include <optional>
#include <string>
#include <vector>

#include "upnat/errors.hpp"
#include "upnat/func.hpp"
#include "upnat/lattice.hpp"
#include "upnat/upset.hpp"

namespace upnat {

/// {x | k x in s}. Throws std::domain_error for k = 0.
UPSet quotient(const UPSet& s, Nat k);

/// {x | x^k in s}. Throws std::domain_error for k = 0.
UPSet root(const UPSet& s, Nat k);

/**
 * Exact preimage {x | f(x) in s} for polynomial and builtin f.
 *
 * Beyond the point x0 where f is non-decreasing and at least the threshold
 * of s, membership depends only on f(x) mod r, which integer polynomials
 * carry periodically; everything below x0 is evaluated directly.
 *
 * Throws UnsupportedError for tables.
 */
UPSet preimage(const FuncSpec& f, const UPSet& s);

// ---------------------------------------------------------------------------
// Conditions on f

enum class Verdict { kProved, kRefuted, kCheckedToBound };

std::string to_string(Verdict v);

struct ConditionVerdict {
  Verdict verdict = Verdict::kProved;
  /// Refutation witness: a alone for growth, (a, b) with a > b otherwise.
  std::optional<Nat> a;
  std::optional<Nat> b;
  /// Points [0, checked) examined for kCheckedToBound.
  Nat checked = 0;

  bool refuted() const noexcept { return verdict == Verdict::kRefuted; }
  friend bool operator==(const ConditionVerdict&, const ConditionVerdict&) = default;
};

/// Growth is f(a) >= a; divisibility is (a - b) | f(a) - f(b); monotone is
/// non-decreasing.
struct ConditionReport {
  ConditionVerdict growth;
  ConditionVerdict divisibility;
  ConditionVerdict monotone;

  bool all_proved() const noexcept {
    return growth.verdict == Verdict::kProved && divisibility.verdict == Verdict::kProved &&
           monotone.verdict == Verdict::kProved;
  }
  bool any_refuted() const noexcept {
    return growth.refuted() || divisibility.refuted() || monotone.refuted();
  }
  friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

/**
 * Decides the three conditions. Polynomials and builtins are decided
 * exactly (bound is ignored); tables are checked over
 * [0, min(bound, size)). Refutation witnesses are the first violation in
 * order of increasing a, then increasing b.
 */
ConditionReport check_conditions(const FuncSpec& f, Nat bound = 64);

class ConditionError : public Error {
 public:
  ConditionError(const std::string& what, ConditionReport report)
      : Error(what), report_(std::move(report)) {}
  const ConditionReport& report() const noexcept { return report_; }

 private:
  ConditionReport report_;
};

enum class ClauseForm {
  /// n_{n in L-a} (L - n) per realized decrement class.
  kPlain,
  /// The same after simplify(): subsumed shifts and clauses removed.
  kSimplified,
};

/**
 * A lattice expression over s denoting preimage(f, s), one clause per
 * decrement class s - a realized by some a in the preimage.
 *
 * Throws ConditionError unless check_conditions proves all three
 * conditions, and ExpressibilityError when the preimage is empty but the
 * empty set is not in the lattice of s.
 */
LatticeExpr preimage_expr(const FuncSpec& f, const UPSet& s, ClauseForm form = ClauseForm::kSimplified);

// ---------------------------------------------------------------------------
// Counterexamples

enum class CertificateKind {
  /// f(a) not in f(b) + (a - b)N for a > b.
  kDivisibility,
  /// f(a) < a.
  kGrowth,
  /// f constant.
  kConstant,
};

std::string to_string(CertificateKind k);
CertificateKind certificate_kind_from_string(const std::string& s);

struct Claim {
  Nat x = 0;
  Nat fx = 0;
  bool in_seed = false;
  friend bool operator==(const Claim&, const Claim&) = default;
};

/// A seed L together with the data showing that f^-1(L) is not in the
/// lattice generated by L.
struct CounterexampleCertificate {
  FuncSpec f = FuncSpec::identity();
  CertificateKind kind = CertificateKind::kDivisibility;
  Nat a = 0;
  std::optional<Nat> b;
  Nat ell = 0;
  Nat k = 0;
  UPSet seed;
  std::vector<Claim> claims;
  bool verified = false;

  friend bool operator==(const CounterexampleCertificate&, const CounterexampleCertificate&) = default;
};

/// Throws std::invalid_argument if the report refutes nothing.
CounterexampleCertificate build_counterexample(const FuncSpec& f, const ConditionReport& report,
                                               const LatticeOptions& options = {});

/// Re-derives every claim and checks the lattice property the certificate
/// relies on. CapacityError propagates.
bool verify_certificate(const CounterexampleCertificate& cert, const LatticeOptions& options = {});

}  // namespace upnat
