#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "upnat/upset.hpp"

namespace upnat {

__extension__ typedef __int128 Wide;

/// Integer polynomial c0 + c1 x + ... + cd x^d with exact, overflow-checked
/// evaluation.
class Polynomial {
 public:
  Polynomial() = default;
  /// Coefficients in increasing degree; trailing zeros are dropped.
  explicit Polynomial(std::vector<std::int64_t> coefficients);

  static Polynomial monomial(std::int64_t coefficient, std::size_t degree);

  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; the zero polynomial reports 0.
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::int64_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::int64_t coefficient(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }

  /// Throws std::overflow_error if an intermediate leaves the 128-bit range.
  Wide eval(Nat x) const;
  /// p(x) mod m in [0, m). m >= 1.
  Nat eval_mod(Nat x, Nat m) const;

  /// p(x + 1) - p(x)
  Polynomial forward_difference() const;

  /// Every real root z satisfies |z| < root_bound(). 0 for constants.
  Nat root_bound() const;

  std::string to_string() const;

  friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Scans past this many integers are refused with std::length_error.
inline constexpr Nat kMaxSignScan = Nat{1} << 24;

/// Least x in N with p(x) < 0, decided exactly by scanning up to the root bound.
std::optional<Nat> first_negative(const Polynomial& p);

/// Least x0 such that p is non-decreasing on [x0, inf). Requires p to be
/// eventually non-decreasing (std::domain_error otherwise).
Nat monotone_from(const Polynomial& p);

}  // namespace upnat
