#pragma once

#include <optional>
#include <string>
#include <vector>

#include "upnat/polynomial.hpp"
#include "upnat/upset.hpp"

namespace upnat {

/// An arithmetic function N -> N: an integer polynomial, a finite table, or
/// one of the builtins x -> kx and x -> x^k.
class FuncSpec {
 public:
  enum class Kind { kPolynomial, kTable, kScale, kPower };

  /// Throws std::domain_error unless p(x) >= 0 for every x in N.
  static FuncSpec polynomial(Polynomial p);
  static FuncSpec polynomial(std::vector<std::int64_t> coefficients) {
    return polynomial(Polynomial(std::move(coefficients)));
  }
  /// f(x) = values[x], defined on [0, values.size()).
  static FuncSpec table(std::vector<Nat> values);
  /// f(x) = k x, k >= 1.
  static FuncSpec scale(Nat k);
  /// f(x) = x^k, k >= 1.
  static FuncSpec power(Nat k);
  static FuncSpec identity() { return scale(1); }

  Kind kind() const noexcept { return kind_; }
  /// k for the builtins.
  Nat parameter() const noexcept { return parameter_; }
  const std::vector<Nat>& table_values() const noexcept { return table_; }

  /// The polynomial behind every kind except tables.
  std::optional<Polynomial> as_polynomial() const;

  /// Number of points f is defined on; nullopt when total.
  std::optional<Nat> domain_size() const;

  /// Throws std::domain_error outside a table's domain and
  /// std::overflow_error if the value does not fit in 64 bits.
  Nat operator()(Nat x) const;

  /// Constant on its whole domain.
  bool is_constant() const;

  /// Literal form: `x^2+3x+1`, `scale:3`, `pow:2`, `table:[0,1,4,6]`.
  std::string to_string() const;

  friend bool operator==(const FuncSpec&, const FuncSpec&) = default;

 private:
  FuncSpec() = default;

  Kind kind_ = Kind::kPolynomial;
  Polynomial poly_;
  std::vector<Nat> table_;
  Nat parameter_ = 0;
};

}  // namespace upnat
