#include "upnat/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace upnat {

namespace {

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("polynomial coefficient overflows 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

Wide abs_wide(std::int64_t c) { return c < 0 ? -Wide{c} : Wide{c}; }

}  // namespace

Polynomial::Polynomial(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(std::int64_t coefficient, std::size_t degree) {
  std::vector<std::int64_t> c(degree + 1, 0);
  c[degree] = coefficient;
  return Polynomial(std::move(c));
}

Wide Polynomial::eval(Nat x) const {
  Wide acc = 0;
  const Wide wx = x;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    Wide next;
    if (__builtin_mul_overflow(acc, wx, &next) || __builtin_add_overflow(next, Wide{*it}, &next)) {
      throw std::overflow_error("polynomial value overflows 128 bits at x = " + std::to_string(x));
    }
    acc = next;
  }
  return acc;
}

Nat Polynomial::eval_mod(Nat x, Nat m) const {
  if (m == 0) throw std::invalid_argument("modulus must be positive");
  const Wide wm = m;
  const Wide xm = x % m;
  Wide acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    Wide c = Wide{*it} % wm;
    if (c < 0) c += wm;
    acc = (acc * xm + c) % wm;
  }
  return static_cast<Nat>(acc);
}

Polynomial Polynomial::forward_difference() const {
  // (x+1)^i = sum_j C(i, j) x^j
  const std::size_t n = coeffs_.size();
  std::vector<Wide> out(n == 0 ? 0 : n - 1, 0);
  std::vector<Wide> binom{1};
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<Wide> next(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) next[j] = binom[j - 1] + binom[j];
    binom = std::move(next);
    for (std::size_t j = 0; j < i; ++j) {
      Wide term;
      if (__builtin_mul_overflow(binom[j], Wide{coeffs_[i]}, &term) ||
          __builtin_add_overflow(out[j], term, &out[j])) {
        throw std::overflow_error("forward difference overflows");
      }
    }
  }
  std::vector<std::int64_t> c;
  c.reserve(out.size());
  for (Wide v : out) c.push_back(narrow(v));
  return Polynomial(std::move(c));
}

Nat Polynomial::root_bound() const {
  if (degree() == 0) return 0;
  Wide max_abs = 0;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) max_abs = std::max(max_abs, abs_wide(coeffs_[i]));
  const Wide lead = abs_wide(leading());
  const Wide ratio = (max_abs + lead - 1) / lead;
  // One extra unit so that the bound is strict.
  return static_cast<Nat>(ratio + 2);
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    const Wide mag = abs_wide(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    if (mag != 1 || i == 0) out += std::to_string(static_cast<unsigned long long>(mag));
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) {
  const std::size_t n = std::max(lhs.coeffs_.size(), rhs.coeffs_.size());
  std::vector<std::int64_t> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = narrow(Wide{lhs.coefficient(i)} - Wide{rhs.coefficient(i)});
  }
  return Polynomial(std::move(c));
}

std::optional<Nat> first_negative(const Polynomial& p) {
  if (p.degree() == 0) {
    if (p.leading() < 0) return Nat{0};
    return std::nullopt;
  }
  const Nat bound = p.root_bound();
  if (bound > kMaxSignScan) {
    throw std::length_error("root bound " + std::to_string(bound) + " too large to scan");
  }
  // Beyond the bound the sign is that of the leading coefficient, so a
  // negative leading coefficient is caught at x = bound at the latest.
  for (Nat x = 0; x <= bound; ++x) {
    if (p.eval(x) < 0) return x;
  }
  return std::nullopt;
}

Nat monotone_from(const Polynomial& p) {
  const Polynomial delta = p.forward_difference();
  if (delta.leading() < 0) throw std::domain_error("polynomial is eventually decreasing");
  Nat x = delta.root_bound();
  if (x > kMaxSignScan) throw std::length_error("root bound too large to scan");
  while (x > 0 && delta.eval(x - 1) >= 0) --x;
  return x;
}

}  // namespace upnat
