#include "upnat/func.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace upnat {

FuncSpec FuncSpec::polynomial(Polynomial p) {
  if (auto x = first_negative(p)) {
    throw std::domain_error("polynomial " + p.to_string() + " is negative at x = " +
                            std::to_string(*x));
  }
  FuncSpec f;
  f.kind_ = Kind::kPolynomial;
  f.poly_ = std::move(p);
  return f;
}

FuncSpec FuncSpec::table(std::vector<Nat> values) {
  FuncSpec f;
  f.kind_ = Kind::kTable;
  f.table_ = std::move(values);
  return f;
}

FuncSpec FuncSpec::scale(Nat k) {
  if (k == 0) throw std::domain_error("scale factor must be at least 1");
  if (k > static_cast<Nat>(std::numeric_limits<std::int64_t>::max())) {
    throw std::overflow_error("scale factor too large");
  }
  FuncSpec f;
  f.kind_ = Kind::kScale;
  f.parameter_ = k;
  f.poly_ = Polynomial({0, static_cast<std::int64_t>(k)});
  return f;
}

FuncSpec FuncSpec::power(Nat k) {
  if (k == 0) throw std::domain_error("exponent must be at least 1");
  if (k > 4096) throw std::length_error("exponent too large");
  FuncSpec f;
  f.kind_ = Kind::kPower;
  f.parameter_ = k;
  f.poly_ = Polynomial::monomial(1, k);
  return f;
}

std::optional<Polynomial> FuncSpec::as_polynomial() const {
  if (kind_ == Kind::kTable) return std::nullopt;
  return poly_;
}

std::optional<Nat> FuncSpec::domain_size() const {
  if (kind_ == Kind::kTable) return table_.size();
  return std::nullopt;
}

Nat FuncSpec::operator()(Nat x) const {
  if (kind_ == Kind::kTable) {
    if (x >= table_.size()) {
      throw std::domain_error("table function undefined at x = " + std::to_string(x));
    }
    return table_[x];
  }
  const Wide v = poly_.eval(x);
  if (v < 0) throw std::domain_error("function value negative at x = " + std::to_string(x));
  if (v > Wide{std::numeric_limits<Nat>::max()}) {
    throw std::overflow_error("function value overflows 64 bits at x = " + std::to_string(x));
  }
  return static_cast<Nat>(v);
}

bool FuncSpec::is_constant() const {
  if (kind_ == Kind::kTable) {
    return std::adjacent_find(table_.begin(), table_.end(), std::not_equal_to<>()) == table_.end();
  }
  return poly_.degree() == 0;
}

std::string FuncSpec::to_string() const {
  switch (kind_) {
    case Kind::kScale:
      return "scale:" + std::to_string(parameter_);
    case Kind::kPower:
      return "pow:" + std::to_string(parameter_);
    case Kind::kTable: {
      std::string out = "table:[";
      for (std::size_t i = 0; i < table_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(table_[i]);
      }
      return out + "]";
    }
    case Kind::kPolynomial:
      break;
  }
  return poly_.to_string();
}

}  // namespace upnat
