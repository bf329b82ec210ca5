#include "upnat/literal.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "upnat/errors.hpp"

namespace upnat {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool at_end() { return peek() == '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Nat number() {
    if (!at_digit()) fail("expected a number");
    const std::size_t start = pos_;
    Nat value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const Nat digit = static_cast<Nat>(text_[pos_] - '0');
      if (value > (std::numeric_limits<Nat>::max() - digit) / 10) {
        pos_ = start;
        fail("numeral out of range");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  bool accept_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  [[noreturn]] void fail(const std::string& what) { throw SyntaxError(what, pos_); }

  void finish() {
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Sets

UPSet bundle(const std::vector<Nat>& starts, Nat period) {
  UPSet out;
  for (Nat a : starts) out = unite(out, UPSet::progression(a, period));
  return out;
}

class SetParser {
 public:
  explicit SetParser(std::string_view text) : in_(text) {}

  UPSet parse() {
    if (in_.at_end()) in_.fail("empty set literal");
    UPSet s = expr();
    in_.finish();
    return s;
  }

 private:
  UPSet expr() {
    UPSet s = term();
    while (in_.accept('|')) s = unite(s, term());
    return s;
  }

  UPSet term() {
    UPSet s = postfix();
    while (in_.accept('&')) s = intersect(s, postfix());
    return s;
  }

  UPSet postfix() {
    UPSet s = primary();
    while (in_.accept('-')) s = decrement(s, in_.number());
    return s;
  }

  UPSet primary() {
    if (in_.accept('(')) {
      UPSet s = expr();
      in_.expect(')');
      return s;
    }
    return atom();
  }

  // [NUM] 'N', after the NUM (if any) has been read.
  Nat period_after(std::optional<Nat> count) {
    in_.expect('N');
    const Nat period = count.value_or(1);
    if (period == 0) in_.fail("period must be positive");
    return period;
  }

  UPSet atom() {
    std::vector<Nat> starts;
    if (in_.accept('{')) {
      if (!in_.accept('}')) {
        do starts.push_back(in_.number());
        while (in_.accept(','));
        in_.expect('}');
      }
      if (!in_.accept('+')) return UPSet::finite(starts);
    } else if (in_.peek() == 'N') {
      return bundle({0}, period_after(std::nullopt));
    } else {
      const Nat n = in_.number();
      if (in_.peek() == 'N') return bundle({0}, period_after(n));
      starts.push_back(n);
      in_.expect('+');
    }
    std::optional<Nat> count;
    if (in_.at_digit()) count = in_.number();
    return bundle(starts, period_after(count));
  }

  Cursor in_;
};

std::string join_numbers(const std::vector<Nat>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Functions

std::int64_t checked_add(std::int64_t a, std::int64_t b, Cursor& in) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) in.fail("coefficient out of range");
  return out;
}

FuncSpec parse_polynomial(Cursor& in) {
  std::vector<std::int64_t> coeffs;
  bool first = true;
  while (!in.at_end()) {
    bool negative = false;
    if (in.accept('-')) {
      negative = true;
    } else if (!first) {
      in.expect('+');
    } else {
      in.accept('+');
    }
    first = false;

    Nat magnitude = 1;
    bool has_number = false;
    if (in.at_digit()) {
      magnitude = in.number();
      has_number = true;
      in.accept('*');
    }
    std::size_t degree = 0;
    if (in.accept('x')) {
      degree = 1;
      if (in.accept('^')) {
        const Nat e = in.number();
        if (e > 64) in.fail("exponent too large");
        degree = e;
      }
    } else if (!has_number) {
      in.fail("expected a term");
    }
    if (magnitude > static_cast<Nat>(std::numeric_limits<std::int64_t>::max())) {
      in.fail("coefficient out of range");
    }
    const auto value = static_cast<std::int64_t>(magnitude);
    if (coeffs.size() <= degree) coeffs.resize(degree + 1, 0);
    coeffs[degree] = checked_add(coeffs[degree], negative ? -value : value, in);
  }
  if (first) in.fail("empty function literal");
  return FuncSpec::polynomial(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Lattice expressions

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : in_(text) {}

  LatticeExpr parse() {
    std::vector<LatticeExpr::Clause> clauses;
    do clauses.push_back(clause());
    while (in_.accept('|'));
    in_.finish();
    return LatticeExpr(std::move(clauses));
  }

 private:
  LatticeExpr::Clause clause() {
    LatticeExpr::Clause c;
    do factor(c);
    while (in_.accept('&'));
    return c;
  }

  void factor(LatticeExpr::Clause& c) {
    if (in_.accept('(')) {
      auto inner = clause();
      in_.expect(')');
      c.insert(c.end(), inner.begin(), inner.end());
      return;
    }
    in_.expect('L');
    c.push_back(in_.accept('-') ? in_.number() : 0);
  }

  Cursor in_;
};

}  // namespace

UPSet parse_set(std::string_view text) { return SetParser(text).parse(); }

std::string format_set(const UPSet& s) {
  if (s.is_empty()) return "{}";
  if (s.is_finite()) return join_numbers(s.transient());
  if (s == UPSet::naturals()) return "N";

  const Nat q = s.threshold();
  const Nat r = s.period();
  std::vector<Nat> generators;
  for (Nat b : s.residues()) {
    Nat g = q + (b + r - q % r) % r;
    while (g >= r && s.contains(g - r)) g -= r;
    generators.push_back(g);
  }
  std::sort(generators.begin(), generators.end());

  std::vector<Nat> rest;
  for (Nat x : s.transient()) {
    const bool covered = std::any_of(generators.begin(), generators.end(),
                                     [&](Nat g) { return x >= g && (x - g) % r == 0; });
    if (!covered) rest.push_back(x);
  }

  std::string out;
  if (!rest.empty()) out = join_numbers(rest) + "|";
  out += generators.size() == 1 ? std::to_string(generators.front()) : join_numbers(generators);
  out += "+";
  if (r != 1) out += std::to_string(r);
  return out + "N";
}

FuncSpec parse_func(std::string_view text) {
  Cursor in(text);
  if (in.accept_word("scale:")) {
    const Nat k = in.number();
    in.finish();
    if (k == 0) in.fail("scale factor must be at least 1");
    return FuncSpec::scale(k);
  }
  if (in.accept_word("pow:")) {
    const Nat k = in.number();
    in.finish();
    if (k == 0) in.fail("exponent must be at least 1");
    return FuncSpec::power(k);
  }
  if (in.accept_word("table:")) {
    in.expect('[');
    std::vector<Nat> values;
    if (!in.accept(']')) {
      do values.push_back(in.number());
      while (in.accept(','));
      in.expect(']');
    }
    in.finish();
    return FuncSpec::table(std::move(values));
  }
  return parse_polynomial(in);
}

LatticeExpr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace upnat
