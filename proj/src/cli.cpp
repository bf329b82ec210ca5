#include "upnat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "upnat/errors.hpp"
#include "upnat/json.hpp"
#include "upnat/lattice.hpp"
#include "upnat/literal.hpp"
#include "upnat/transforms.hpp"

namespace upnat::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

LatticeOptions lattice_options() {
  LatticeOptions options;
  if (const char* env = std::getenv("UPERIODIC_LATTICE_CAP")) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || cap == 0) {
      throw UsageError(std::string("UPERIODIC_LATTICE_CAP is not a positive integer: ") + env);
    }
    options.max_members = static_cast<std::size_t>(cap);
  }
  return options;
}

// `X in L` or `X in lattice L`.
std::pair<std::string, std::string> split_in(const std::vector<std::string>& words) {
  if (words.size() == 3 && words[1] == "in") return {words[0], words[2]};
  if (words.size() == 4 && words[1] == "in" && words[2] == "lattice") return {words[0], words[3]};
  throw UsageError("expected 'X in L' or 'X in lattice L'");
}

bool is_numeral(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string verdict_text(const ConditionVerdict& v) {
  std::string out = to_string(v.verdict);
  if (v.verdict == Verdict::kRefuted) {
    out += " (a=" + std::to_string(*v.a);
    if (v.b) out += ", b=" + std::to_string(*v.b);
    out += ")";
  } else if (v.verdict == Verdict::kCheckedToBound) {
    out += " (" + std::to_string(v.checked) + " points)";
  }
  return out;
}

struct Context {
  bool json_mode = false;
  std::ostringstream out;
  std::istream* in = nullptr;
};

// ---------------------------------------------------------------------------

int cmd_eval(Context& ctx, const std::string& text) {
  const UPSet s = parse_set(text);
  if (ctx.json_mode) {
    ctx.out << json{{"set", s}, {"literal", format_set(s)}}.dump() << "\n";
  } else {
    ctx.out << format_set(s) << "\n";
  }
  return kSuccess;
}

int cmd_decrements(Context& ctx, const std::string& text) {
  const DecrementFamily family(parse_set(text));
  json rows = json::array();
  for (std::size_t m = 0; m < family.size(); ++m) {
    const auto shifts = family.shifts_of(m);
    if (ctx.json_mode) {
      rows.push_back({{"shifts", shifts},
                      {"set", family.members()[m]},
                      {"literal", format_set(family.members()[m])}});
      continue;
    }
    for (std::size_t i = 0; i < shifts.size(); ++i) ctx.out << (i ? ", " : "") << "L-" << shifts[i];
    ctx.out << " = " << format_set(family.members()[m]) << "\n";
  }
  if (ctx.json_mode) ctx.out << rows.dump() << "\n";
  return kSuccess;
}

int cmd_lattice(Context& ctx, const std::string& text, bool list) {
  const Lattice lattice = generate_lattice(parse_set(text), lattice_options());
  if (!list) {
    if (ctx.json_mode) {
      ctx.out << json{{"count", lattice.size()}}.dump() << "\n";
    } else {
      ctx.out << lattice.size() << "\n";
    }
    return kSuccess;
  }
  const auto witnesses = lattice.witnesses();
  json rows = json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const UPSet& m = lattice.members()[i];
    const LatticeExpr w = simplify(witnesses[i], lattice.seed());
    if (ctx.json_mode) {
      rows.push_back({{"set", m}, {"literal", format_set(m)}, {"witness", w}});
    } else {
      ctx.out << format_set(m) << "\t" << w.to_string() << "\n";
    }
  }
  if (ctx.json_mode) ctx.out << json{{"count", lattice.size()}, {"members", rows}}.dump() << "\n";
  return kSuccess;
}

int cmd_member(Context& ctx, const std::vector<std::string>& words) {
  const auto [lhs, rhs] = split_in(words);
  const UPSet seed = parse_set(rhs);
  bool answer;
  if (is_numeral(lhs) && words.size() == 3) {
    answer = seed.contains(std::stoull(lhs));
  } else {
    answer = generate_lattice(seed, lattice_options()).contains(parse_set(lhs));
  }
  ctx.out << (ctx.json_mode ? json{{"member", answer}}.dump() : (answer ? "true" : "false")) << "\n";
  return answer ? kSuccess : kNegative;
}

int cmd_preimage(Context& ctx, const std::string& func, const std::string& set, bool with_expr) {
  const FuncSpec f = parse_func(func);
  const UPSet s = parse_set(set);
  const UPSet pre = preimage(f, s);
  std::optional<LatticeExpr> expr;
  if (with_expr) expr = preimage_expr(f, s);
  if (ctx.json_mode) {
    json j{{"set", pre}, {"literal", format_set(pre)}};
    if (expr) j["expr"] = *expr;
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << format_set(pre) << "\n";
    if (expr) ctx.out << expr->to_string() << "\n";
  }
  return kSuccess;
}

int cmd_express(Context& ctx, const std::vector<std::string>& words) {
  const auto [lhs, rhs] = split_in(words);
  const UPSet target = parse_set(lhs);
  const UPSet seed = parse_set(rhs);
  auto expr = find_expr(target, seed, lattice_options());
  if (expr) expr = simplify(*expr, seed);
  if (ctx.json_mode) {
    ctx.out << json{{"expr", expr ? json(*expr) : json(nullptr)}}.dump() << "\n";
  } else {
    ctx.out << (expr ? expr->to_string() : "absent") << "\n";
  }
  return expr ? kSuccess : kNegative;
}

int cmd_check(Context& ctx, const std::string& func, Nat bound) {
  const ConditionReport report = check_conditions(parse_func(func), bound);
  if (ctx.json_mode) {
    ctx.out << json(report).dump() << "\n";
  } else {
    ctx.out << "growth: " << verdict_text(report.growth) << "\n"
            << "divisibility: " << verdict_text(report.divisibility) << "\n"
            << "monotone: " << verdict_text(report.monotone) << "\n";
  }
  return kSuccess;
}

int cmd_counterexample(Context& ctx, const std::string& func, Nat bound) {
  const FuncSpec f = parse_func(func);
  const ConditionReport report = check_conditions(f, bound);
  if (!report.any_refuted()) throw ConditionError("no condition is refuted for " + func, report);
  const auto cert = build_counterexample(f, report, lattice_options());
  ctx.out << json(cert).dump(2) << "\n";
  return kSuccess;
}

int cmd_verify(Context& ctx, const std::string& path) {
  json j;
  try {
    if (path == "-") {
      j = json::parse(*ctx.in);
    } else {
      std::ifstream file(path);
      if (!file) throw UsageError("cannot open " + path);
      j = json::parse(file);
    }
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("certificate is not valid JSON: ") + e.what());
  }
  const bool ok = verify_certificate(certificate_from_json(j), lattice_options());
  ctx.out << (ctx.json_mode ? json{{"verified", ok}}.dump() : (ok ? "true" : "false")) << "\n";
  return ok ? kSuccess : kNegative;
}

// ---------------------------------------------------------------------------

struct PinnedExample {
  const char* name;
  std::function<bool()> check;
};

std::vector<PinnedExample> pinned_examples() {
  const auto S = [](const char* text) { return parse_set(text); };
  return {
      {"quotient {5,6}+4N by 2 is {3,5}+4N",
       [=] { return quotient(S("{5,6}+4N"), 2) == S("{3,5}+4N"); }},
      {"square root of {5,6}+4N equals its 2-quotient",
       [=] { return root(S("{5,6}+4N"), 2) == quotient(S("{5,6}+4N"), 2); }},
      {"quotient {1,2}+4N by 3 is {2,3}+4N",
       [=] { return quotient(S("{1,2}+4N"), 3) == S("{2,3}+4N"); }},
      {"square root of {1,2}+4N is {1,3}+4N",
       [=] { return root(S("{1,2}+4N"), 2) == S("{1,3}+4N"); }},
      {"{5,6}+4N has 7 decrements", [=] { return decrement_family(S("{5,6}+4N")).size() == 7; }},
      {"{1,2}+4N has 4 decrements", [=] { return decrement_family(S("{1,2}+4N")).size() == 4; }},
      {"square root of {0,3,4}|6+N is N minus {1}, the 4-decrement",
       [=] {
         const UPSet l = S("{0,3,4}|6+N");
         return root(l, 2) == S("{0}|2+N") && root(l, 2) == decrement(l, 4);
       }},
      {"x^2 preimage of {1,2} is {1}",
       [=] { return preimage(parse_func("x^2"), S("{1,2}")) == S("{1}"); }},
      {"((L-2)&(L-3))|(L&(L-1)) over {5,6}+4N is {3,5}+4N",
       [=] {
         return eval_expr(parse_expr("((L-2)&(L-3))|(L-0&(L-1))"), S("{5,6}+4N")) == S("{3,5}+4N");
       }},
      {"(L-0&L-1)|(L-2&L-3) over {1,2}+4N is its square root {1,3}+4N",
       [=] {
         const UPSet l = S("{1,2}+4N");
         return eval_expr(parse_expr("(L-0 & L-1) | (L-2 & L-3)"), l) == root(l, 2);
       }},
      {"quotient {1,2}+4N by 3 is the 3-decrement",
       [=] { return quotient(S("{1,2}+4N"), 3) == decrement(S("{1,2}+4N"), 3); }},
      {"2+3N is not in the lattice of {0,3,4}|6+N",
       [=] { return !generate_lattice(S("{0,3,4}|6+N")).contains(S("2+3N")); }},
      {"preimage expression of x^2 over {5,6}+4N evaluates to {3,5}+4N",
       [=] {
         const UPSet l = S("{5,6}+4N");
         return eval_expr(preimage_expr(parse_func("x^2"), l), l) == S("{3,5}+4N");
       }},
      {"table [0,1,4,6] certificate uses L={0,2,4,6} and verifies",
       [=] {
         const FuncSpec f = parse_func("table:[0,1,4,6]");
         const auto cert = build_counterexample(f, check_conditions(f, 4));
         return cert.a == 3 && cert.b == Nat{1} && cert.k == 3 && cert.seed == S("{0,2,4,6}") &&
                verify_certificate(cert);
       }},
      {"constant 4 certificate uses L=5+N and verifies",
       [=] {
         const FuncSpec f = parse_func("4");
         const auto cert = build_counterexample(f, check_conditions(f));
         return cert.seed == S("5+N") && verify_certificate(cert);
       }},
  };
}

int cmd_selftest(Context& ctx) {
  int failures = 0;
  json rows = json::array();
  for (const auto& example : pinned_examples()) {
    bool ok = false;
    try {
      ok = example.check();
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) ++failures;
    if (ctx.json_mode) {
      rows.push_back({{"name", example.name}, {"pass", ok}});
    } else {
      ctx.out << (ok ? "PASS " : "FAIL ") << example.name << "\n";
    }
  }
  if (ctx.json_mode) ctx.out << rows.dump() << "\n";
  return failures == 0 ? kSuccess : kNegative;
}

}  // namespace

RunResult run(const std::vector<std::string>& args, std::istream& in) {
  CLI::App app{"Exact computation on ultimately periodic sets of naturals", "upnat"};
  app.require_subcommand(1);

  Context ctx;
  ctx.in = &in;
  app.add_flag("--json", ctx.json_mode, "Emit JSON instead of text");

  std::string set_text, func_text, path;
  std::vector<std::string> words;
  bool count = false, list = false, with_expr = false;
  Nat bound = 64;

  auto* eval = app.add_subcommand("eval", "Evaluate a set expression to canonical form");
  eval->add_option("expr", set_text)->required();

  auto* decrements = app.add_subcommand("decrements", "List the distinct decrements of a set");
  decrements->add_option("set", set_text)->required();

  auto* lattice = app.add_subcommand("lattice", "Generate the decrement-closed lattice of a set");
  lattice->add_option("set", set_text)->required();
  lattice->add_flag("--count", count, "Print the member count (default)");
  lattice->add_flag("--list", list, "List members with witness expressions");

  auto* member = app.add_subcommand("member", "N in S, or X in lattice L");
  member->add_option("args", words)->required();

  auto* pre = app.add_subcommand("preimage", "Preimage of a set under a function");
  pre->add_option("func", func_text)->required();
  pre->add_option("set", set_text)->required();
  pre->add_flag("--expr", with_expr, "Also print a lattice expression over the set");

  auto* express = app.add_subcommand("express", "Find a lattice expression: X in L");
  express->add_option("args", words)->required();

  auto* check = app.add_subcommand("check-f", "Check growth, divisibility and monotonicity");
  check->add_option("func", func_text)->required();
  check->add_option("--bound", bound, "Points to check for table functions");

  auto* counter = app.add_subcommand("counterexample", "Build a counterexample certificate");
  counter->add_option("func", func_text)->required();
  counter->add_option("--bound", bound, "Points to check for table functions");

  auto* verify = app.add_subcommand("verify", "Verify a certificate (path or - for stdin)");
  verify->add_option("cert", path)->required();

  auto* selftest = app.add_subcommand("selftest", "Run the pinned examples");

  RunResult result;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kSuccess : kUsage;
    return result;
  }

  try {
    int code = kSuccess;
    if (eval->parsed()) code = cmd_eval(ctx, set_text);
    else if (decrements->parsed()) code = cmd_decrements(ctx, set_text);
    else if (lattice->parsed()) code = cmd_lattice(ctx, set_text, list && !count);
    else if (member->parsed()) code = cmd_member(ctx, words);
    else if (pre->parsed()) code = cmd_preimage(ctx, func_text, set_text, with_expr);
    else if (express->parsed()) code = cmd_express(ctx, words);
    else if (check->parsed()) code = cmd_check(ctx, func_text, bound);
    else if (counter->parsed()) code = cmd_counterexample(ctx, func_text, bound);
    else if (verify->parsed()) code = cmd_verify(ctx, path);
    else if (selftest->parsed()) code = cmd_selftest(ctx);
    result.exit_code = code;
  } catch (const SyntaxError& e) {
    err << "error: syntax: " << e.what() << "\n";
    result.exit_code = kUsage;
  } catch (const ConditionError& e) {
    err << "error: condition: " << e.what() << "\n";
    result.exit_code = kFailure;
  } catch (const CapacityError& e) {
    err << "error: capacity: " << e.what() << "\n";
    result.exit_code = kFailure;
  } catch (const ExpressibilityError& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = kFailure;
  } catch (const UnsupportedError& e) {
    err << "error: unsupported: " << e.what() << "\n";
    result.exit_code = kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = kUsage;
  } catch (const std::domain_error& e) {
    err << "error: domain: " << e.what() << "\n";
    result.exit_code = kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = kFailure;
  }
  result.out = ctx.out.str();
  result.err = err.str();
  return result;
}

}  // namespace upnat::cli
