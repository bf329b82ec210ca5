#include "upnat/json.hpp"

#include "upnat/literal.hpp"

namespace upnat {

using nlohmann::json;

void to_json(json& j, const UPSet& s) {
  j = json{{"transient", s.transient()},
           {"threshold", s.threshold()},
           {"period", s.period()},
           {"residues", s.residues()}};
}

void from_json(const json& j, UPSet& s) {
  try {
    const auto transient = j.at("transient").get<std::vector<Nat>>();
    const auto residues = j.at("residues").get<std::vector<Nat>>();
    s = UPSet::make(transient, j.at("threshold").get<Nat>(), j.at("period").get<Nat>(), residues);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed set JSON: ") + e.what());
  }
}

void to_json(json& j, const LatticeExpr& e) { j = e.clauses(); }

LatticeExpr lattice_expr_from_json(const json& j) {
  try {
    return LatticeExpr(j.get<std::vector<LatticeExpr::Clause>>());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed expression JSON: ") + e.what());
  }
}

void to_json(json& j, const ConditionVerdict& v) {
  j = json{{"verdict", to_string(v.verdict)}};
  if (v.a) j["a"] = *v.a;
  if (v.b) j["b"] = *v.b;
  if (v.verdict == Verdict::kCheckedToBound) j["checked"] = v.checked;
}

void to_json(json& j, const ConditionReport& r) {
  j = json{{"growth", r.growth}, {"divisibility", r.divisibility}, {"monotone", r.monotone}};
}

void to_json(json& j, const CounterexampleCertificate& c) {
  json claims = json::array();
  for (const Claim& claim : c.claims) {
    claims.push_back({{"x", claim.x}, {"fx", claim.fx}, {"in_L", claim.in_seed}});
  }
  json seed = c.seed;
  seed["literal"] = format_set(c.seed);
  j = json{{"kind", to_string(c.kind)},
           {"f", c.f.to_string()},
           {"a", c.a},
           {"b", c.b ? json(*c.b) : json(nullptr)},
           {"ell", c.ell},
           {"k", c.k},
           {"L", seed},
           {"claims", claims},
           {"verified", c.verified}};
}

CounterexampleCertificate certificate_from_json(const json& j) {
  try {
    CounterexampleCertificate c;
    c.kind = certificate_kind_from_string(j.at("kind").get<std::string>());
    c.f = parse_func(j.at("f").get<std::string>());
    c.a = j.at("a").get<Nat>();
    if (j.contains("b") && !j.at("b").is_null()) c.b = j.at("b").get<Nat>();
    c.ell = j.value("ell", Nat{0});
    c.k = j.value("k", Nat{0});
    c.seed = j.at("L").get<UPSet>();
    for (const auto& claim : j.at("claims")) {
      c.claims.push_back(
          {claim.at("x").get<Nat>(), claim.at("fx").get<Nat>(), claim.at("in_L").get<bool>()});
    }
    c.verified = j.value("verified", false);
    return c;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate JSON: ") + e.what());
  }
}

}  // namespace upnat
