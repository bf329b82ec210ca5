#pragma once

#include <json.hpp>

#include "upnat/lattice.hpp"
#include "upnat/transforms.hpp"
#include "upnat/upset.hpp"

// JSON schemas:
//   UPSet              {"transient": [..], "threshold": q, "period": r, "residues": [..]}
//   LatticeExpr        [[2, 3], [0, 1]]
//   ConditionVerdict   {"verdict": "proved"|"refuted"|"checked-to-bound",
//                       "a": n?, "b": n?, "checked": n?}
//   ConditionReport    {"growth": .., "divisibility": .., "monotone": ..}
//   Certificate        {"kind", "f", "a", "b", "ell", "k", "L", "claims", "verified"}
//                      with claims [{"x", "fx", "in_L"}] and L a UPSet plus
//                      its "literal".

namespace upnat {

void to_json(nlohmann::json& j, const UPSet& s);
void from_json(const nlohmann::json& j, UPSet& s);

void to_json(nlohmann::json& j, const LatticeExpr& e);
LatticeExpr lattice_expr_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const ConditionVerdict& v);
void to_json(nlohmann::json& j, const ConditionReport& r);

void to_json(nlohmann::json& j, const CounterexampleCertificate& c);
/// Throws std::invalid_argument (or a SyntaxError from the function literal)
/// on malformed input.
CounterexampleCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace upnat
