#pragma once

#include <json.hpp>

#include "qbethe/dominance.hpp"
#include "qbethe/qchar.hpp"
#include "qbethe/tq.hpp"

namespace qbethe {

using nlohmann::json;

// LMonomial wire form: one array holding {"node","base","qexp","exp"} entries
// for X-factors followed by {"ynode","num","den"} entries for y-factors, in
// canonical map order. Round-trips bit-exactly.
json to_json(const LMonomial& m);
LMonomial lmonomial_from_json(const json& j);

// QChar wire form: {"head": monomial, "depth": int | "inf",
//                   "terms": [{"monomial": ..., "coeff": "<decimal>"}]}
json to_json(const QChar& x);
QChar qchar_from_json(const json& j);

json to_json(const CollapsedChar& c);

json to_json(const DominanceResult& r, const RootData& rd);

json to_json(const TQReport& r);

}  // namespace qbethe
