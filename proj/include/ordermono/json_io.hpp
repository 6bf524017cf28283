#pragma once

// File formats.
//
//   preorder        {"n": int, "labels": [string]?, "pairs": [[int, int], ...]}
//   value table     {"values": ["p/q", ...]}
//   multi-utility   [ <value table>, ... ]
//   family          {"n": int?, "sets": [[int, ...], ...]}
//   distribution    ["p/q", ...]
//   density report  {"order_dense": bool, "debreu_dense": bool, "upper_dense": bool,
//                    "debreu_upper_dense": bool, "first_violation": [int, int] | null}
//
// Rationals are written as "p/q" strings. On input, strings in any form
// accepted by parse_rational and JSON integers are both allowed.
//
// Every malformed document raises ParseError.

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "ordermono/core_order.hpp"
#include "ordermono/majorization.hpp"
#include "ordermono/monotones.hpp"
#include "ordermono/separability.hpp"

namespace ordermono {

using Json = nlohmann::json;

Json load_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

Rational rational_from_json(const Json& j);

Json to_json(const FinitePreorder& P);
FinitePreorder preorder_from_json(const Json& j);

Json to_json(const ValueTable& f);
ValueTable table_from_json(const Json& j);

Json to_json(const MultiUtility& U);
MultiUtility multi_utility_from_json(const Json& j);

Json to_json(const IncreasingFamily& F);
/// `n` is required when the document omits it.
IncreasingFamily family_from_json(const Json& j, std::optional<std::size_t> n = std::nullopt);

Json to_json(const ElementSet& S);

Json to_json(const DensityReport& report);

Json to_json(const Dist& p);
Dist dist_from_json(const Json& j);

/// Header `t,p1,p2,p3,entropy,is_maximal,is_entropy_argmax`, then one row per
/// grid point; rationals as p/q, entropy with 15 significant digits, flags 0/1.
void write_maxent_csv(std::ostream& os, const MaxentReport& report,
                      LogBase base = LogBase::Nats);

}  // namespace ordermono
