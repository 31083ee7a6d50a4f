#pragma once

// JSON and CSV forms of fields, tables, reports and campaign results.
// Rationals are "num/den" strings and floats carry 15 significant digits, so
// equal inputs serialize to identical bytes.

#include <string>

#include <nlohmann/json.hpp>

#include "maskent/family.hpp"
#include "maskent/gf.hpp"
#include "maskent/verify.hpp"

namespace maskent {

/// Rounds to `digits` significant decimal digits.
double round_significant(double value, int digits = 15);

/// {p, m, q, irreducible: [c0..cm], add: [[...]], mul: [[...]]}, row-major.
nlohmann::json field_to_json(const Field& field);

/// {p, m, n, outputs: [[...], ...]}: one length-n element list per input,
/// inputs in canonical order.
nlohmann::json table_to_json(const FunctionTable& table);

/// Inverse of table_to_json. Raises TableError on malformed documents,
/// partial tables and out-of-range element indices.
FunctionTable table_from_json(const nlohmann::json& doc, std::uint32_t order_limit = Field::kDefaultOrderLimit);

nlohmann::json report_to_json(const TheoremReport& report);
nlohmann::json verdict_to_json(const InstanceVerdict& verdict);
nlohmann::json campaign_to_json(const CampaignResult& result);

/// Header plus one row per instance:
/// f_digest,avg_cp,avg_h2,avg_shannon,coordinatewise,equality
std::string campaign_to_csv(const CampaignResult& result);

}  // namespace maskent
