#pragma once

#include "bruhat/atlas.hpp"

#include <nlohmann/json.hpp>

namespace bruhat {

// Field order is fixed so that serialized reports diff cleanly:
// { n, charts: [ { l, word, reduced, rows: [ { alpha, generator,
//   closed_form_match, pullback, divisors, sign, ... } ], coverage, ... } ],
//   pass, ... }
nlohmann::ordered_json to_json(const AtlasReport& report);
nlohmann::ordered_json to_json(const ChartReport& report);

AtlasReport atlas_report_from_json(const nlohmann::ordered_json& j);
ChartReport chart_report_from_json(const nlohmann::ordered_json& j);

bool operator==(const DivisorMatch& a, const DivisorMatch& b);
bool operator==(const AlphaRow& a, const AlphaRow& b);
bool operator==(const ChartReport& a, const ChartReport& b);
bool operator==(const AtlasReport& a, const AtlasReport& b);

}  // namespace bruhat
