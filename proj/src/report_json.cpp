#include "bruhat/report_json.hpp"

namespace bruhat {

using json = nlohmann::ordered_json;

namespace {

json poly_or_null(const std::optional<Polynomial>& p) {
  return p ? json(p->to_string()) : json(nullptr);
}

std::optional<Polynomial> poly_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return Polynomial::parse(j.get<std::string>());
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json row_to_json(const AlphaRow& r) {
  json j;
  j["alpha"] = r.alpha;
  j["generator"] = poly_or_null(r.generator);
  j["closed_form_match"] = opt(r.closed_form_match);
  j["pullback"] = poly_or_null(r.pullback);
  if (r.divisors) {
    json ds = json::array();
    for (const auto& d : r.divisors->divisors) ds.push_back(d.to_string());
    j["divisors"] = ds;
    j["sign"] = r.divisors->sign;
  } else {
    j["divisors"] = nullptr;
    j["sign"] = nullptr;
  }
  if (r.reversed_form_match) j["reversed_form_match"] = *r.reversed_form_match;
  j["generator_count"] = r.generator_count;
  json cells = json::array();
  for (const auto& c : r.cells) cells.push_back(json::array({c.row, c.col, c.rank}));
  j["essential_cells"] = cells;
  return j;
}

AlphaRow row_from_json(const json& j) {
  AlphaRow r;
  r.alpha = j.at("alpha").get<int>();
  r.generator = poly_from(j.at("generator"));
  r.closed_form_match = opt_from<bool>(j, "closed_form_match");
  r.reversed_form_match = opt_from<bool>(j, "reversed_form_match");
  r.pullback = poly_from(j.at("pullback"));
  if (!j.at("divisors").is_null()) {
    DivisorMatch m;
    for (const auto& d : j.at("divisors")) m.divisors.push_back(DivisorIndex::parse(d.get<std::string>()));
    m.sign = j.at("sign").get<int>();
    r.divisors = std::move(m);
  }
  r.generator_count = j.at("generator_count").get<std::size_t>();
  for (const auto& c : j.at("essential_cells"))
    r.cells.push_back(EssentialCell{c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>()});
  return r;
}

}  // namespace

json to_json(const ChartReport& c) {
  json j;
  j["l"] = c.chart;
  j["word"] = c.word;
  j["reduced"] = c.reduced;
  json rows = json::array();
  for (const auto& r : c.rows) rows.push_back(row_to_json(r));
  j["rows"] = rows;
  j["coverage"] = c.coverage;
  j["n"] = c.rank;
  j["length"] = c.length;
  j["coordinate_change"] = c.coordinate_change;
  j["origin_fixed"] = c.origin_fixed;
  j["failures"] = c.failures;
  j["pass"] = c.passes();
  return j;
}

json to_json(const AtlasReport& a) {
  json j;
  j["n"] = a.rank;
  json charts = json::array();
  for (const auto& c : a.charts) charts.push_back(to_json(c));
  j["charts"] = charts;
  j["pass"] = a.pass;
  j["inverse_pairs"] = a.inverse_pairs;
  j["distinct_cells"] = a.distinct_cells;
  j["failures"] = a.failures;
  return j;
}

ChartReport chart_report_from_json(const json& j) {
  ChartReport c;
  c.chart = j.at("l").get<int>();
  c.word = j.at("word").get<Word>();
  c.reduced = j.at("reduced").get<bool>();
  for (const auto& r : j.at("rows")) c.rows.push_back(row_from_json(r));
  c.coverage = j.at("coverage").get<bool>();
  c.rank = j.at("n").get<int>();
  c.length = j.at("length").get<int>();
  c.coordinate_change = j.at("coordinate_change").get<bool>();
  c.origin_fixed = j.at("origin_fixed").get<bool>();
  c.failures = j.at("failures").get<std::vector<std::string>>();
  return c;
}

AtlasReport atlas_report_from_json(const json& j) {
  AtlasReport a;
  a.rank = j.at("n").get<int>();
  for (const auto& c : j.at("charts")) a.charts.push_back(chart_report_from_json(c));
  a.pass = j.at("pass").get<bool>();
  a.inverse_pairs = j.at("inverse_pairs").get<bool>();
  a.distinct_cells = j.at("distinct_cells").get<bool>();
  a.failures = j.at("failures").get<std::vector<std::string>>();
  return a;
}

bool operator==(const DivisorMatch& a, const DivisorMatch& b) {
  return a.divisors == b.divisors && a.sign == b.sign;
}

bool operator==(const AlphaRow& a, const AlphaRow& b) {
  return a.alpha == b.alpha && a.generator == b.generator &&
         a.closed_form_match == b.closed_form_match &&
         a.reversed_form_match == b.reversed_form_match && a.pullback == b.pullback &&
         a.divisors == b.divisors && a.generator_count == b.generator_count && a.cells == b.cells;
}

bool operator==(const ChartReport& a, const ChartReport& b) {
  return a.chart == b.chart && a.rank == b.rank && a.word == b.word && a.reduced == b.reduced &&
         a.length == b.length && a.rows == b.rows && a.coverage == b.coverage &&
         a.coordinate_change == b.coordinate_change && a.origin_fixed == b.origin_fixed &&
         a.failures == b.failures;
}

bool operator==(const AtlasReport& a, const AtlasReport& b) {
  return a.rank == b.rank && a.charts == b.charts && a.pass == b.pass &&
         a.inverse_pairs == b.inverse_pairs && a.distinct_cells == b.distinct_cells &&
         a.failures == b.failures;
}

}  // namespace bruhat
