#include "ordermono/json_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ordermono/error.hpp"

namespace ordermono {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw ParseError(what); }

std::size_t index_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    malformed(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  malformed("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

// Preorders -------------------------------------------------------------------

Json to_json(const FinitePreorder& P) {
  Json j;
  j["n"] = P.size();
  if (!P.labels().empty()) j["labels"] = P.labels();
  Json pairs = Json::array();
  for (auto [x, y] : P.pairs()) pairs.push_back({x, y});
  j["pairs"] = pairs;
  return j;
}

FinitePreorder preorder_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n")) malformed("preorder must be an object with \"n\"");
  const std::size_t n = index_from_json(j["n"], "\"n\"");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) malformed("\"labels\" must be an array");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) malformed("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  std::vector<FinitePreorder::Pair> pairs;
  if (j.contains("pairs")) {
    if (!j["pairs"].is_array()) malformed("\"pairs\" must be an array");
    for (const auto& p : j["pairs"]) {
      if (!p.is_array() || p.size() != 2) malformed("each pair must be [x, y]");
      pairs.emplace_back(index_from_json(p[0], "pair entry"), index_from_json(p[1], "pair entry"));
    }
  }
  return FinitePreorder::from_relation_pairs(n, pairs, std::move(labels));
}

// Value tables ----------------------------------------------------------------

Json to_json(const ValueTable& f) {
  Json values = Json::array();
  for (const auto& v : f.values()) values.push_back(to_string(v));
  return Json{{"values", values}};
}

ValueTable table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array()) {
    malformed("value table must be an object with a \"values\" array");
  }
  std::vector<Rational> values;
  for (const auto& v : j["values"]) values.push_back(rational_from_json(v));
  return ValueTable(std::move(values));
}

Json to_json(const MultiUtility& U) {
  Json out = Json::array();
  for (const auto& u : U) out.push_back(to_json(u));
  return out;
}

MultiUtility multi_utility_from_json(const Json& j) {
  if (!j.is_array()) malformed("multi-utility must be an array of value tables");
  MultiUtility out;
  for (const auto& u : j) out.push_back(table_from_json(u));
  return out;
}

// Families and sets -------------------------------------------------------------

Json to_json(const ElementSet& S) { return Json(S.members()); }

Json to_json(const IncreasingFamily& F) {
  Json sets = Json::array();
  for (const auto& A : F.sets) sets.push_back(to_json(A));
  return Json{{"n", F.n}, {"sets", sets}};
}

IncreasingFamily family_from_json(const Json& j, std::optional<std::size_t> n) {
  if (!j.is_object() || !j.contains("sets") || !j["sets"].is_array()) {
    malformed("family must be an object with a \"sets\" array");
  }
  if (j.contains("n")) n = index_from_json(j["n"], "\"n\"");
  if (!n) malformed("family needs a ground set size \"n\"");
  IncreasingFamily F{*n, {}};
  for (const auto& s : j["sets"]) {
    if (!s.is_array()) malformed("each set must be an array of indices");
    ElementSet A(*n);
    for (const auto& x : s) A.insert(index_from_json(x, "set member"));
    F.sets.push_back(std::move(A));
  }
  return F;
}

Json to_json(const DensityReport& report) {
  Json j{{"order_dense", report.order_dense},
         {"debreu_dense", report.debreu_dense},
         {"upper_dense", report.upper_dense},
         {"debreu_upper_dense", report.debreu_upper_dense}};
  if (report.first_violation) {
    j["first_violation"] = {report.first_violation->first, report.first_violation->second};
  } else {
    j["first_violation"] = nullptr;
  }
  return j;
}

// Distributions ------------------------------------------------------------------

Json to_json(const Dist& p) {
  Json out = Json::array();
  for (const auto& v : p.probs()) out.push_back(to_string(v));
  return out;
}

Dist dist_from_json(const Json& j) {
  if (!j.is_array()) malformed("distribution must be an array of rationals");
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return Dist(std::move(v));
}

void write_maxent_csv(std::ostream& os, const MaxentReport& report, LogBase base) {
  const double scale = base == LogBase::Bits ? 1.0 / std::log(2.0) : 1.0;
  os << "t,p1,p2,p3,entropy,is_maximal,is_entropy_argmax\n";
  std::ostringstream row;
  row << std::setprecision(15);
  for (std::size_t a = 0; a < report.grid.size(); ++a) {
    const auto& g = report.grid[a];
    row.str("");
    row << to_string(g.t);
    for (const auto& v : g.p.probs()) row << ',' << to_string(v);
    row << ',' << report.entropy[a] * scale << ',' << (report.is_maximal[a] ? 1 : 0) << ','
        << (report.is_entropy_argmax[a] ? 1 : 0) << '\n';
    os << row.str();
  }
}

}  // namespace ordermono
