#include "rigdist/json_io.hpp"

#include <algorithm>

#include <json.hpp>

namespace rigdist {

namespace {

using json = nlohmann::ordered_json;

json element_to_value(const Element& e) {
  switch (e.kind()) {
    case Element::Kind::atom:
      return e.atom_name();
    case Element::Kind::pair:
      return json::array(
          {"pair", element_to_value(e.first()), element_to_value(e.second())});
    case Element::Kind::left:
      return json::array({"L", element_to_value(e.tagged())});
    case Element::Kind::right:
      return json::array({"R", element_to_value(e.tagged())});
    case Element::Kind::table: {
      json rows = json::array();
      for (const auto& [key, coeff] : e.rows())
        rows.push_back(json::array({element_to_value(key), coeff}));
      return json::array({"fn", rows});
    }
  }
  return {};
}

Element element_from_value(const json& v) {
  if (v.is_string()) return Element::atom(v.get<std::string>());
  if (!v.is_array() || v.empty() || !v[0].is_string())
    raise(Errc::parse, "bad element: " + v.dump());
  const std::string head = v[0].get<std::string>();
  if (head == "pair") {
    if (v.size() != 3) raise(Errc::parse, "bad pair: " + v.dump());
    return Element::pair(element_from_value(v[1]), element_from_value(v[2]));
  }
  if (head == "L" || head == "R") {
    if (v.size() != 2) raise(Errc::parse, "bad tag: " + v.dump());
    return head == "L" ? Element::tag_left(element_from_value(v[1]))
                       : Element::tag_right(element_from_value(v[1]));
  }
  if (head == "fn") {
    if (v.size() != 2 || !v[1].is_array())
      raise(Errc::parse, "bad fn element: " + v.dump());
    Element::TableRows rows;
    for (const auto& row : v[1]) {
      if (!row.is_array() || row.size() != 2 || !row[1].is_string())
        raise(Errc::parse, "bad fn row: " + row.dump());
      rows.emplace_back(element_from_value(row[0]), row[1].get<std::string>());
    }
    return Element::fn_table(std::move(rows));
  }
  raise(Errc::parse, "unknown element form: " + v.dump());
}

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) raise(Errc::parse, "malformed JSON");
  if (!doc.is_object()) raise(Errc::parse, "expected a JSON object");
  if (!doc.contains("version") || doc["version"] != 1)
    raise(Errc::parse, "missing or unsupported version");
  return doc;
}

Rig rig_of(const json& doc) {
  if (!doc.contains("rig") || !doc["rig"].is_string())
    raise(Errc::parse, "missing rig name");
  return rig_by_name(doc["rig"].get<std::string>());
}

std::vector<std::pair<Element, Coeff>> weight_rows(const Rig& rig,
                                                   const json& arr,
                                                   ParseMode mode) {
  if (!arr.is_array()) raise(Errc::parse, "expected an array of rows");
  std::vector<std::pair<Element, Coeff>> rows;
  rows.reserve(arr.size());
  for (const auto& row : arr) {
    if (!row.is_array() || row.size() != 2 || !row[1].is_string())
      raise(Errc::parse, "bad weight row: " + row.dump());
    Element key = element_from_value(row[0]);
    Coeff value = rig.parse(row[1].get<std::string>());
    if (mode == ParseMode::strict && rig.is_zero(value))
      raise(Errc::parse, "zero coefficient at " + key.text());
    rows.emplace_back(std::move(key), std::move(value));
  }
  if (mode == ParseMode::strict) {
    auto keys = rows;
    std::sort(keys.begin(), keys.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < keys.size(); ++i)
      if (keys[i - 1].first == keys[i].first)
        raise(Errc::parse, "duplicate key " + keys[i].first.text());
  }
  return rows;
}

std::string emit(const json& doc) { return doc.dump() + "\n"; }

}  // namespace

std::string element_to_json(const Element& e) {
  return element_to_value(e).dump();
}

Element element_from_json_text(const std::string& text) {
  json v = json::parse(text, nullptr, false);
  if (v.is_discarded()) raise(Errc::parse, "malformed JSON");
  return element_from_value(v);
}

std::string dist_to_json(const Dist& p) {
  json doc;
  doc["version"] = 1;
  doc["rig"] = p.rig().name();
  json weights = json::array();
  for (const auto& [x, w] : p.entries())
    weights.push_back(json::array({element_to_value(x), p.rig().format(w)}));
  doc["weights"] = std::move(weights);
  return emit(doc);
}

Dist dist_from_json_text(const std::string& text, ParseMode mode) {
  const json doc = parse_document(text);
  const Rig rig = rig_of(doc);
  if (!doc.contains("weights")) raise(Errc::parse, "missing weights");
  return Dist(rig, weight_rows(rig, doc["weights"], mode));
}

std::string fn_to_json(const Fn& f) {
  json doc;
  doc["version"] = 1;
  doc["rig"] = f.rig().name();
  json rows = json::array();
  for (const auto& [x, w] : f.rows())
    rows.push_back(json::array({element_to_value(x), f.rig().format(w)}));
  doc["fn"] = std::move(rows);
  json carrier = json::array();
  for (const auto& x : f.carrier().elements())
    carrier.push_back(element_to_value(x));
  doc["carrier"] = std::move(carrier);
  return emit(doc);
}

Fn fn_from_json_text(const std::string& text, ParseMode mode) {
  const json doc = parse_document(text);
  const Rig rig = rig_of(doc);
  if (!doc.contains("fn") || !doc.contains("carrier"))
    raise(Errc::parse, "missing fn or carrier");
  // Zero values are legitimate in a function table, so mode does not alter
  // coefficients here; a table must be single-valued in every mode.
  (void)mode;
  if (!doc["fn"].is_array()) raise(Errc::parse, "expected an array of rows");
  std::vector<std::pair<Element, Coeff>> rows;
  for (const auto& row : doc["fn"]) {
    if (!row.is_array() || row.size() != 2 || !row[1].is_string())
      raise(Errc::parse, "bad fn row: " + row.dump());
    rows.emplace_back(element_from_value(row[0]),
                      rig.parse(row[1].get<std::string>()));
  }
  auto keys = rows;
  std::sort(keys.begin(), keys.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < keys.size(); ++i)
    if (keys[i - 1].first == keys[i].first)
      raise(Errc::parse, "duplicate fn key " + keys[i].first.text());
  std::vector<Element> carrier;
  for (const auto& v : doc["carrier"]) carrier.push_back(element_from_value(v));
  return Fn(rig, FinSpace(std::move(carrier)), std::move(rows));
}

std::string map_to_json(const ElementMap& m) {
  json doc;
  doc["version"] = 1;
  json rows = json::array();
  for (const auto& [x, y] : m.pairs())
    rows.push_back(json::array({element_to_value(x), element_to_value(y)}));
  doc["map"] = std::move(rows);
  return emit(doc);
}

ElementMap map_from_json_text(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.contains("map") || !doc["map"].is_array())
    raise(Errc::parse, "missing map rows");
  std::vector<std::pair<Element, Element>> pairs;
  for (const auto& row : doc["map"]) {
    if (!row.is_array() || row.size() != 2)
      raise(Errc::parse, "bad map row: " + row.dump());
    pairs.emplace_back(element_from_value(row[0]), element_from_value(row[1]));
  }
  return ElementMap::from_pairs(std::move(pairs));
}

}  // namespace rigdist
