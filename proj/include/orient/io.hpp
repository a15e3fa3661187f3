#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "orient/model.hpp"

namespace orient {

namespace detail {

inline double number_field(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) throw ValidationError(std::string("expected a number for ") + what);
  return j.get<double>();
}

inline Interval interval_field(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2)
    throw ValidationError(std::string("expected [lo, hi] for ") + what);
  return {number_field(j[0], what), number_field(j[1], what)};
}

}  // namespace detail

/// Parses an instance document:
/// { "vertices": [{"id", "cost", "interval": [lo, hi], "pmf": [{"cell": [a, b], "mass"}]}],
///   "hyperedges": [[id, ...], ...] }
inline Instance parse_instance(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed instance document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw ValidationError("malformed instance document: missing \"vertices\" array");

  std::vector<UncertainVertex> vertices;
  for (const auto& jv : doc["vertices"]) {
    if (!jv.is_object() || !jv.contains("id") || !jv["id"].is_string())
      throw ValidationError("malformed instance document: vertex without string id");
    UncertainVertex v;
    v.id = jv["id"].get<std::string>();
    if (!jv.contains("cost") || !jv.contains("interval") || !jv.contains("pmf"))
      throw ValidationError("vertex '" + v.id + "': needs cost, interval and pmf");
    v.cost = detail::number_field(jv["cost"], "cost");
    v.interval = detail::interval_field(jv["interval"], "interval");
    if (!jv["pmf"].is_array()) throw ValidationError("vertex '" + v.id + "': pmf must be an array");
    std::vector<PmfCell> cells;
    for (const auto& jc : jv["pmf"]) {
      if (!jc.is_object() || !jc.contains("cell") || !jc.contains("mass"))
        throw ValidationError("vertex '" + v.id + "': pmf entries need cell and mass");
      cells.push_back({detail::interval_field(jc["cell"], "cell"), detail::number_field(jc["mass"], "mass")});
    }
    v.pmf = Pmf(std::move(cells));
    vertices.push_back(std::move(v));
  }

  std::vector<std::vector<std::string>> edges;
  if (doc.contains("hyperedges")) {
    if (!doc["hyperedges"].is_array()) throw ValidationError("\"hyperedges\" must be an array");
    for (const auto& je : doc["hyperedges"]) {
      if (!je.is_array()) throw ValidationError("hyperedge must be an array of ids");
      std::vector<std::string> members;
      for (const auto& id : je) {
        if (!id.is_string()) throw ValidationError("hyperedge member must be a string id");
        members.push_back(id.get<std::string>());
      }
      edges.push_back(std::move(members));
    }
  }
  return Instance::from_ids(std::move(vertices), edges);
}

inline nlohmann::json to_json(const Instance& inst) {
  nlohmann::json doc;
  doc["vertices"] = nlohmann::json::array();
  for (const auto& v : inst.vertices()) {
    nlohmann::json jv;
    jv["id"] = v.id;
    jv["cost"] = v.cost;
    jv["interval"] = {v.interval.lo, v.interval.hi};
    jv["pmf"] = nlohmann::json::array();
    for (const auto& c : v.pmf.cells())
      jv["pmf"].push_back({{"cell", {c.cell.lo, c.cell.hi}}, {"mass", c.mass}});
    doc["vertices"].push_back(std::move(jv));
  }
  doc["hyperedges"] = nlohmann::json::array();
  for (const auto& e : inst.hyperedges()) {
    nlohmann::json je = nlohmann::json::array();
    for (auto v : e) je.push_back(inst.vertex(v).id);
    doc["hyperedges"].push_back(std::move(je));
  }
  return doc;
}

// nlohmann/json prints doubles with 17 significant digits, so values round-trip.
inline std::string serialize_instance(const Instance& inst) { return to_json(inst).dump(2) + "\n"; }

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open instance file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

inline void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize_instance(inst);
}

}  // namespace orient
