#ifndef SG_JSON_HPP
#define SG_JSON_HPP

// JSON forms of witnesses, coverage reports and results (nlohmann::json).

#include "sg/constructions.hpp"
#include "sg/error.hpp"
#include "sg/result.hpp"
#include "sg/verify.hpp"

#include <json.hpp>

#include <string>

namespace sg {

using nlohmann::json;

inline json to_json_value(const Witness& w) {
  json assignment = json::array();
  for (const auto& pp : w.assignment)
    assignment.push_back({{"u", pp.u}, {"v", pp.v}, {"path", pp.path.vertices}});
  return {{"set", w.set}, {"assignment", std::move(assignment)}};
}

inline json to_json_value(const CoverageReport& r) {
  json invalid = json::array();
  for (const auto& p : r.invalid_paths) invalid.push_back({{"u", p.u}, {"v", p.v}, {"reason", p.reason}});
  return {{"covered", r.covered}, {"uncovered_vertices", r.uncovered_vertices}, {"invalid_paths", std::move(invalid)}};
}

namespace detail {

inline json opt_json(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace detail

inline json to_json_value(const FormulaTrace& t) {
  return {{"n", t.n},
          {"m", t.m},
          {"case_label", t.case_label ? json(std::string(to_string(*t.case_label))) : json(nullptr)},
          {"k_star", detail::opt_json(t.k_star)},
          {"ceil_x_star", detail::opt_json(t.ceil_x_star)},
          {"f_at", detail::opt_json(t.f_at)},
          {"g_at", detail::opt_json(t.g_at)},
          {"F_at", detail::opt_json(t.F_at)},
          {"G_at", detail::opt_json(t.G_at)},
          {"s_at", detail::opt_json(t.s_at)}};
}

inline json to_json_value(const SgResult& r) {
  json out = {{"value", r.value}, {"method", std::string(to_string(r.method))}};
  out["witness"] = r.witness ? to_json_value(*r.witness) : json(nullptr);
  out["trace"] = r.trace ? to_json_value(*r.trace) : json(nullptr);
  if (r.split) out["split"] = {r.split->p, r.split->q};
  return out;
}

inline json to_json_value(const ConstructionReport& r) {
  return {{"target_size", r.target_size},
          {"achieved_size", r.achieved_size},
          {"repairs", r.repairs},
          {"target_achieved", r.target_achieved},
          {"note", r.note}};
}

inline json error_json(ErrorCode code, const std::string& message) {
  return {{"error", {{"code", std::string(to_string(code))}, {"message", message}}}};
}

/// Parses `{"set":[...],"assignment":[{"u":..,"v":..,"path":[...]}]}`.
/// Structural problems raise ParseError; semantic checks belong to verify_witness.
inline Witness witness_from_json(const json& j) {
  try {
    Witness w;
    w.set = j.at("set").get<std::vector<Vertex>>();
    for (const auto& rec : j.at("assignment"))
      w.assignment.push_back(
        {rec.at("u").get<Vertex>(), rec.at("v").get<Vertex>(), Path{rec.at("path").get<std::vector<Vertex>>()}});
    return w;
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("witness JSON: ") + e.what());
  }
}

inline Witness witness_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("witness JSON: ") + e.what());
  }
  return witness_from_json(j);
}

}  // namespace sg

#endif
