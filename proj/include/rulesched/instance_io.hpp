#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rulesched/instance.hpp"

namespace rulesched {

namespace detail {

inline void require_keys(const nlohmann::json& obj, const std::string& path,
                         std::initializer_list<const char*> required,
                         std::initializer_list<const char*> optional) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : required) known = known || item.key() == k;
    for (const char* k : optional) known = known || item.key() == k;
    if (!known)
      throw ParseError(path + "." + item.key() + ": unknown field");
  }
  for (const char* k : required)
    if (!obj.contains(k))
      throw ParseError(path + "." + k + ": missing required field");
}

inline int get_count(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    throw ParseError(path + ": must be a positive integer");
  return j.get<int>();
}

}  // namespace detail

/// Parses the instance document format:
///
///   { "days": 7, "shifts_per_day": 2, "undercover_weight": 100,
///     "demand": [[d0s0, d0s1], ...],
///     "nurses": [ { "patterns": [ { "cover": [0,1,...], "cost": 3 } ] } ] }
///
/// Field names and nesting are normative; unknown fields are rejected.
/// undercover_weight may be omitted and defaults to 100. Errors report the
/// offending field path.
inline Instance parse_instance(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("$: expected a JSON object");
  detail::require_keys(root, "$", {"days", "shifts_per_day", "demand", "nurses"},
                       {"undercover_weight"});

  Instance inst;
  inst.days = detail::get_count(root["days"], "$.days");
  inst.shifts_per_day =
      detail::get_count(root["shifts_per_day"], "$.shifts_per_day");

  if (root.contains("undercover_weight")) {
    const auto& w = root["undercover_weight"];
    if (!w.is_number() || w.get<double>() < 0.0)
      throw ParseError("$.undercover_weight: must be a non-negative number");
    inst.undercover_weight = w.get<double>();
  }

  const auto& demand = root["demand"];
  if (!demand.is_array() || static_cast<int>(demand.size()) != inst.days)
    throw ParseError("$.demand: expected " + std::to_string(inst.days) +
                     " day rows");
  inst.demand.resize(inst.days);
  for (int d = 0; d < inst.days; ++d) {
    const std::string row_path = "$.demand[" + std::to_string(d) + "]";
    const auto& row = demand[d];
    if (!row.is_array() || static_cast<int>(row.size()) != inst.shifts_per_day)
      throw ParseError(row_path + ": expected " +
                       std::to_string(inst.shifts_per_day) + " entries");
    for (int s = 0; s < inst.shifts_per_day; ++s) {
      const auto& cell = row[s];
      if (!cell.is_number_integer() || cell.get<long long>() < 0)
        throw ParseError(row_path + "[" + std::to_string(s) +
                         "]: must be a non-negative integer");
      inst.demand[d].push_back(cell.get<int>());
    }
  }

  const auto& nurses = root["nurses"];
  if (!nurses.is_array() || nurses.empty())
    throw ParseError("$.nurses: expected a non-empty array");
  const int slots = inst.slot_count();
  for (std::size_t j = 0; j < nurses.size(); ++j) {
    const std::string nurse_path = "$.nurses[" + std::to_string(j) + "]";
    const auto& nj = nurses[j];
    if (!nj.is_object()) throw ParseError(nurse_path + ": expected an object");
    detail::require_keys(nj, nurse_path, {"patterns"}, {});
    const auto& patterns = nj["patterns"];
    if (!patterns.is_array() || patterns.empty())
      throw ParseError(nurse_path + ".patterns: expected a non-empty array");
    Nurse nurse;
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      const std::string pat_path =
          nurse_path + ".patterns[" + std::to_string(p) + "]";
      const auto& pj = patterns[p];
      if (!pj.is_object()) throw ParseError(pat_path + ": expected an object");
      detail::require_keys(pj, pat_path, {"cover", "cost"}, {});
      Pattern pat;
      const auto& cover = pj["cover"];
      if (!cover.is_array() || static_cast<int>(cover.size()) != slots)
        throw ParseError(pat_path + ".cover: length " +
                         std::to_string(cover.size()) +
                         ", expected days * shifts_per_day = " +
                         std::to_string(slots));
      for (std::size_t k = 0; k < cover.size(); ++k) {
        const auto& bit = cover[k];
        if (!bit.is_number_integer() ||
            (bit.get<long long>() != 0 && bit.get<long long>() != 1))
          throw ParseError(pat_path + ".cover[" + std::to_string(k) +
                           "]: entries must be 0 or 1");
        pat.cover.push_back(static_cast<std::uint8_t>(bit.get<int>()));
      }
      const auto& cost = pj["cost"];
      if (!cost.is_number())
        throw ParseError(pat_path + ".cost: must be a number");
      pat.cost = cost.get<double>();
      if (pat.cost < 0.0)
        throw ParseError(pat_path + ".cost: must be non-negative");
      nurse.patterns.push_back(std::move(pat));
    }
    inst.nurses.push_back(std::move(nurse));
  }

  inst.validate();
  return inst;
}

inline nlohmann::ordered_json instance_to_json(const Instance& inst) {
  nlohmann::ordered_json root;
  root["days"] = inst.days;
  root["shifts_per_day"] = inst.shifts_per_day;
  root["undercover_weight"] = inst.undercover_weight;
  root["demand"] = inst.demand;
  nlohmann::ordered_json nurses = nlohmann::ordered_json::array();
  for (const Nurse& nurse : inst.nurses) {
    nlohmann::ordered_json patterns = nlohmann::ordered_json::array();
    for (const Pattern& pat : nurse.patterns) {
      nlohmann::ordered_json pj;
      pj["cover"] = std::vector<int>(pat.cover.begin(), pat.cover.end());
      pj["cost"] = pat.cost;
      patterns.push_back(std::move(pj));
    }
    nurses.push_back(nlohmann::ordered_json{{"patterns", std::move(patterns)}});
  }
  root["nurses"] = std::move(nurses);
  return root;
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

inline void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write instance file: " + path);
  out << instance_to_json(inst).dump(2) << '\n';
}

}  // namespace rulesched
