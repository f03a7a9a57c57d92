#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rulesched/errors.hpp"

namespace rulesched {

/// One selectable shift pattern: which (day, shift) slots it covers and the
/// preference cost of assigning it.
struct Pattern {
  std::vector<std::uint8_t> cover;  // slot index = day * shifts_per_day + shift
  double cost = 0.0;
};

struct Nurse {
  std::vector<Pattern> patterns;  // non-empty; nurse id is its list position
};

/// A scheduling instance: per-slot integer coverage demand plus a pattern menu
/// per nurse. Unmet demand is charged undercover_weight per missing unit;
/// over-coverage is free.
struct Instance {
  int days = 7;
  int shifts_per_day = 2;
  std::vector<Nurse> nurses;
  std::vector<std::vector<int>> demand;  // [day][shift]
  double undercover_weight = 100.0;

  int slot_count() const { return days * shifts_per_day; }
  int nurse_count() const { return static_cast<int>(nurses.size()); }

  void validate() const;  // throws ValidationError naming the first bad field
};

/// One pattern index per nurse.
struct Schedule {
  std::vector<int> assignment;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct Fitness {
  double total = 0.0;
  double preference_cost = 0.0;
  long long undercover_units = 0;

  friend bool operator==(const Fitness&, const Fitness&) = default;
};

inline void Instance::validate() const {
  if (days < 1) throw ValidationError("days: must be >= 1");
  if (shifts_per_day < 1) throw ValidationError("shifts_per_day: must be >= 1");
  if (undercover_weight < 0.0)
    throw ValidationError("undercover_weight: must be non-negative");
  if (nurses.empty()) throw ValidationError("nurses: must be non-empty");
  if (static_cast<int>(demand.size()) != days)
    throw ValidationError("demand: expected " + std::to_string(days) +
                          " rows, got " + std::to_string(demand.size()));
  for (int d = 0; d < days; ++d) {
    if (static_cast<int>(demand[d].size()) != shifts_per_day)
      throw ValidationError("demand[" + std::to_string(d) + "]: expected " +
                            std::to_string(shifts_per_day) + " entries, got " +
                            std::to_string(demand[d].size()));
    for (int s = 0; s < shifts_per_day; ++s)
      if (demand[d][s] < 0)
        throw ValidationError("demand[" + std::to_string(d) + "][" +
                              std::to_string(s) + "]: must be non-negative");
  }
  const int slots = slot_count();
  for (std::size_t j = 0; j < nurses.size(); ++j) {
    const std::string base = "nurses[" + std::to_string(j) + "]";
    if (nurses[j].patterns.empty())
      throw ValidationError(base + ".patterns: must be non-empty");
    for (std::size_t p = 0; p < nurses[j].patterns.size(); ++p) {
      const Pattern& pat = nurses[j].patterns[p];
      const std::string path = base + ".patterns[" + std::to_string(p) + "]";
      if (static_cast<int>(pat.cover.size()) != slots)
        throw ValidationError(path + ".cover: length " +
                              std::to_string(pat.cover.size()) +
                              ", expected days * shifts_per_day = " +
                              std::to_string(slots));
      for (std::size_t k = 0; k < pat.cover.size(); ++k)
        if (pat.cover[k] > 1)
          throw ValidationError(path + ".cover[" + std::to_string(k) +
                                "]: entries must be 0 or 1");
      if (pat.cost < 0.0)
        throw ValidationError(path + ".cost: must be non-negative");
    }
  }
}

/// Full-schedule fitness: summed pattern costs plus undercover_weight per
/// missing unit of demand, slot by slot.
inline Fitness evaluate(const Instance& inst, const Schedule& sched) {
  const int n = inst.nurse_count();
  if (static_cast<int>(sched.assignment.size()) != n)
    throw ValidationError("schedule: expected " + std::to_string(n) +
                          " assignments, got " +
                          std::to_string(sched.assignment.size()));
  const int slots = inst.slot_count();
  std::vector<int> covered(slots, 0);
  Fitness f;
  for (int j = 0; j < n; ++j) {
    const int p = sched.assignment[j];
    const auto& patterns = inst.nurses[j].patterns;
    if (p < 0 || p >= static_cast<int>(patterns.size()))
      throw ValidationError("schedule[" + std::to_string(j) +
                            "]: invalid pattern index " + std::to_string(p));
    f.preference_cost += patterns[p].cost;
    for (int k = 0; k < slots; ++k) covered[k] += patterns[p].cover[k];
  }
  for (int d = 0; d < inst.days; ++d)
    for (int s = 0; s < inst.shifts_per_day; ++s) {
      const int gap = inst.demand[d][s] - covered[d * inst.shifts_per_day + s];
      if (gap > 0) f.undercover_units += gap;
    }
  f.total = f.preference_cost +
            inst.undercover_weight * static_cast<double>(f.undercover_units);
  return f;
}

}  // namespace rulesched
