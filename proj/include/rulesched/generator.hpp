#pragma once

#include <cstdint>
#include <string>

#include "rulesched/instance.hpp"
#include "rulesched/rng.hpp"

namespace rulesched {

enum class GenMode { random, planted };

inline const char* to_string(GenMode m) {
  return m == GenMode::random ? "random" : "planted";
}

struct GenConfig {
  int nurses = 1;
  int days = 7;
  int shifts_per_day = 2;
  int patterns_per_nurse = 4;
  int cost_max = 10;  // costs drawn from [0, cost_max] (planted: [1, cost_max])
  GenMode mode = GenMode::random;
  std::uint64_t seed = 0;
};

inline void validate(const GenConfig& cfg) {
  if (cfg.nurses < 1) throw ValidationError("gen.nurses: must be >= 1");
  if (cfg.days < 1) throw ValidationError("gen.days: must be >= 1");
  if (cfg.shifts_per_day < 1)
    throw ValidationError("gen.shifts_per_day: must be >= 1");
  if (cfg.patterns_per_nurse < 2)
    throw ValidationError("gen.patterns_per_nurse: must be >= 2");
  if (cfg.cost_max < 0) throw ValidationError("gen.cost_max: must be >= 0");
  if (cfg.mode == GenMode::planted && cfg.cost_max < 1)
    throw ValidationError("gen.cost_max: planted mode needs cost_max >= 1");
}

/// Synthetic instance generator, deterministic for a fixed seed.
///
/// Draw order: per nurse, all pattern cover bits (pattern-major, slot-minor);
/// then, in planted mode, the planted pattern index; then pattern costs in
/// pattern order; finally, in random mode, the demand cells day-major.
///
/// random mode: cover bits are fair coins, costs uniform in [0, cost_max],
/// demand uniform in [0, nurses / 2].
///
/// planted mode: one pattern per nurse gets cost 0 (all others cost at least
/// 1) and demand equals the slot coverage of those planted patterns, so the
/// planted schedule costs exactly 0 and every other schedule costs >= 1.
inline Instance generate_instance(const GenConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);

  Instance inst;
  inst.days = cfg.days;
  inst.shifts_per_day = cfg.shifts_per_day;
  inst.undercover_weight = 100.0;
  const int slots = inst.slot_count();

  std::vector<int> planted_index(cfg.nurses, -1);
  for (int j = 0; j < cfg.nurses; ++j) {
    Nurse nurse;
    nurse.patterns.resize(cfg.patterns_per_nurse);
    for (int p = 0; p < cfg.patterns_per_nurse; ++p) {
      nurse.patterns[p].cover.resize(slots);
      for (int k = 0; k < slots; ++k)
        nurse.patterns[p].cover[k] = rng.coin() ? 1 : 0;
    }
    if (cfg.mode == GenMode::planted)
      planted_index[j] =
          static_cast<int>(rng.uniform_index(cfg.patterns_per_nurse));
    for (int p = 0; p < cfg.patterns_per_nurse; ++p) {
      if (cfg.mode == GenMode::planted) {
        nurse.patterns[p].cost =
            (p == planted_index[j])
                ? 0.0
                : static_cast<double>(rng.uniform_int(1, cfg.cost_max));
      } else {
        nurse.patterns[p].cost =
            static_cast<double>(rng.uniform_int(0, cfg.cost_max));
      }
    }
    inst.nurses.push_back(std::move(nurse));
  }

  inst.demand.assign(cfg.days, std::vector<int>(cfg.shifts_per_day, 0));
  if (cfg.mode == GenMode::planted) {
    for (int j = 0; j < cfg.nurses; ++j) {
      const Pattern& pat = inst.nurses[j].patterns[planted_index[j]];
      for (int d = 0; d < cfg.days; ++d)
        for (int s = 0; s < cfg.shifts_per_day; ++s)
          inst.demand[d][s] += pat.cover[d * cfg.shifts_per_day + s];
    }
  } else {
    for (int d = 0; d < cfg.days; ++d)
      for (int s = 0; s < cfg.shifts_per_day; ++s)
        inst.demand[d][s] = static_cast<int>(rng.uniform_int(0, cfg.nurses / 2));
  }

  inst.validate();
  return inst;
}

/// Recovers the planted schedule of a planted-mode instance: the unique
/// zero-cost pattern of each nurse.
inline Schedule planted_schedule(const Instance& inst) {
  Schedule sched;
  for (const Nurse& nurse : inst.nurses) {
    int found = -1;
    for (std::size_t p = 0; p < nurse.patterns.size(); ++p)
      if (nurse.patterns[p].cost == 0.0) {
        if (found >= 0)
          throw ValidationError("instance is not planted: nurse has several "
                                "zero-cost patterns");
        found = static_cast<int>(p);
      }
    if (found < 0)
      throw ValidationError(
          "instance is not planted: nurse has no zero-cost pattern");
    sched.assignment.push_back(found);
  }
  return sched;
}

}  // namespace rulesched
