#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rulesched/instance.hpp"

namespace rulesched {

struct OptimumResult {
  Schedule schedule;
  Fitness fitness;
  std::uint64_t combinations = 0;
};

/// Brute-force optimum over every full assignment, for desk-scale instances.
/// Assignments are visited in lexicographic order and only strict improvements
/// are kept, so ties resolve to the lexicographically smallest vector.
/// Throws BudgetError when the combination count exceeds combo_budget.
inline OptimumResult enumerate_optimum(const Instance& inst,
                                       std::uint64_t combo_budget = 1000000) {
  inst.validate();
  const int n = inst.nurse_count();

  unsigned __int128 combos = 1;
  bool overflow = false;
  for (const Nurse& nurse : inst.nurses) {
    combos *= nurse.patterns.size();
    if (combos > static_cast<unsigned __int128>(UINT64_MAX)) {
      overflow = true;
      break;
    }
  }
  if (overflow || static_cast<std::uint64_t>(combos) > combo_budget) {
    const std::string count =
        overflow ? "more than 2^64"
                 : std::to_string(static_cast<std::uint64_t>(combos));
    throw BudgetError("enumerate_optimum: " + count +
                      " combinations exceed budget " +
                      std::to_string(combo_budget));
  }

  OptimumResult result;
  result.combinations = static_cast<std::uint64_t>(combos);

  Schedule current;
  current.assignment.assign(n, 0);
  bool have_best = false;
  while (true) {
    const Fitness f = evaluate(inst, current);
    if (!have_best || f.total < result.fitness.total) {
      result.schedule = current;
      result.fitness = f;
      have_best = true;
    }
    // odometer, last nurse fastest
    int j = n - 1;
    while (j >= 0) {
      if (++current.assignment[j] <
          static_cast<int>(inst.nurses[j].patterns.size()))
        break;
      current.assignment[j] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return result;
}

}  // namespace rulesched
