#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rulesched/instance.hpp"
#include "rulesched/rng.hpp"

namespace rulesched {

using RuleId = int;

/// Fixed construction-rule catalog. One rule is applied per step; each step
/// assigns a pattern to exactly one still-unassigned nurse.
///
///   0 CostGreedy       cheapest (nurse, pattern) pair anywhere;
///                      ties: larger coverage reduction, lower nurse id,
///                      lower pattern index
///   1 CoverGreedy      pair removing the most remaining undercover;
///                      ties: lower cost, lower nurse id, lower pattern index
///   2 Ratio            minimal cost / (1 + coverage reduction);
///                      ties as CostGreedy
///   3 RandomCheapest   uniformly random unassigned nurse (exactly one rng
///                      draw), its cheapest pattern; ties: lowest index
///
/// Rules 0-2 consume no randomness at all.
inline constexpr int kRuleCount = 4;
inline constexpr RuleId kCostGreedy = 0;
inline constexpr RuleId kCoverGreedy = 1;
inline constexpr RuleId kRatio = 2;
inline constexpr RuleId kRandomCheapest = 3;

inline const char* rule_name(RuleId r) {
  switch (r) {
    case kCostGreedy: return "CostGreedy";
    case kCoverGreedy: return "CoverGreedy";
    case kRatio: return "Ratio";
    case kRandomCheapest: return "RandomCheapest";
    default: return "?";
  }
}

/// Genotype: one rule id per construction step, step count = nurse count.
using RuleString = std::vector<RuleId>;

struct PartialState {
  std::vector<std::uint8_t> assigned;  // per nurse
  std::vector<int> remaining;          // remaining undercover per slot
  int unassigned_count = 0;
  double accumulated_cost = 0.0;
};

inline PartialState initial_state(const Instance& inst) {
  PartialState st;
  st.assigned.assign(inst.nurses.size(), 0);
  st.unassigned_count = inst.nurse_count();
  st.remaining.reserve(inst.slot_count());
  for (int d = 0; d < inst.days; ++d)
    for (int s = 0; s < inst.shifts_per_day; ++s)
      st.remaining.push_back(inst.demand[d][s]);
  return st;
}

/// How much remaining undercover the pattern would absorb, summed slot-wise.
inline long long coverage_reduction(const Pattern& pat,
                                    const std::vector<int>& remaining) {
  long long total = 0;
  for (std::size_t k = 0; k < remaining.size(); ++k)
    if (pat.cover[k] && remaining[k] > 0) ++total;
  return total;
}

struct StepAssignment {
  int nurse = -1;
  int pattern = -1;
};

/// Picks the next (nurse, pattern) assignment under one rule. Total over any
/// non-empty state; consumes exactly one rng draw iff rule == RandomCheapest.
inline StepAssignment apply_rule(const Instance& inst, const PartialState& st,
                                 RuleId rule, Rng& rng) {
  if (st.unassigned_count <= 0)
    throw ValidationError("apply_rule: no unassigned nurses left");
  if (rule < 0 || rule >= kRuleCount)
    throw ValidationError("rule id out of range: " + std::to_string(rule));

  if (rule == kRandomCheapest) {
    std::vector<int> unassigned;
    unassigned.reserve(st.unassigned_count);
    for (int j = 0; j < inst.nurse_count(); ++j)
      if (!st.assigned[j]) unassigned.push_back(j);
    const int nurse =
        unassigned[rng.uniform_index(unassigned.size())];
    const auto& patterns = inst.nurses[nurse].patterns;
    int best = 0;
    for (std::size_t p = 1; p < patterns.size(); ++p)
      if (patterns[p].cost < patterns[best].cost) best = static_cast<int>(p);
    return {nurse, best};
  }

  StepAssignment pick;
  double best_cost = 0.0;
  long long best_red = 0;
  double best_ratio = 0.0;
  for (int j = 0; j < inst.nurse_count(); ++j) {
    if (st.assigned[j]) continue;
    const auto& patterns = inst.nurses[j].patterns;
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      const double cost = patterns[p].cost;
      const long long red = coverage_reduction(patterns[p], st.remaining);
      bool take = false;
      if (pick.nurse < 0) {
        take = true;
      } else if (rule == kCostGreedy) {
        take = cost < best_cost || (cost == best_cost && red > best_red);
      } else if (rule == kCoverGreedy) {
        take = red > best_red || (red == best_red && cost < best_cost);
      } else {  // kRatio
        const double ratio = cost / (1.0 + static_cast<double>(red));
        take = ratio < best_ratio || (ratio == best_ratio && red > best_red);
      }
      if (take) {
        pick = {j, static_cast<int>(p)};
        best_cost = cost;
        best_red = red;
        best_ratio = cost / (1.0 + static_cast<double>(red));
      }
    }
  }
  return pick;
}

struct DecodeResult {
  Schedule schedule;
  Fitness fitness;
};

/// Expands a rule string into a schedule, one assignment per step, then
/// evaluates it. Deterministic for a fixed rng seed; consumes one rng draw
/// per RandomCheapest step and none otherwise.
inline DecodeResult decode(const Instance& inst, const RuleString& rs,
                           Rng& rng) {
  const int n = inst.nurse_count();
  if (static_cast<int>(rs.size()) != n)
    throw ValidationError("rule string: length " + std::to_string(rs.size()) +
                          ", expected nurse count " + std::to_string(n));

  PartialState st = initial_state(inst);
  Schedule sched;
  sched.assignment.assign(n, -1);
  const int slots = inst.slot_count();
  for (int step = 0; step < n; ++step) {
    const StepAssignment a = apply_rule(inst, st, rs[step], rng);
    const Pattern& pat = inst.nurses[a.nurse].patterns[a.pattern];
    sched.assignment[a.nurse] = a.pattern;
    st.assigned[a.nurse] = 1;
    --st.unassigned_count;
    st.accumulated_cost += pat.cost;
    for (int k = 0; k < slots; ++k)
      if (pat.cover[k] && st.remaining[k] > 0) --st.remaining[k];
  }
  return {sched, evaluate(inst, sched)};
}

}  // namespace rulesched
