#pragma once

#include <array>
#include <span>
#include <string_view>

#include "vrprb/model.hpp"

namespace vrprb {

/// The seven balance objective functions over per-route lengths. All are
/// minimized alongside the total distance.
enum class BalanceObjective {
  AllMin,  // sum of (length - min length) over routes
  MaxMin,  // max length - min length (range)
  MinMax,  // max length
  Rel,     // mean relative deviation from the max length
  Var,     // population variance of lengths
  Mad,     // mean absolute deviation from the mean length
  Gini,    // Gini coefficient of the lengths
};

inline constexpr int kNumObjectives = 7;

inline constexpr std::array<BalanceObjective, kNumObjectives> kAllObjectives = {
    BalanceObjective::AllMin, BalanceObjective::MaxMin, BalanceObjective::MinMax,
    BalanceObjective::Rel,    BalanceObjective::Var,    BalanceObjective::Mad,
    BalanceObjective::Gini,
};

// Lowercase tokens used in CLI flags and result files:
// all-min, max-min, min-max, rel, var, mad, gini.
std::string_view objective_token(BalanceObjective of);
BalanceObjective parse_objective(std::string_view token);

// Value of the selected balance formula over a non-empty vector of route
// lengths. A single length is legal: every formula degenerates to 0 except
// MinMax, which returns the length itself. Throws std::domain_error for
// Rel with an all-zero vector and Gini with a zero mean (degenerate
// geometry), std::invalid_argument for empty or negative input.
double evaluate_balance(BalanceObjective of, std::span<const double> lengths);

struct ObjectiveVector {
  double total_distance = 0.0;
  double balance = 0.0;
  BalanceObjective of = BalanceObjective::AllMin;
};

ObjectiveVector objective_vector(const Instance& instance, const Solution& solution,
                                 BalanceObjective of);

// Pareto dominance, both objectives minimized: u is no worse in both and
// strictly better in at least one. Requires matching objective ids.
bool dominates(const ObjectiveVector& u, const ObjectiveVector& v);

}  // namespace vrprb
