#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vrprb/ea.hpp"
#include "vrprb/objectives.hpp"

namespace vrprb {

struct WelchResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;
  // Both samples had zero variance; t/df carry the degenerate convention
  // (equal means -> t=0, p=1; unequal means -> p=0, declared significant).
  bool zero_variance = false;
};

// Two-sample, two-tailed, unequal-variance t-test. Sample variances use the
// n-1 denominator; degrees of freedom by Welch-Satterthwaite. Requires at
// least two observations per sample.
WelchResult welch_t_test(std::span<const double> a, std::span<const double> b);

// Two-tailed tail probability P(|T_df| >= |t|).
double student_t_two_tailed_p(double t, double df);

// I_x(a, b), evaluated by continued fraction (modified Lentz).
double regularized_incomplete_beta(double x, double a, double b);

// One benchmark cell: the per-run hypervolumes of a single
// (instance, mutation, objective) configuration.
struct HypervolumeVector {
  BalanceObjective of = BalanceObjective::AllMin;
  MutationKind mutation = MutationKind::Reverse;
  std::string instance_id;
  std::vector<double> values;
};

// Pairwise +-1/0 scoring over all 21 objective pairs: when the test is
// significant at `alpha` (strict p < alpha), the larger-mean objective gains
// +1 and the other loses 1. Scores always sum to zero. Expects exactly one
// vector per objective, all from the same instance and mutation.
std::map<BalanceObjective, int> pairwise_scores(
    const std::map<BalanceObjective, HypervolumeVector>& vectors, double alpha = 0.05);

// Cumulative scores per (instance, mutation) cell, indexed by the canonical
// objective order.
struct ScoreTable {
  std::map<std::pair<std::string, MutationKind>, std::array<int, kNumObjectives>> cells;
};

// Per mutation: how many instances each objective topped (ties credit every
// tied objective).
struct HistogramReport {
  std::map<MutationKind, std::array<int, kNumObjectives>> wins;
  std::map<MutationKind, int> instances_counted;
};

HistogramReport build_histogram(const ScoreTable& table);

}  // namespace vrprb
