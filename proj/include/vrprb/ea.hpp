#pragma once

#include <cstdint>
#include <functional>

#include "vrprb/construct.hpp"
#include "vrprb/objectives.hpp"

namespace vrprb {

enum class MutationKind { Swap, Reverse };

std::string_view mutation_token(MutationKind mutation);
MutationKind parse_mutation(std::string_view token);

// Draws n in {2..4} (capped at N for tiny tours), picks n distinct positions
// and rearranges their values by a uniformly random non-identity permutation.
// The output always differs from the input in at least two positions.
GiantTour swap_mutation(const GiantTour& tour, Rng& rng);

// Reverses the inclusive segment [i..j] for a uniformly random pair i < j.
GiantTour reverse_mutation(const GiantTour& tour, Rng& rng);

struct ArchiveEntry {
  Solution solution;
  ObjectiveVector objectives;
};

/// External archive of mutually non-dominated solutions with pairwise
/// distinct objective vectors. Entries form a staircase kept sorted by
/// strictly ascending total distance (hence strictly descending balance).
/// Vector equality is exact floating-point equality.
class ParetoArchive {
 public:
  explicit ParetoArchive(BalanceObjective of) : of_(of) {}

  BalanceObjective objective() const { return of_; }

  // True iff no member strictly dominates the candidate. A candidate equal
  // to a member is accepted (it replaces the member on insert).
  bool would_accept(const ObjectiveVector& v) const;

  // Rejects a dominated candidate; otherwise removes every member the
  // candidate dominates plus any member with an identical vector, then
  // inserts. Returns whether the candidate was accepted.
  bool insert(Solution solution, const ObjectiveVector& v);

  const std::vector<ArchiveEntry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Extremes of the staircase; archive must be non-empty.
  double min_distance() const { return entries_.front().objectives.total_distance; }
  double min_balance() const { return entries_.back().objectives.balance; }

 private:
  BalanceObjective of_;
  std::vector<ArchiveEntry> entries_;
};

struct EaConfig {
  BalanceObjective of = BalanceObjective::MaxMin;
  MutationKind mutation = MutationKind::Reverse;
  int max_iter = 30000;
  uint64_t seed = 0;
};

// Stable per-run stream so results never depend on execution order.
uint64_t derive_run_seed(uint64_t master_seed, std::string_view instance_id,
                         BalanceObjective of, MutationKind mutation, int run_index);

// (1+1) EA with external archive: a single individual is mutated in giant-tour
// space each iteration; the offspring replaces it exactly when the archive
// accepts the offspring's objective vector.
ParetoArchive run_ea(const Instance& instance, const EaConfig& config);

// Same, invoking `on_iteration(iter, archive)` after every iteration
// (iter = 1..max_iter). Meant for logging and invariant checks.
ParetoArchive run_ea(const Instance& instance, const EaConfig& config,
                     const std::function<void(int, const ParetoArchive&)>& on_iteration);

}  // namespace vrprb
