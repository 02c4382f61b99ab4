#pragma once

#include <filesystem>
#include <iosfwd>

#include "vrprb/metrics.hpp"
#include "vrprb/stats.hpp"

namespace vrprb {

struct ManifestEntry {
  std::string base_id;
  int n = 0;
  int fleet = 0;
  double capacity = 0.0;
};

// Experiment description: which instances to build plus the run parameters.
// Entries must satisfy fleet >= 2 and fleet * capacity >= n so unit-demand
// instances stay feasible.
struct BenchmarkManifest {
  std::vector<ManifestEntry> entries;
  uint64_t master_seed = 0;
  int runs = 30;
  int max_iter = 30000;
};

// Line-oriented text: `base_id n fleet capacity`, '#' starts a comment.
// Run parameters keep their defaults; callers set them from CLI flags.
BenchmarkManifest load_manifest(const std::filesystem::path& file);

struct GenerationReport {
  std::vector<Instance> instances;
  std::vector<std::string> warnings;  // one entry per synthetic substitution
};

// Builds one instance per manifest entry: depot plus the first n customers
// of `<bases_dir>/<base_id>.txt` (lines of `x y`, depot first) with unit
// demands. A missing base file is substituted by a seeded uniform generator
// on [0,100]^2 and flagged in the warnings; a short base file is an error.
GenerationReport generate_benchmark(const std::filesystem::path& bases_dir,
                                    const BenchmarkManifest& manifest);

struct ResultRow {
  std::string instance_id;
  MutationKind mutation = MutationKind::Reverse;
  BalanceObjective of = BalanceObjective::AllMin;
  int run_index = 0;
  uint64_t seed = 0;
  double hypervolume = 0.0;
  double wall_time = 0.0;
};

// Canonical row order: instance, mutation, objective, run index.
bool result_row_less(const ResultRow& a, const ResultRow& b);

/// Append-only tab-separated store with a header row. Partial files are
/// resumable; on completion rows are rewritten in canonical order.
class ResultsStore {
 public:
  explicit ResultsStore(std::filesystem::path file);
  ~ResultsStore();

  ResultsStore(const ResultsStore&) = delete;
  ResultsStore& operator=(const ResultsStore&) = delete;

  // Reads any existing rows; a missing file is an empty store.
  void load();

  // Appends one row and flushes it to disk.
  void append(const ResultRow& row);

  void rewrite_sorted();

  const std::vector<ResultRow>& rows() const { return rows_; }
  const std::filesystem::path& file() const { return file_; }

  bool contains(const std::string& instance_id, MutationKind mutation,
                BalanceObjective of, int run_index) const;

 private:
  std::filesystem::path file_;
  std::vector<ResultRow> rows_;
  std::map<std::tuple<std::string, MutationKind, BalanceObjective, int>, size_t> index_;
  std::unique_ptr<std::ofstream> out_;

  void open_for_append();
};

// Executes every (instance x mutation x objective x run) cell that the store
// does not already hold, each as an independent seeded EA run whose archive
// is scored by its normalized unified-space hypervolume. Cells run on `jobs`
// worker threads; rows append through a single serialized writer. Throws if
// existing rows disagree with the seeds derived from the manifest's master
// seed.
void run_experiment(const std::vector<Instance>& instances,
                    const BenchmarkManifest& manifest, ResultsStore& store, int jobs,
                    std::ostream* progress = nullptr);

// Groups store rows into per-cell hypervolume vectors and scores them.
// A cell is scored only when all seven objectives carry the same run count
// (>= 2); anything else lands in `warnings` and is omitted.
ScoreTable score_table_from_rows(const std::vector<ResultRow>& rows,
                                 std::vector<std::string>* warnings = nullptr);

struct ReportPaths {
  std::vector<std::filesystem::path> score_tables;
  std::filesystem::path histogram;
  std::filesystem::path summary;
  std::filesystem::path warnings;  // empty when no warnings were recorded
};

// Writes per-mutation score tables (row maxima marked '*'), the win-count
// histogram, and per-cell mean/sd summaries under `out_dir`.
ReportPaths emit_reports(const ResultsStore& store, const std::filesystem::path& out_dir);

}  // namespace vrprb
