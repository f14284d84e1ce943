#ifndef NEGWIT_EXPERIMENTS_HPP
#define NEGWIT_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "negwit/random.hpp"

namespace negwit::experiments {

/// Effective parameters of one experiment run. Fields left at their sentinel
/// (-1 / empty) are filled by apply_defaults with the per-command defaults,
/// which mirror the dimensions and sample counts of the source figures.
struct ExperimentConfig {
  std::string experiment;
  int m_cutoff = -1;  // M; subsystem dimension d = M + 1
  int samples = -1;
  std::uint64_t seed = 1;
  std::optional<AmplitudeClass> amplitude_class;
  std::vector<double> eta_list;
  std::vector<double> p_grid;
  int k = -1;     // PSD component count
  int bins = -1;  // histogram bins
  double beta1 = 0.5;
  std::vector<double> beta2_grid;
  std::string base = "projector";  // eta-deviation anchor: projector | identity
  bool same_unitary = false;
  bool force_equal_rows = false;
  std::string out;
  bool force = false;
  bool sorted = false;
  bool emit_plotscript = false;
};

std::vector<std::string> command_names();

/// Parses the JSON config file format. Unknown keys are rejected.
ExperimentConfig config_from_json_text(const std::string& text);

/// Fills per-command defaults and validates ranges; throws
/// std::invalid_argument on an unknown command or out-of-range values.
void apply_defaults(ExperimentConfig& cfg);

/// Canonical single-line JSON of the effective config (sorted keys).
std::string canonical_json(const ExperimentConfig& cfg);

/// FNV-1a hash of the canonical JSON; recorded in every CSV header.
std::uint64_t config_hash(const ExperimentConfig& cfg);

/// One CSV document: '#' comment lines, a header row, numeric rows.
/// Cells are rendered with 17 significant digits, '.' decimal, '\n' endings.
struct Table {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::string to_csv() const;
  Table sorted_by(std::size_t column, bool descending) const;
};

struct CommandResult {
  Table main;
  std::optional<Table> sorted;  // twin document, written as <out>.sorted.csv
};

CommandResult run_pure_sweep(const ExperimentConfig& cfg);
CommandResult run_coherent(const ExperimentConfig& cfg);
CommandResult run_random_rows(const ExperimentConfig& cfg);
CommandResult run_eta_deviation(const ExperimentConfig& cfg);
CommandResult run_two_qubit(const ExperimentConfig& cfg);
CommandResult run_werner(const ExperimentConfig& cfg);
CommandResult run_psd(const ExperimentConfig& cfg);
CommandResult run_purity_hist(const ExperimentConfig& cfg);
CommandResult run_mixed_random(const ExperimentConfig& cfg);

/// Dispatches to the command runner; cfg must have defaults applied.
CommandResult run_command(const ExperimentConfig& cfg);

/// Writes the main CSV, the sorted twin, and (optionally) a gnuplot script.
/// Existing output paths raise io_error unless cfg.force is set.
void write_outputs(const ExperimentConfig& cfg, const CommandResult& result);

/// apply_defaults + run_command + write_outputs; returns 0 on success.
int run_experiment(ExperimentConfig cfg);

}  // namespace negwit::experiments

#endif
