#include "cli_app.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "negwit/errors.hpp"
#include "negwit/experiments.hpp"
#include "negwit/version.hpp"

namespace negwit::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

struct CliOptions {
  std::string config_path;
  std::string out;
  std::uint64_t seed = 0;
  int samples = 0;
  int dim_m = 0;
  std::string amplitude_class;
  std::vector<double> eta;
  std::vector<double> p_grid;
  int k = 0;
  int bins = 0;
  double beta1 = 0.0;
  std::vector<double> beta2_grid;
  std::string base;
  bool same_unitary = false;
  bool force_equal_rows = false;
  bool sorted = false;
  bool force = false;
  bool emit_plotscript = false;
};

void add_common_options(CLI::App* cmd, CliOptions& opts) {
  cmd->add_option("--config", opts.config_path, "JSON config file; flags override its fields");
  cmd->add_option("--seed", opts.seed, "RNG seed (default 1)");
  cmd->add_option("--out", opts.out, "output CSV path");
  cmd->add_option("--samples", opts.samples, "number of samples");
  cmd->add_option("--dim-M", opts.dim_m, "Fock cutoff M; subsystem dimension d = M+1");
  cmd->add_option("--class", opts.amplitude_class,
                  "amplitude class: positive-hermitian | hermitian | normal-complex-diag | "
                  "arbitrary-complex | real-symmetric-positive");
  cmd->add_option("--eta", opts.eta, "eta scale factors");
  cmd->add_option("--p-grid", opts.p_grid, "Werner mixing probabilities in [0,1]");
  cmd->add_option("--k", opts.k, "PSD component count");
  cmd->add_option("--bins", opts.bins, "histogram bins");
  cmd->add_option("--beta1", opts.beta1, "first coherent amplitude");
  cmd->add_option("--beta2-grid", opts.beta2_grid, "grid of second coherent amplitudes");
  cmd->add_option("--base", opts.base, "eta-deviation anchor: projector | identity");
  cmd->add_flag("--same-unitary", opts.same_unitary, "draw both rows from one unitary");
  cmd->add_flag("--force-equal-rows", opts.force_equal_rows,
                "with --same-unitary, always pick the same row twice");
  cmd->add_flag("--sorted", opts.sorted, "also emit a sorted twin CSV");
  cmd->add_flag("--force", opts.force, "overwrite existing output files");
  cmd->add_flag("--emit-plotscript", opts.emit_plotscript, "emit a gnuplot script next to the CSV");
}

experiments::ExperimentConfig build_config(const CLI::App& cmd, const CliOptions& opts,
                                           const std::string& name) {
  experiments::ExperimentConfig cfg;
  if (cmd.count("--config") > 0) {
    std::ifstream stream(opts.config_path);
    if (!stream) throw io_error("cannot read config file: " + opts.config_path);
    std::ostringstream text;
    text << stream.rdbuf();
    cfg = experiments::config_from_json_text(text.str());
    if (!cfg.experiment.empty() && cfg.experiment != name) {
      throw std::invalid_argument("config experiment '" + cfg.experiment +
                                  "' does not match subcommand '" + name + "'");
    }
  }
  cfg.experiment = name;
  if (cmd.count("--seed") > 0) cfg.seed = opts.seed;
  if (cmd.count("--out") > 0) cfg.out = opts.out;
  if (cmd.count("--samples") > 0) cfg.samples = opts.samples;
  if (cmd.count("--dim-M") > 0) cfg.m_cutoff = opts.dim_m;
  if (cmd.count("--class") > 0) {
    cfg.amplitude_class = amplitude_class_from_string(opts.amplitude_class);
  }
  if (cmd.count("--eta") > 0) cfg.eta_list = opts.eta;
  if (cmd.count("--p-grid") > 0) cfg.p_grid = opts.p_grid;
  if (cmd.count("--k") > 0) cfg.k = opts.k;
  if (cmd.count("--bins") > 0) cfg.bins = opts.bins;
  if (cmd.count("--beta1") > 0) cfg.beta1 = opts.beta1;
  if (cmd.count("--beta2-grid") > 0) cfg.beta2_grid = opts.beta2_grid;
  if (cmd.count("--base") > 0) cfg.base = opts.base;
  if (cmd.count("--same-unitary") > 0) cfg.same_unitary = opts.same_unitary;
  if (cmd.count("--force-equal-rows") > 0) cfg.force_equal_rows = opts.force_equal_rows;
  if (cmd.count("--sorted") > 0) cfg.sorted = opts.sorted;
  if (cmd.count("--force") > 0) cfg.force = opts.force;
  if (cmd.count("--emit-plotscript") > 0) cfg.emit_plotscript = opts.emit_plotscript;
  return cfg;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("negwit");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Bipartite Log Negativity witness experiments (deterministic CSV output)"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  static const std::vector<std::pair<std::string, std::string>> kCommands = {
      {"pure-sweep", "witness report sweep over random pure states of one amplitude class"},
      {"coherent", "symmetric superposition of two coherent states over a beta2 grid"},
      {"random-rows", "symmetric superpositions built from random unitary rows"},
      {"eta-deviation", "amplitudes deviated from a separable or Bell anchor by eta"},
      {"two-qubit", "closed-form vs numeric partial-transpose spectrum at d = 2"},
      {"werner", "Werner-state closed forms vs numeric witnesses over a p grid"},
      {"psd", "pure-state-decomposition ensembles: ordering of the three measures"},
      {"purity-hist", "purity histograms of eta-deviated random density matrices"},
      {"mixed-random", "plain mixed witness on Haar-random density matrices"},
  };

  std::vector<CliOptions> options(kCommands.size());
  std::vector<CLI::App*> subcommands;
  for (std::size_t i = 0; i < kCommands.size(); ++i) {
    CLI::App* cmd = app.add_subcommand(kCommands[i].first, kCommands[i].second);
    add_common_options(cmd, options[i]);
    subcommands.push_back(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    for (std::size_t i = 0; i < subcommands.size(); ++i) {
      if (subcommands[i]->parsed()) {
        experiments::ExperimentConfig cfg =
            build_config(*subcommands[i], options[i], kCommands[i].first);
        return experiments::run_experiment(std::move(cfg));
      }
    }
    std::cerr << "negwit: no subcommand selected\n";
    return kExitConfig;
  } catch (const io_error& e) {
    std::cerr << "negwit: I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "negwit: I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const numeric_error& e) {
    std::cerr << "negwit: numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::logic_error& e) {
    std::cerr << "negwit: config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "negwit: error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace negwit::cli
