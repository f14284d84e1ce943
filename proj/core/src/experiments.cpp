#include "negwit/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "negwit/errors.hpp"
#include "negwit/mixed.hpp"
#include "negwit/parallel.hpp"
#include "negwit/pure.hpp"
#include "negwit/version.hpp"

namespace negwit::experiments {

namespace {

// Reserved split index for per-run anchor draws (e.g. the |phi_0> vector of
// the eta-deviation sweep); sample streams use small indices.
constexpr std::uint64_t kAnchorStream = UINT64_MAX;

std::string format_cell(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    out[static_cast<std::size_t>(i)] = (lo * (points - 1 - i) + hi * i) / (points - 1);
  }
  return out;
}

int dim_of(const ExperimentConfig& cfg) { return cfg.m_cutoff + 1; }

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::vector<std::string> standard_comments(const ExperimentConfig& cfg) {
  std::ostringstream id;
  id << "negwit " << kVersion << "; " << kRngVersion;
  std::ostringstream run;
  char hash[32];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(config_hash(cfg)));
  run << "experiment=" << cfg.experiment << " seed=" << cfg.seed << " config_hash=" << hash;
  return {id.str(), run.str(), "config=" + canonical_json(cfg)};
}

}  // namespace

std::vector<std::string> command_names() {
  return {"pure-sweep", "coherent",    "random-rows", "eta-deviation", "two-qubit",
          "werner",     "psd",         "purity-hist", "mixed-random"};
}

ExperimentConfig config_from_json_text(const std::string& text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }
  require(parsed.is_object(), "config: top level must be a JSON object");

  ExperimentConfig cfg;
  for (const auto& [key, value] : parsed.items()) {
    try {
      if (key == "experiment") cfg.experiment = value.get<std::string>();
      else if (key == "M") cfg.m_cutoff = value.get<int>();
      else if (key == "d") cfg.m_cutoff = value.get<int>() - 1;
      else if (key == "samples") cfg.samples = value.get<int>();
      else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
      else if (key == "class") cfg.amplitude_class = amplitude_class_from_string(value.get<std::string>());
      else if (key == "eta") {
        if (value.is_array()) cfg.eta_list = value.get<std::vector<double>>();
        else cfg.eta_list = {value.get<double>()};
      }
      else if (key == "p_grid") cfg.p_grid = value.get<std::vector<double>>();
      else if (key == "k") cfg.k = value.get<int>();
      else if (key == "bins") cfg.bins = value.get<int>();
      else if (key == "beta1") cfg.beta1 = value.get<double>();
      else if (key == "beta2_grid") cfg.beta2_grid = value.get<std::vector<double>>();
      else if (key == "base") cfg.base = value.get<std::string>();
      else if (key == "same_unitary") cfg.same_unitary = value.get<bool>();
      else if (key == "force_equal_rows") cfg.force_equal_rows = value.get<bool>();
      else if (key == "out") cfg.out = value.get<std::string>();
      else if (key == "force") cfg.force = value.get<bool>();
      else if (key == "sorted") cfg.sorted = value.get<bool>();
      else if (key == "emit_plotscript") cfg.emit_plotscript = value.get<bool>();
      else throw std::invalid_argument("config: unknown key '" + key + "'");
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("config: bad value for '" + key + "': " + e.what());
    }
  }
  return cfg;
}

void apply_defaults(ExperimentConfig& cfg) {
  const auto names = command_names();
  require(std::find(names.begin(), names.end(), cfg.experiment) != names.end(),
          "unknown experiment '" + cfg.experiment + "'");

  // Figure-caption M defaults per command.
  if (cfg.m_cutoff < 0) {
    if (cfg.experiment == "pure-sweep") cfg.m_cutoff = 40;
    else if (cfg.experiment == "coherent" || cfg.experiment == "random-rows" ||
             cfg.experiment == "eta-deviation") cfg.m_cutoff = 20;
    else if (cfg.experiment == "psd" || cfg.experiment == "purity-hist") cfg.m_cutoff = 10;
    else cfg.m_cutoff = 1;  // two-qubit, werner, mixed-random
  }
  if (cfg.samples < 0) cfg.samples = 100;
  if (cfg.k < 0) cfg.k = 5;
  if (cfg.bins < 0) cfg.bins = 20;
  if (!cfg.amplitude_class) {
    cfg.amplitude_class = cfg.experiment == "two-qubit" ? AmplitudeClass::ArbitraryComplex
                                                        : AmplitudeClass::PositiveHermitian;
  }
  if (cfg.p_grid.empty()) cfg.p_grid = linspace(0.0, 1.0, 21);
  if (cfg.eta_list.empty()) {
    if (cfg.experiment == "purity-hist") {
      cfg.eta_list = {0.0, 0.01, 0.1, 0.25, 0.5, 0.75, 1.0, 5.0, 100.0, 1000.0};
    } else {
      cfg.eta_list = {0.0, 1e-5, 0.1, 1.0, 10.0, 100.0};
    }
  }
  if (cfg.beta2_grid.empty()) cfg.beta2_grid = linspace(-1.0, 1.0, 41);
  if (cfg.out.empty()) cfg.out = "negwit_" + cfg.experiment + ".csv";

  require(cfg.m_cutoff >= 0, "M must be >= 0");
  require(cfg.samples >= 1, "samples must be >= 1");
  require(cfg.k >= 1, "k must be >= 1");
  require(cfg.bins >= 1, "bins must be >= 1");
  for (double p : cfg.p_grid) require(p >= 0.0 && p <= 1.0, "p_grid values must lie in [0, 1]");
  for (double eta : cfg.eta_list) require(eta >= 0.0, "eta values must be >= 0");
  require(cfg.base == "projector" || cfg.base == "identity",
          "base must be 'projector' or 'identity'");
  if (cfg.experiment == "two-qubit") {
    require(cfg.m_cutoff == 1, "two-qubit requires M = 1");
  }
  if (cfg.experiment == "werner" || cfg.experiment == "mixed-random") {
    require(cfg.m_cutoff >= 1, cfg.experiment + " requires M >= 1 (d >= 2)");
  }
}

std::string canonical_json(const ExperimentConfig& cfg) {
  nlohmann::json j;  // nlohmann objects are key-sorted, so dump() is canonical
  j["experiment"] = cfg.experiment;
  j["M"] = cfg.m_cutoff;
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["class"] = cfg.amplitude_class ? std::string(to_string(*cfg.amplitude_class)) : "";
  j["eta"] = cfg.eta_list;
  j["p_grid"] = cfg.p_grid;
  j["k"] = cfg.k;
  j["bins"] = cfg.bins;
  j["beta1"] = cfg.beta1;
  j["beta2_grid"] = cfg.beta2_grid;
  j["base"] = cfg.base;
  j["same_unitary"] = cfg.same_unitary;
  j["force_equal_rows"] = cfg.force_equal_rows;
  return j.dump();
}

std::uint64_t config_hash(const ExperimentConfig& cfg) {
  const std::string text = canonical_json(cfg);
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string Table::to_csv() const {
  std::string out;
  for (const std::string& c : comments) {
    out += "# ";
    out += c;
    out += '\n';
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

Table Table::sorted_by(std::size_t column, bool descending) const {
  Table out = *this;
  std::stable_sort(out.rows.begin(), out.rows.end(),
                   [column, descending](const auto& a, const auto& b) {
                     return descending ? a[column] > b[column] : a[column] < b[column];
                   });
  return out;
}

CommandResult run_pure_sweep(const ExperimentConfig& cfg) {
  const int d = dim_of(cfg);
  const RngStream root(cfg.seed);
  const AmplitudeClass cls = *cfg.amplitude_class;

  const auto reports = parallel_map<WitnessReport>(
      static_cast<std::size_t>(cfg.samples), [&](std::size_t i) {
        RngStream stream = root.split(i);
        return witness_report(make_pure(sample_amplitudes(cls, d, stream)));
      });

  Table table;
  table.comments = standard_comments(cfg);
  table.columns = {"sample_index", "purity",         "ln_exact",
                   "ln_approx",    "ln_variation",   "linear_entropy",
                   "diff_exact_minus_approx"};
  long le_below = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const WitnessReport& r = reports[i];
    if (r.linear_entropy <= r.ln_exact) ++le_below;
    table.rows.push_back({double(i), r.purity_of_c, r.ln_exact, r.ln_approx, r.ln_variation,
                          r.linear_entropy, r.ln_exact - r.ln_approx});
  }
  table.comments.push_back("fraction_le_leq_ln_exact=" +
                           format_cell(double(le_below) / double(reports.size())));

  CommandResult result{std::move(table), std::nullopt};
  result.sorted = result.main.sorted_by(2, /*descending=*/true);  // by ln_exact
  return result;
}

CommandResult run_coherent(const ExperimentConfig& cfg) {
  const int m = cfg.m_cutoff;
  const std::vector<Complex> psi = coherent_coeffs(cfg.beta1, m);
  const Eigen::Map<const ComplexVector> psi_vec(psi.data(), Eigen::Index(psi.size()));

  struct Row {
    double beta2, ln_e, ln_a;
  };
  const auto rows = parallel_map<Row>(cfg.beta2_grid.size(), [&](std::size_t i) {
    const double beta2 = cfg.beta2_grid[i];
    const std::vector<Complex> phi = coherent_coeffs(beta2, m);
    const Eigen::Map<const ComplexVector> phi_vec(phi.data(), Eigen::Index(phi.size()));
    const PureState state = symmetric_product_superposition(psi_vec, phi_vec);
    return Row{beta2, ln_exact(state).ln, ln_approx(state).ln};
  });

  Table table;
  table.comments = standard_comments(cfg);
  table.comments.push_back("beta1=" + format_cell(cfg.beta1));
  table.columns = {"beta2", "ln_exact", "ln_approx"};
  for (const Row& r : rows) table.rows.push_back({r.beta2, r.ln_e, r.ln_a});
  return CommandResult{std::move(table), std::nullopt};
}

CommandResult run_random_rows(const ExperimentConfig& cfg) {
  const int d = dim_of(cfg);
  require(d >= 2, "random-rows requires M >= 1");
  const RngStream root(cfg.seed);

  struct Row {
    double i1, i2, ln_e, ln_a;
  };
  const auto rows = parallel_map<Row>(static_cast<std::size_t>(cfg.samples), [&](std::size_t s) {
    RngStream stream = root.split(s);
    ComplexVector psi, phi;
    std::uint64_t i1 = 0, i2 = 0;
    if (cfg.same_unitary) {
      const ComplexMatrix u = haar_unitary(d, stream);
      i1 = stream.uniform_index(std::uint64_t(d));
      i2 = cfg.force_equal_rows ? i1 : stream.uniform_index(std::uint64_t(d));
      psi = u.row(Eigen::Index(i1)).transpose();
      phi = u.row(Eigen::Index(i2)).transpose();
    } else {
      const ComplexMatrix u1 = haar_unitary(d, stream);
      i1 = stream.uniform_index(std::uint64_t(d));
      const ComplexMatrix u2 = haar_unitary(d, stream);
      i2 = stream.uniform_index(std::uint64_t(d));
      psi = u1.row(Eigen::Index(i1)).transpose();
      phi = u2.row(Eigen::Index(i2)).transpose();
    }
    const PureState state = symmetric_product_superposition(psi, phi);
    return Row{double(i1), double(i2), ln_exact(state).ln, ln_approx(state).ln};
  });

  Table table;
  table.comments = standard_comments(cfg);
  table.columns = {"sample_index", "row_i", "row_j", "ln_exact", "ln_approx",
                   "diff_exact_minus_approx"};
  for (std::size_t s = 0; s < rows.size(); ++s) {
    const Row& r = rows[s];
    table.rows.push_back({double(s), r.i1, r.i2, r.ln_e, r.ln_a, r.ln_e - r.ln_a});
  }
  CommandResult result{std::move(table), std::nullopt};
  if (cfg.sorted) result.sorted = result.main.sorted_by(3, true);
  return result;
}

CommandResult run_eta_deviation(const ExperimentConfig& cfg) {
  const int d = dim_of(cfg);
  require(d >= 1, "eta-deviation requires M >= 0");
  const RngStream root(cfg.seed);

  ComplexMatrix base;
  if (cfg.base == "projector") {
    RngStream anchor = root.split(kAnchorStream);
    ComplexVector phi0(d);
    for (int n = 0; n < d; ++n) {
      phi0(n) = Complex(anchor.normal(), anchor.normal());
    }
    phi0 /= phi0.norm();
    base = phi0 * phi0.adjoint();
  } else {
    base = ComplexMatrix::Identity(d, d) / double(d);
  }

  struct Row {
    double eta, sample, ln_e, ln_a;
  };
  std::vector<Row> rows;
  for (std::size_t e = 0; e < cfg.eta_list.size(); ++e) {
    const double eta = cfg.eta_list[e];
    const RngStream eta_root = root.split(e);
    const auto chunk = parallel_map<Row>(static_cast<std::size_t>(cfg.samples), [&](std::size_t s) {
      RngStream stream = eta_root.split(s);
      const PureState state = make_pure(purity_targeted_amplitudes(base, eta, stream));
      return Row{eta, double(s), ln_exact(state).ln, ln_approx(state).ln};
    });
    rows.insert(rows.end(), chunk.begin(), chunk.end());
  }

  Table table;
  table.comments = standard_comments(cfg);
  table.comments.push_back("base=" + cfg.base);
  if (cfg.base == "identity") {
    table.comments.push_back(
        "note: at eta=0 the identity base gives the Bell amplitudes, ln = log2(d) = " +
        format_cell(std::log2(double(d))) +
        "; the constant 1 quoted alongside this family holds only at d = 2");
  }
  table.columns = {"eta", "sample_index", "ln_exact", "ln_approx", "diff_exact_minus_approx"};
  for (const Row& r : rows) {
    table.rows.push_back({r.eta, r.sample, r.ln_e, r.ln_a, r.ln_e - r.ln_a});
  }
  CommandResult result{std::move(table), std::nullopt};
  if (cfg.sorted) result.sorted = result.main.sorted_by(2, true);
  return result;
}

CommandResult run_two_qubit(const ExperimentConfig& cfg) {
  const RngStream root(cfg.seed);
  const AmplitudeClass cls = *cfg.amplitude_class;

  struct Row {
    double ln_e, ln_a, ln_closed;
  };
  const auto rows = parallel_map<Row>(static_cast<std::size_t>(cfg.samples), [&](std::size_t s) {
    RngStream stream = root.split(s);
    const PureState state = make_pure(sample_amplitudes(cls, 2, stream));
    const TwoQubitPtSpectrum spec = two_qubit_pt_spectrum(state);
    return Row{ln_exact(state).ln, ln_approx(state).ln,
               std::log2(1.0 + 2.0 * spec.lambda1)};
  });

  Table table;
  table.comments = standard_comments(cfg);
  table.columns = {"sample_index", "ln_exact", "ln_approx", "ln_closed_form"};
  for (std::size_t s = 0; s < rows.size(); ++s) {
    table.rows.push_back({double(s), rows[s].ln_e, rows[s].ln_a, rows[s].ln_closed});
  }
  CommandResult result{std::move(table), std::nullopt};
  if (cfg.sorted) result.sorted = result.main.sorted_by(1, true);
  return result;
}

CommandResult run_werner(const ExperimentConfig& cfg) {
  const int d = dim_of(cfg);

  // Numeric two-component averages share the per-d component values.
  const LnPair bell_exact = ln_exact_mixed(bell_projector(d));
  const LnPair bell_approx = ln_approx_mixed(bell_projector(d));
  const LnPair mm_exact = ln_exact_mixed(maximally_mixed(d * d, d));
  const LnPair mm_approx = ln_approx_mixed(maximally_mixed(d * d, d));

  struct Row {
    double p, ln_e_analytic, ln_e_numeric, ln_a_analytic, ln_a_numeric, ln_a_sym, avg_e, avg_a,
        purity_analytic, purity_numeric, separable;
  };
  const auto rows = parallel_map<Row>(cfg.p_grid.size(), [&](std::size_t i) {
    const double p = cfg.p_grid[i];
    const WernerAnalytics analytics = werner_analytics(d, p);
    const DensityMatrix w = werner_state(d, p);
    return Row{p,
               analytics.ln_exact,
               ln_exact_mixed(w).ln,
               analytics.ln_approx,
               ln_approx_mixed(w).ln,
               ln_approx_mixed_sym(w).ln,
               p * bell_exact.ln + (1.0 - p) * mm_exact.ln,
               p * bell_approx.ln + (1.0 - p) * mm_approx.ln,
               analytics.purity,
               purity(w),
               p <= analytics.p_star ? 1.0 : 0.0};
  });

  Table table;
  table.comments = standard_comments(cfg);
  table.comments.push_back("d=" + std::to_string(d) +
                           " p_star=" + format_cell(1.0 / (d + 1.0)) +
                           " mu_star=" + format_cell(2.0 / (double(d) * (d + 1.0))));
  table.columns = {"p",           "ln_exact_analytic", "ln_exact_numeric", "ln_approx_analytic",
                   "ln_approx_numeric", "ln_approx_sym_numeric", "avg_ln_exact", "avg_ln_approx",
                   "purity_analytic", "purity_numeric", "separable"};
  for (const Row& r : rows) {
    table.rows.push_back({r.p, r.ln_e_analytic, r.ln_e_numeric, r.ln_a_analytic, r.ln_a_numeric,
                          r.ln_a_sym, r.avg_e, r.avg_a, r.purity_analytic, r.purity_numeric,
                          r.separable});
  }
  return CommandResult{std::move(table), std::nullopt};
}

CommandResult run_psd(const ExperimentConfig& cfg) {
  const int d = dim_of(cfg);
  const RngStream root(cfg.seed);
  const AmplitudeClass cls = *cfg.amplitude_class;

  struct Row {
    double purity_value, ln_e, ln_a, avg_a;
  };
  const auto rows = parallel_map<Row>(static_cast<std::size_t>(cfg.samples), [&](std::size_t s) {
    RngStream stream = root.split(s);
    const PsdEnsemble ensemble = psd_sample(d, cfg.k, cls, stream);
    const DensityMatrix rho = psd_to_density(ensemble);
    return Row{purity(rho), ln_exact_mixed(rho).ln, ln_approx_mixed(rho).ln,
               avg_ln(ensemble, AvgMeasure::ApproxPure)};
  });

  Table table;
  table.comments = standard_comments(cfg);
  table.columns = {"sample_index", "purity", "ln_exact_mixed", "ln_approx_mixed",
                   "avg_ln_approx"};
  for (std::size_t s = 0; s < rows.size(); ++s) {
    const Row& r = rows[s];
    table.rows.push_back({double(s), r.purity_value, r.ln_e, r.ln_a, r.avg_a});
  }
  CommandResult result{std::move(table), std::nullopt};
  result.sorted = result.main.sorted_by(1, /*descending=*/false);  // by purity
  return result;
}

CommandResult run_purity_hist(const ExperimentConfig& cfg) {
  const int d = dim_of(cfg);
  const RngStream root(cfg.seed);
  const DensityMatrix base = bell_projector(d);

  Table table;
  table.comments = standard_comments(cfg);
  table.columns = {"eta", "bin_index", "bin_center", "count", "mean_purity"};
  for (std::size_t e = 0; e < cfg.eta_list.size(); ++e) {
    const double eta = cfg.eta_list[e];
    const RngStream eta_root = root.split(e);
    const auto purities = parallel_map<double>(
        static_cast<std::size_t>(cfg.samples), [&](std::size_t s) {
          RngStream stream = eta_root.split(s);
          return purity(purity_targeted_density(base, eta, stream));
        });
    const double mean =
        std::accumulate(purities.begin(), purities.end(), 0.0) / double(purities.size());
    const auto bins = histogram(purities, cfg.bins, 0.0, 1.0);
    for (std::size_t b = 0; b < bins.size(); ++b) {
      table.rows.push_back({eta, double(b), bins[b].center, double(bins[b].count), mean});
    }
  }
  return CommandResult{std::move(table), std::nullopt};
}

CommandResult run_mixed_random(const ExperimentConfig& cfg) {
  const int d = dim_of(cfg);
  const RngStream root(cfg.seed);

  struct Row {
    double ln_e, ln_a;
  };
  const auto rows = parallel_map<Row>(static_cast<std::size_t>(cfg.samples), [&](std::size_t s) {
    DensityMatrix rho = [&] {
      // Sample 0 is the maximally mixed baseline, for which both measures
      // must vanish; the rest are Haar-uniform draws.
      if (s == 0) return maximally_mixed(d * d, d);
      RngStream stream = root.split(s);
      DensityMatrix out = random_density_matrix(d * d, stream);
      out.split = d;
      return out;
    }();
    return Row{ln_exact_mixed(rho).ln, ln_approx_mixed(rho).ln};
  });

  Table table;
  table.comments = standard_comments(cfg);
  table.comments.push_back("sample 0 is the maximally mixed state I/d^2");
  table.columns = {"sample_index", "ln_exact_mixed", "ln_approx_mixed",
                   "diff_exact_minus_approx"};
  for (std::size_t s = 0; s < rows.size(); ++s) {
    table.rows.push_back({double(s), rows[s].ln_e, rows[s].ln_a, rows[s].ln_e - rows[s].ln_a});
  }
  CommandResult result{std::move(table), std::nullopt};
  if (cfg.sorted) result.sorted = result.main.sorted_by(1, true);
  return result;
}

CommandResult run_command(const ExperimentConfig& cfg) {
  if (cfg.experiment == "pure-sweep") return run_pure_sweep(cfg);
  if (cfg.experiment == "coherent") return run_coherent(cfg);
  if (cfg.experiment == "random-rows") return run_random_rows(cfg);
  if (cfg.experiment == "eta-deviation") return run_eta_deviation(cfg);
  if (cfg.experiment == "two-qubit") return run_two_qubit(cfg);
  if (cfg.experiment == "werner") return run_werner(cfg);
  if (cfg.experiment == "psd") return run_psd(cfg);
  if (cfg.experiment == "purity-hist") return run_purity_hist(cfg);
  if (cfg.experiment == "mixed-random") return run_mixed_random(cfg);
  throw std::invalid_argument("unknown experiment '" + cfg.experiment + "'");
}

namespace {

std::filesystem::path sibling_path(const std::filesystem::path& out, const std::string& tag) {
  std::filesystem::path p = out;
  const std::string ext = p.extension().string();
  p.replace_extension();
  p += tag;
  p += ext.empty() ? ".csv" : ext;
  return p;
}

void write_file(const std::filesystem::path& path, const std::string& content, bool force) {
  if (std::filesystem::exists(path) && !force) {
    throw io_error("output path exists (use --force to overwrite): " + path.string());
  }
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream stream(path, std::ios::binary);
  if (!stream) throw io_error("cannot open output path: " + path.string());
  stream << content;
  if (!stream) throw io_error("failed writing output: " + path.string());
}

std::string plot_script(const ExperimentConfig& cfg, const Table& table) {
  // Generic gnuplot script: x = first column, one curve per measure column.
  std::size_t x_col = 1;
  std::vector<std::size_t> y_cols;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    const std::string& name = table.columns[i];
    if (name.rfind("ln_", 0) == 0 || name == "linear_entropy" || name == "count") {
      y_cols.push_back(i + 1);
    }
  }
  std::ostringstream script;
  script << "# gnuplot script generated by negwit " << kVersion << "\n";
  script << "set datafile separator ','\n";
  script << "set key autotitle columnhead\n";
  script << "set xlabel '" << table.columns[x_col - 1] << "'\n";
  script << "plot ";
  for (std::size_t i = 0; i < y_cols.size(); ++i) {
    if (i) script << ", ";
    script << "'" << cfg.out << "' using " << x_col << ":" << y_cols[i] << " with linespoints";
  }
  script << "\n";
  return script.str();
}

}  // namespace

void write_outputs(const ExperimentConfig& cfg, const CommandResult& result) {
  const std::filesystem::path out(cfg.out);
  write_file(out, result.main.to_csv(), cfg.force);
  if (result.sorted) {
    write_file(sibling_path(out, ".sorted"), result.sorted->to_csv(), cfg.force);
  }
  if (cfg.emit_plotscript) {
    std::filesystem::path gp = out;
    gp.replace_extension(".gp");
    write_file(gp, plot_script(cfg, result.main), cfg.force);
  }
}

int run_experiment(ExperimentConfig cfg) {
  apply_defaults(cfg);
  const CommandResult result = run_command(cfg);
  write_outputs(cfg, result);
  return 0;
}

}  // namespace negwit::experiments
