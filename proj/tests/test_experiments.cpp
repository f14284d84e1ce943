#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cli_app.hpp"
#include "negwit/errors.hpp"
#include "negwit/experiments.hpp"
#include "negwit/pure.hpp"

using namespace negwit;
using namespace negwit::experiments;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("negwit_tests_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string read_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  REQUIRE(bool(stream));
  std::ostringstream out;
  out << stream.rdbuf();
  return out.str();
}

ExperimentConfig base_config(const std::string& experiment) {
  ExperimentConfig cfg;
  cfg.experiment = experiment;
  apply_defaults(cfg);
  return cfg;
}

std::size_t column_index(const Table& table, const std::string& name) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (table.columns[i] == name) return i;
  }
  FAIL("missing column ", name);
  return 0;
}

}  // namespace

TEST_CASE("config_from_json_text: field parsing and unknown keys") {
  const ExperimentConfig cfg = config_from_json_text(R"({
    "experiment": "werner", "M": 3, "samples": 7, "seed": 99,
    "class": "hermitian", "eta": [0.0, 2.0], "p_grid": [0.0, 1.0],
    "k": 4, "bins": 8, "beta1": -0.5, "beta2_grid": [0.1],
    "base": "identity", "same_unitary": true, "force_equal_rows": true,
    "out": "x.csv", "force": true, "sorted": true, "emit_plotscript": true
  })");
  CHECK(cfg.experiment == "werner");
  CHECK(cfg.m_cutoff == 3);
  CHECK(cfg.samples == 7);
  CHECK(cfg.seed == 99);
  CHECK(*cfg.amplitude_class == AmplitudeClass::Hermitian);
  CHECK(cfg.eta_list.size() == 2);
  CHECK(cfg.p_grid.size() == 2);
  CHECK(cfg.k == 4);
  CHECK(cfg.bins == 8);
  CHECK(cfg.beta1 == -0.5);
  CHECK(cfg.base == "identity");
  CHECK(cfg.same_unitary);
  CHECK(cfg.force_equal_rows);
  CHECK(cfg.out == "x.csv");
  CHECK(cfg.force);
  CHECK(cfg.sorted);
  CHECK(cfg.emit_plotscript);

  // "d" is accepted as an alias for M = d - 1; scalar eta is accepted.
  const ExperimentConfig alias = config_from_json_text(R"({"d": 5, "eta": 0.5})");
  CHECK(alias.m_cutoff == 4);
  CHECK(alias.eta_list == std::vector<double>{0.5});

  CHECK_THROWS_AS(config_from_json_text("not json"), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json_text(R"({"unknown_key": 1})"), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json_text(R"({"samples": "ten"})"), std::invalid_argument);
}

TEST_CASE("apply_defaults: per-command dimensions and validation") {
  CHECK(base_config("pure-sweep").m_cutoff == 40);
  CHECK(base_config("coherent").m_cutoff == 20);
  CHECK(base_config("psd").m_cutoff == 10);
  CHECK(base_config("two-qubit").m_cutoff == 1);
  CHECK(base_config("purity-hist").eta_list.size() == 10);
  CHECK(base_config("werner").p_grid.size() == 21);
  CHECK(base_config("psd").k == 5);
  CHECK(base_config("mixed-random").out == "negwit_mixed-random.csv");

  ExperimentConfig bad;
  bad.experiment = "no-such-command";
  CHECK_THROWS_AS(apply_defaults(bad), std::invalid_argument);

  ExperimentConfig bad_grid;
  bad_grid.experiment = "werner";
  bad_grid.p_grid = {0.5, 1.5};
  CHECK_THROWS_AS(apply_defaults(bad_grid), std::invalid_argument);

  ExperimentConfig bad_two_qubit;
  bad_two_qubit.experiment = "two-qubit";
  bad_two_qubit.m_cutoff = 3;
  CHECK_THROWS_AS(apply_defaults(bad_two_qubit), std::invalid_argument);
}

TEST_CASE("Table: 17-significant-digit cells and sorted twin") {
  Table t;
  t.comments = {"hello"};
  t.columns = {"a", "b"};
  t.rows = {{1.0, 1.0 / 3.0}, {0.0, 2.0}};
  const std::string csv = t.to_csv();
  CHECK(csv.find("# hello\n") == 0);
  CHECK(csv.find("a,b\n") != std::string::npos);
  CHECK(csv.find("0.33333333333333331") != std::string::npos);

  const Table desc = t.sorted_by(1, true);
  CHECK(desc.rows[0][1] == 2.0);
  const Table asc = t.sorted_by(1, false);
  CHECK(asc.rows[0][1] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("pure-sweep: positive Hermitian exactness and arbitrary-complex bound") {
  ExperimentConfig cfg = base_config("pure-sweep");
  cfg.m_cutoff = 10;
  cfg.samples = 20;
  cfg.seed = 5;
  const CommandResult result = run_pure_sweep(cfg);
  REQUIRE(result.main.rows.size() == 20);
  const std::size_t diff_col = column_index(result.main, "diff_exact_minus_approx");
  for (const auto& row : result.main.rows) {
    CHECK(std::abs(row[diff_col]) <= 1e-8);
  }
  // Exactness class: ln_exact = -log2(purity of the underlying rho).
  const std::size_t purity_col = column_index(result.main, "purity");
  const std::size_t exact_col = column_index(result.main, "ln_exact");
  for (const auto& row : result.main.rows) {
    CHECK(std::abs(row[exact_col] + std::log2(row[purity_col])) <= 1e-8);
  }

  REQUIRE(result.sorted.has_value());
  for (std::size_t i = 1; i < result.sorted->rows.size(); ++i) {
    CHECK(result.sorted->rows[i - 1][exact_col] >= result.sorted->rows[i][exact_col]);
  }

  bool found_fraction = false;
  for (const std::string& comment : result.main.comments) {
    if (comment.rfind("fraction_le_leq_ln_exact=", 0) == 0) found_fraction = true;
  }
  CHECK(found_fraction);

  cfg.amplitude_class = AmplitudeClass::ArbitraryComplex;
  const CommandResult lower = run_pure_sweep(cfg);
  for (const auto& row : lower.main.rows) {
    CHECK(row[diff_col] >= -1e-9);
  }
}

TEST_CASE("coherent: separable point on the beta2 grid") {
  ExperimentConfig cfg = base_config("coherent");
  cfg.beta1 = 0.5;
  cfg.beta2_grid = {-0.5, 0.5};
  const CommandResult result = run_coherent(cfg);
  REQUIRE(result.main.rows.size() == 2);
  const std::size_t e_col = column_index(result.main, "ln_exact");
  const std::size_t a_col = column_index(result.main, "ln_approx");

  // beta2 = beta1: separable, both vanish.
  CHECK(result.main.rows[1][e_col] <= 1e-8);
  CHECK(result.main.rows[1][a_col] <= 1e-8);

  // beta2 = -beta1: entangled; value pinned by the library-level oracle.
  const auto psi = coherent_coeffs(Complex(0.5, 0.0), 20);
  const auto phi = coherent_coeffs(Complex(-0.5, 0.0), 20);
  const Eigen::Map<const ComplexVector> psi_v(psi.data(), 21), phi_v(phi.data(), 21);
  const double expected = ln_exact(symmetric_product_superposition(psi_v, phi_v)).ln;
  CHECK(expected > 0.0);
  CHECK(expected <= 1.0);
  CHECK(result.main.rows[0][e_col] == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("random-rows: forced equal rows are separable, diff stays nonnegative") {
  ExperimentConfig cfg = base_config("random-rows");
  cfg.m_cutoff = 8;
  cfg.samples = 25;
  cfg.same_unitary = true;
  cfg.force_equal_rows = true;
  const CommandResult equal_rows = run_random_rows(cfg);
  const std::size_t e_col = column_index(equal_rows.main, "ln_exact");
  for (const auto& row : equal_rows.main.rows) CHECK(row[e_col] <= 1e-8);

  ExperimentConfig general = base_config("random-rows");
  general.m_cutoff = 8;
  general.samples = 25;
  const CommandResult different = run_random_rows(general);
  const std::size_t diff_col = column_index(different.main, "diff_exact_minus_approx");
  for (const auto& row : different.main.rows) CHECK(row[diff_col] >= -1e-9);
}

TEST_CASE("eta-deviation: anchors at eta = 0") {
  ExperimentConfig cfg = base_config("eta-deviation");
  cfg.m_cutoff = 6;
  cfg.samples = 5;
  cfg.eta_list = {0.0, 10.0};
  const CommandResult projector = run_eta_deviation(cfg);
  const std::size_t eta_col = column_index(projector.main, "eta");
  const std::size_t e_col = column_index(projector.main, "ln_exact");
  const std::size_t a_col = column_index(projector.main, "ln_approx");
  const std::size_t diff_col = column_index(projector.main, "diff_exact_minus_approx");
  for (const auto& row : projector.main.rows) {
    if (row[eta_col] == 0.0) {
      CHECK(row[e_col] <= 1e-8);
      CHECK(row[a_col] <= 1e-8);
    }
    CHECK(row[diff_col] >= -1e-9);
  }

  cfg.base = "identity";
  const CommandResult identity = run_eta_deviation(cfg);
  for (const auto& row : identity.main.rows) {
    if (row[eta_col] == 0.0) {
      CHECK(row[e_col] == doctest::Approx(std::log2(7.0)).epsilon(1e-10));
      CHECK(row[a_col] == doctest::Approx(std::log2(7.0)).epsilon(1e-10));
    }
  }
  bool caption_note = false;
  for (const std::string& comment : identity.main.comments) {
    if (comment.find("log2(d)") != std::string::npos) caption_note = true;
  }
  CHECK(caption_note);
}

TEST_CASE("two-qubit: three-way agreement") {
  ExperimentConfig cfg = base_config("two-qubit");
  cfg.samples = 50;
  const CommandResult result = run_two_qubit(cfg);
  const std::size_t e_col = column_index(result.main, "ln_exact");
  const std::size_t a_col = column_index(result.main, "ln_approx");
  const std::size_t c_col = column_index(result.main, "ln_closed_form");
  for (const auto& row : result.main.rows) {
    CHECK(std::abs(row[e_col] - row[a_col]) <= 1e-10);
    CHECK(std::abs(row[e_col] - row[c_col]) <= 1e-10);
  }
}

TEST_CASE("werner: thresholds, endpoint, averages, symmetrized equality") {
  ExperimentConfig cfg = base_config("werner");
  cfg.m_cutoff = 1;  // d = 2
  const CommandResult result = run_werner(cfg);
  const std::size_t p_col = column_index(result.main, "p");
  const std::size_t e_num = column_index(result.main, "ln_exact_numeric");
  const std::size_t a_num = column_index(result.main, "ln_approx_numeric");
  const std::size_t sym = column_index(result.main, "ln_approx_sym_numeric");
  const std::size_t avg_e = column_index(result.main, "avg_ln_exact");
  const std::size_t avg_a = column_index(result.main, "avg_ln_approx");

  for (const auto& row : result.main.rows) {
    const double p = row[p_col];
    if (p <= 1.0 / 3.0) {
      CHECK(row[e_num] <= 1e-8);
    } else if (p >= 1.0 / 3.0 + 0.05) {
      CHECK(row[e_num] > 1e-8);
    }
    CHECK(std::abs(row[avg_e] - p * std::log2(2.0)) <= 1e-10);
    CHECK(std::abs(row[avg_a] - p * std::log2(2.0)) <= 1e-10);
    CHECK(row[sym] == doctest::Approx(row[a_num]).epsilon(1e-14));
    if (p == 1.0) {
      CHECK(row[e_num] == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(row[a_num] == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("psd: ordering chain rowwise and sorted-by-purity twin") {
  ExperimentConfig cfg = base_config("psd");
  cfg.m_cutoff = 5;
  cfg.samples = 10;
  cfg.k = 3;
  const CommandResult result = run_psd(cfg);
  const std::size_t purity_col = column_index(result.main, "purity");
  const std::size_t e_col = column_index(result.main, "ln_exact_mixed");
  const std::size_t a_col = column_index(result.main, "ln_approx_mixed");
  const std::size_t avg_col = column_index(result.main, "avg_ln_approx");
  for (const auto& row : result.main.rows) {
    CHECK(row[avg_col] <= row[e_col] + 1e-9);
    CHECK(row[e_col] <= row[a_col] + 1e-9);
  }
  REQUIRE(result.sorted.has_value());
  for (std::size_t i = 1; i < result.sorted->rows.size(); ++i) {
    CHECK(result.sorted->rows[i - 1][purity_col] <= result.sorted->rows[i][purity_col]);
  }
}

TEST_CASE("purity-hist: eta = 0 concentrates in the closed top bin") {
  ExperimentConfig cfg = base_config("purity-hist");
  cfg.m_cutoff = 3;
  cfg.samples = 30;
  cfg.bins = 10;
  cfg.eta_list = {0.0, 1.0, 1000.0};
  const CommandResult result = run_purity_hist(cfg);
  const std::size_t eta_col = column_index(result.main, "eta");
  const std::size_t bin_col = column_index(result.main, "bin_index");
  const std::size_t count_col = column_index(result.main, "count");
  const std::size_t mean_col = column_index(result.main, "mean_purity");

  double previous_mean = 2.0;
  double current_eta = -1.0;
  for (const auto& row : result.main.rows) {
    if (row[eta_col] == 0.0) {
      if (row[bin_col] == 9.0) {
        CHECK(row[count_col] == 30.0);
      } else {
        CHECK(row[count_col] == 0.0);
      }
    }
    if (row[eta_col] != current_eta) {
      current_eta = row[eta_col];
      CHECK(row[mean_col] <= previous_mean + 1e-12);
      previous_mean = row[mean_col];
    }
  }
}

TEST_CASE("mixed-random: maximally mixed baseline row") {
  ExperimentConfig cfg = base_config("mixed-random");
  cfg.m_cutoff = 2;
  cfg.samples = 10;
  const CommandResult result = run_mixed_random(cfg);
  CHECK(result.main.rows[0][column_index(result.main, "ln_exact_mixed")] == 0.0);
  CHECK(result.main.rows[0][column_index(result.main, "ln_approx_mixed")] == 0.0);
}

TEST_CASE("determinism: identical config and seed give byte-identical CSV") {
  for (const std::string name : {"pure-sweep", "random-rows", "psd", "mixed-random"}) {
    ExperimentConfig cfg = base_config(name);
    cfg.m_cutoff = name == "pure-sweep" ? 6 : 3;
    cfg.samples = 8;
    cfg.seed = 31;
    const std::string first = run_command(cfg).main.to_csv();
    const std::string second = run_command(cfg).main.to_csv();
    CHECK(first == second);

    cfg.seed = 32;
    CHECK(run_command(cfg).main.to_csv() != first);
  }
}

TEST_CASE("write_outputs: collision handling, twins, plot script") {
  TempDir tmp;
  ExperimentConfig cfg = base_config("werner");
  cfg.m_cutoff = 1;
  cfg.p_grid = {0.0, 0.5, 1.0};
  cfg.out = tmp.file("werner.csv");
  cfg.emit_plotscript = true;

  const CommandResult result = run_command(cfg);
  write_outputs(cfg, result);
  CHECK(fs::exists(tmp.file("werner.csv")));
  CHECK(fs::exists(tmp.file("werner.gp")));

  CHECK_THROWS_AS(write_outputs(cfg, result), io_error);
  cfg.force = true;
  CHECK_NOTHROW(write_outputs(cfg, result));

  const std::string csv = read_file(tmp.file("werner.csv"));
  CHECK(csv.rfind("# negwit", 0) == 0);
  CHECK(csv.find("config_hash=") != std::string::npos);
  CHECK(csv.find("seed=1") != std::string::npos);

  ExperimentConfig sweep = base_config("pure-sweep");
  sweep.m_cutoff = 4;
  sweep.samples = 5;
  sweep.out = tmp.file("sweep.csv");
  write_outputs(sweep, run_command(sweep));
  CHECK(fs::exists(tmp.file("sweep.csv")));
  CHECK(fs::exists(tmp.file("sweep.sorted.csv")));
}

TEST_CASE("cli: exit codes and flag overrides") {
  TempDir tmp;

  const std::string out = tmp.file("cli_werner.csv");
  CHECK(cli::run_cli({"werner", "--dim-M", "1", "--seed", "3", "--out", out}) == 0);
  CHECK(fs::exists(out));

  // Re-running without --force collides: exit 4.
  CHECK(cli::run_cli({"werner", "--dim-M", "1", "--seed", "3", "--out", out}) == 4);
  CHECK(cli::run_cli({"werner", "--dim-M", "1", "--seed", "3", "--out", out, "--force"}) == 0);

  // Config errors: unknown class tag, unknown flag, missing subcommand.
  CHECK(cli::run_cli({"pure-sweep", "--class", "bogus", "--out", tmp.file("x.csv")}) == 2);
  CHECK(cli::run_cli({"pure-sweep", "--no-such-flag"}) == 2);
  CHECK(cli::run_cli({}) == 2);

  // Determinism through the CLI: byte-identical outputs for equal seeds.
  const std::string out_a = tmp.file("a.csv");
  const std::string out_b = tmp.file("b.csv");
  CHECK(cli::run_cli({"two-qubit", "--samples", "12", "--seed", "9", "--out", out_a}) == 0);
  CHECK(cli::run_cli({"two-qubit", "--samples", "12", "--seed", "9", "--out", out_b}) == 0);
  CHECK(read_file(out_a) == read_file(out_b));

  // JSON config is honored and flags override it.
  const std::string config_path = tmp.file("cfg.json");
  {
    std::ofstream cfg_stream(config_path);
    cfg_stream << R"({"experiment": "two-qubit", "samples": 4, "seed": 11, "out": ")"
               << tmp.file("from_config.csv") << R"("})";
  }
  CHECK(cli::run_cli({"two-qubit", "--config", config_path}) == 0);
  const std::string from_config = read_file(tmp.file("from_config.csv"));
  CHECK(from_config.find("seed=11") != std::string::npos);

  CHECK(cli::run_cli({"two-qubit", "--config", config_path, "--seed", "12", "--out",
                      tmp.file("override.csv")}) == 0);
  const std::string overridden = read_file(tmp.file("override.csv"));
  CHECK(overridden.find("seed=12") != std::string::npos);

  // Config naming a different experiment than the subcommand is an error.
  CHECK(cli::run_cli({"werner", "--config", config_path, "--out", tmp.file("w2.csv")}) == 2);

  // Missing config file is an I/O error.
  CHECK(cli::run_cli({"two-qubit", "--config", tmp.file("absent.json")}) == 4);
}
