// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#ifdef PROXSHIFT_CLI_PATH
#include <sys/wait.h>
#endif

#include "proxshift/errors.hpp"
#include "proxshift/experiment.hpp"
#include "proxshift/lyapunov.hpp"

using Catch::Approx;
using namespace proxshift;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path scratch_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("proxshift_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void check_same_config(const ExperimentConfig& got,
                       const ExperimentConfig& want) {
  CHECK(got.name == want.name);
  CHECK(got.max_iters == want.max_iters);
  CHECK(got.snapshot_stride == want.snapshot_stride);
  CHECK(got.tol == want.tol);
  CHECK(got.plots == want.plots);
  CHECK(got.region.has_value() == want.region.has_value());
  if (got.region && want.region) {
    CHECK(got.region->mu_points == want.region->mu_points);
    CHECK(got.region->rho_points == want.region->rho_points);
    CHECK(got.region->mu_max == want.region->mu_max);
    CHECK(got.region->rho_max == want.region->rho_max);
  }
  REQUIRE(got.instances.size() == want.instances.size());
  for (std::size_t i = 0; i < want.instances.size(); ++i) {
    CHECK(got.instances[i].label == want.instances[i].label);
    CHECK(got.instances[i].params.rows == want.instances[i].params.rows);
    CHECK(got.instances[i].params.cols == want.instances[i].params.cols);
    CHECK(got.instances[i].params.a == want.instances[i].params.a);
    CHECK(got.instances[i].params.b == want.instances[i].params.b);
    CHECK(got.instances[i].params.rho == want.instances[i].params.rho);
    CHECK(got.instances[i].params.seed == want.instances[i].params.seed);
  }
  REQUIRE(got.algorithms.size() == want.algorithms.size());
  for (std::size_t i = 0; i < want.algorithms.size(); ++i) {
    CHECK(got.algorithms[i].algorithm == want.algorithms[i].algorithm);
    CHECK(got.algorithms[i].label == want.algorithms[i].label);
    CHECK(got.algorithms[i].delta == want.algorithms[i].delta);
    CHECK(got.algorithms[i].step == want.algorithms[i].step);
    CHECK(got.algorithms[i].inertia == want.algorithms[i].inertia);
    CHECK(got.algorithms[i].coupling == want.algorithms[i].coupling);
  }
}

ExperimentConfig tiny_config() {
  ExperimentConfig cfg;
  cfg.name = "tiny";
  InstanceSpec inst;
  inst.label = "one";
  inst.params.rows = 10;
  inst.params.cols = 10;
  inst.params.a = 0.58;
  inst.params.b = 0.1;
  inst.params.rho = 0.1;
  inst.params.seed = 2;
  cfg.instances = {inst};
  AlgorithmSpec fbs;
  fbs.algorithm = "fbs";
  fbs.label = "fbs";
  AlgorithmSpec fista;
  fista.algorithm = "fista";
  fista.label = "fista";
  cfg.algorithms = {fbs, fista};
  cfg.max_iters = 60;
  cfg.out_dir.clear();
  cfg.quiet = true;
  return cfg;
}

}  // namespace

TEST_CASE("json config round trips through the parser", "[experiment]") {
  const std::string text = R"({
    "name": "study",
    "instances": [
      {"label": "a", "rows": 30, "cols": 20, "a": 0.5, "b": 0.25,
       "rho": 0.05, "seed": 11}
    ],
    "algorithms": [
      {"algorithm": "fbs"},
      {"algorithm": "fista", "label": "shifted", "delta": 0.025},
      {"algorithm": "fista_zform", "coupling": 0.3}
    ],
    "max_iters": 321,
    "tol": 1e-9,
    "plots": false,
    "out_dir": "results",
    "quiet": true
  })";
  const ExperimentConfig cfg = parse_config(text);
  REQUIRE(cfg.name == "study");
  REQUIRE(cfg.instances.size() == 1);
  REQUIRE(cfg.instances[0].label == "a");
  REQUIRE(cfg.instances[0].params.rows == 30);
  REQUIRE(cfg.instances[0].params.cols == 20);
  REQUIRE(cfg.instances[0].params.seed == 11);
  REQUIRE(cfg.algorithms.size() == 3);
  REQUIRE(cfg.algorithms[0].label == "fbs");
  REQUIRE(cfg.algorithms[1].label == "shifted");
  REQUIRE(cfg.algorithms[1].delta == 0.025);
  REQUIRE(cfg.algorithms[2].coupling == 0.3);
  REQUIRE_FALSE(cfg.algorithms[2].step.has_value());
  REQUIRE(cfg.max_iters == 321);
  REQUIRE(cfg.tol == 1e-9);
  REQUIRE_FALSE(cfg.plots);
  REQUIRE(cfg.out_dir == "results");
  REQUIRE(cfg.quiet);
  REQUIRE_FALSE(cfg.region.has_value());
}

TEST_CASE("config parser rejects malformed input", "[experiment]") {
  REQUIRE_THROWS_AS(parse_config("not json"), ConfigError);
  REQUIRE_THROWS_AS(parse_config("[1, 2]"), ConfigError);
  REQUIRE_THROWS_AS(parse_config(R"({"surprise": 1})"), ConfigError);
  REQUIRE_THROWS_AS(
      parse_config(R"({"instances": [{"rows": "many"}]})"), ConfigError);
  REQUIRE_THROWS_AS(
      parse_config(R"({"instances": [{"rows": 0}]})"), ConfigError);
  REQUIRE_THROWS_AS(parse_config(R"({"tol": -1})"), ConfigError);
  REQUIRE_THROWS_AS(parse_config(R"({"max_iters": -5})"), ConfigError);
  REQUIRE_THROWS_AS(
      parse_config(R"({"algorithms": [{"algorithm": "newton"}]})"),
      ConfigError);
  REQUIRE_THROWS_AS(
      parse_config(R"({"region": {"mu_points": "many"}})"), ConfigError);
  REQUIRE_THROWS_AS(
      parse_config(R"({"region": {"surprise": 1}})"), ConfigError);
}

TEST_CASE("bundled preset files match the built-in studies",
          "[experiment][presets]") {
  const fs::path dir = PROXSHIFT_PRESETS_DIR;
  for (const std::string name : {"fig1", "fig2", "fig3", "fig4"}) {
    INFO("preset " << name);
    const ExperimentConfig from_file =
        parse_config(read_file(dir / (name + ".json")));
    const ExperimentConfig built_in = preset_config(name);
    check_same_config(from_file, built_in);
  }
  REQUIRE_THROWS_AS(preset_config("fig9"), ConfigError);
}

TEST_CASE("region grids follow the requested shape", "[experiment]") {
  RegionSpec spec;
  spec.mu_points = 5;
  spec.rho_points = 3;
  spec.mu_max = 1.0;
  spec.rho_max = 4.0;
  const std::vector<double> mu = region_mu_grid(spec);
  const std::vector<double> rho = region_rho_grid(spec);
  REQUIRE(mu.size() == 5);
  REQUIRE(rho.size() == 3);
  // mu stays strictly below mu_max; rho reaches rho_max inclusively.
  REQUIRE(mu.front() == 0.0);
  REQUIRE(mu.back() == Approx(0.8));
  REQUIRE(rho.front() == 0.0);
  REQUIRE(rho.back() == 4.0);

  const RegionMap map = build_region_map(spec);
  REQUIRE(map.mu_grid.size() == 5);
  REQUIRE(map.rho_grid.size() == 3);
  REQUIRE(map.cells.size() == 15);

  spec.mu_points = 0;
  REQUIRE_THROWS_AS(region_mu_grid(spec), DomainError);
  spec.mu_points = 5;
  spec.rho_points = 1;
  REQUIRE_THROWS_AS(region_rho_grid(spec), DomainError);
}

TEST_CASE("region table lists every grid point", "[experiment]") {
  RegionSpec spec;
  spec.mu_points = 4;
  spec.rho_points = 3;
  std::stringstream out;
  emit_region_csv(out, spec);
  std::string line;
  REQUIRE(std::getline(out, line));
  REQUIRE(line == "mu,rho,r_fbs,r_fista0,winner");
  int rows = 0;
  while (std::getline(out, line)) {
    if (!line.empty()) ++rows;
  }
  REQUIRE(rows == 12);
}

TEST_CASE("run table layout", "[experiment]") {
  const ExperimentConfig cfg = tiny_config();
  const ExperimentResult result = run_experiment(cfg);
  REQUIRE(result.instances.size() == 1);
  REQUIRE(result.instances[0].runs.size() == 2);
  REQUIRE(result.written.empty());

  const SolverRun& run = result.instances[0].runs[1];
  std::stringstream out;
  emit_csv(out, run, {{"instance", "one"}});

  std::string line;
  REQUIRE(std::getline(out, line));
  REQUIRE(line == "# instance one");
  REQUIRE(std::getline(out, line));
  REQUIRE(line == "# algorithm fista");
  bool saw_header = false;
  std::size_t rows = 0;
  while (std::getline(out, line)) {
    if (line.rfind("# ", 0) == 0) continue;
    if (!saw_header) {
      REQUIRE(line == "k,e_k,v_k,ell_k,F_xk,phi_k");
      saw_header = true;
      continue;
    }
    if (!line.empty()) ++rows;
  }
  REQUIRE(saw_header);
  REQUIRE(rows == run.values.size());
}

TEST_CASE("run table leaves reference columns empty without a reference",
          "[experiment]") {
  const auto inst = std::make_shared<QuadraticInstance>(
      make_instance(tiny_config().instances[0].params));
  CompositeProblem p = as_problem(inst);
  p.reference_solution.reset();
  SolverConfig config;
  config.max_iters = 5;
  const SolverRun run = fbs_run(p, config, Vec::Zero(p.dim));

  std::stringstream out;
  emit_csv(out, run, {});
  std::string line;
  bool saw_row = false;
  while (std::getline(out, line)) {
    if (line.rfind("# ", 0) == 0 || line.rfind("k,", 0) == 0) continue;
    if (line.empty()) continue;
    saw_row = true;
    // k,e_k,v_k,ell_k,F_xk,phi_k with the diagnostics blank.
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() >= 5);
    REQUIRE_FALSE(fields[0].empty());
    REQUIRE(fields[1].empty());
    REQUIRE(fields[2].empty());
    REQUIRE(fields[3].empty());
    REQUIRE_FALSE(fields[4].empty());
  }
  REQUIRE(saw_row);
}

TEST_CASE("experiment validation catches impossible setups", "[experiment]") {
  ExperimentConfig cfg = tiny_config();
  cfg.instances.clear();
  REQUIRE_THROWS_AS(run_experiment(cfg), ConfigError);

  cfg = tiny_config();
  cfg.algorithms.clear();
  REQUIRE_THROWS_AS(run_experiment(cfg), ConfigError);

  cfg = tiny_config();
  cfg.max_iters = 0;
  REQUIRE_THROWS_AS(run_experiment(cfg), ConfigError);

  cfg = tiny_config();
  cfg.algorithms[1].label = cfg.algorithms[0].label;
  REQUIRE_THROWS_AS(run_experiment(cfg), ConfigError);

  ExperimentConfig empty;
  empty.out_dir.clear();
  REQUIRE_THROWS_AS(run_experiment(empty), ConfigError);
}

TEST_CASE("experiment summaries describe each run", "[experiment]") {
  ExperimentConfig cfg = tiny_config();
  cfg.max_iters = 400;
  const ExperimentResult result = run_experiment(cfg);
  REQUIRE(result.summaries.size() == 2);
  for (const RunSummary& s : result.summaries) {
    REQUIRE(s.instance_label == "one");
    REQUIRE(s.certificate_rate < 1.0);
    REQUIRE(s.empirical.has_value());
    REQUIRE(*s.empirical <= s.certificate_rate + 0.02);
    REQUIRE(s.iterations == 400);
    REQUIRE(s.wall_seconds >= 0.0);
  }
  REQUIRE(result.total_wall_seconds > 0.0);
}

TEST_CASE("experiment writes its files and replays byte for byte",
          "[experiment][io]") {
  const fs::path root = scratch_dir("replay");
  ExperimentConfig cfg = tiny_config();
  cfg.max_iters = 80;
  cfg.plots = true;

  cfg.out_dir = (root / "first").string();
  const ExperimentResult first = run_experiment(cfg);
  REQUIRE_FALSE(first.written.empty());

  cfg.out_dir = (root / "second").string();
  const ExperimentResult second = run_experiment(cfg);

  int compared = 0;
  for (const std::string& path : first.written) {
    if (path.size() < 4 || path.substr(path.size() - 4) != ".csv") continue;
    const fs::path relative = fs::relative(path, root / "first");
    if (relative.filename() == "summary.csv") continue;  // wall time differs
    const fs::path twin = root / "second" / relative;
    INFO(relative.string());
    REQUIRE(fs::exists(twin));
    REQUIRE(read_file(path) == read_file(twin));
    ++compared;
  }
  REQUIRE(compared >= 2);

  bool saw_svg = false;
  for (const std::string& path : first.written) {
    if (path.size() < 4 || path.substr(path.size() - 4) != ".svg") continue;
    saw_svg = true;
    const std::string svg = read_file(path);
    REQUIRE(svg.find("<svg") != std::string::npos);
    REQUIRE(svg.find("polyline") != std::string::npos);
  }
  REQUIRE(saw_svg);

  fs::remove_all(root);
}

TEST_CASE("certificate envelope appears dashed in the energy chart",
          "[experiment][io]") {
  const fs::path root = scratch_dir("charts");
  ExperimentConfig cfg = tiny_config();
  cfg.max_iters = 80;
  cfg.plots = true;
  cfg.out_dir = root.string();
  const ExperimentResult result = run_experiment(cfg);

  bool saw_lyapunov_chart = false;
  for (const std::string& path : result.written) {
    if (path.find("lyapunov.svg") == std::string::npos) continue;
    saw_lyapunov_chart = true;
    const std::string svg = read_file(path);
    REQUIRE(svg.find("stroke-dasharray") != std::string::npos);
    REQUIRE(svg.find("bound") != std::string::npos);
  }
  REQUIRE(saw_lyapunov_chart);
  fs::remove_all(root);
}

#ifdef PROXSHIFT_CLI_PATH

namespace {

int run_cli(const std::string& args) {
  const std::string command =
      std::string(PROXSHIFT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("command line drives presets and configs", "[experiment][cli]") {
  const fs::path root = scratch_dir("cli");

  REQUIRE(run_cli("preset fig2 --max-iters 30 --no-plots --quiet --out-dir " +
                  (root / "preset").string()) == 0);
  REQUIRE(fs::exists(root / "preset" / "fig2" / "summary.csv"));

  const fs::path config = root / "study.json";
  std::ofstream(config) << R"({
    "name": "cli_study",
    "instances": [{"label": "one", "rows": 10, "cols": 10, "a": 0.58,
                   "b": 0.1, "rho": 0.1, "seed": 2}],
    "algorithms": [{"algorithm": "fista"}],
    "max_iters": 40
  })";
  REQUIRE(run_cli("run " + config.string() + " --quiet --no-plots --out-dir " +
                  (root / "run").string()) == 0);
  REQUIRE(fs::exists(root / "run" / "cli_study" / "summary.csv"));

  REQUIRE(run_cli("validate " + config.string() + " --quiet") == 0);
  REQUIRE(run_cli("rates --mu 0.0105 --rho 0.1") == 0);
  REQUIRE(run_cli("region --steps 5") == 0);

  fs::remove_all(root);
}

TEST_CASE("command line reports structured failures", "[experiment][cli]") {
  const fs::path root = scratch_dir("cli_fail");

  // Malformed config: generic error.
  const fs::path bad = root / "bad.json";
  std::ofstream(bad) << "{broken";
  REQUIRE(run_cli("run " + bad.string()) == 1);

  // Diverging run: dedicated exit code.
  const fs::path diverge = root / "diverge.json";
  std::ofstream(diverge) << R"({
    "name": "diverge",
    "instances": [{"label": "one", "rows": 8, "cols": 8, "a": 0.58,
                   "b": 0.1, "rho": 0.1, "seed": 2}],
    "algorithms": [{"algorithm": "fista", "step": 50.0, "inertia": 1.0}],
    "max_iters": 5000
  })";
  REQUIRE(run_cli("run " + diverge.string() + " --quiet --out-dir " +
                  (root / "out").string()) == 2);

  // Unwritable output root: input/output exit code.
  const fs::path good = root / "good.json";
  std::ofstream(good) << R"({
    "name": "ok",
    "instances": [{"label": "one", "rows": 8, "cols": 8, "a": 0.58,
                   "b": 0.1, "rho": 0.1, "seed": 2}],
    "algorithms": [{"algorithm": "fbs"}],
    "max_iters": 10
  })";
  REQUIRE(run_cli("run " + good.string() + " --quiet --out-dir /dev/null/x") ==
          3);

  // Missing config file.
  REQUIRE(run_cli("run " + (root / "missing.json").string()) == 3);

  fs::remove_all(root);
}

#endif  // PROXSHIFT_CLI_PATH
