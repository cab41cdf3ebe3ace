// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#include "proxshift/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <set>
#include <utility>

#include "json.hpp"
#include "proxshift/errors.hpp"
#include "proxshift/lyapunov.hpp"
#include "proxshift/plot.hpp"

namespace proxshift {

namespace {

using nlohmann::json;

[[noreturn]] void config_fail(const std::string& what) {
  throw ConfigError("config: " + what);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_keys(const json& j, const char* where,
                std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      config_fail("unknown key '" + it.key() + "' in " + where);
    }
  }
}

double get_num(const json& j, const char* key, double def) {
  if (!j.contains(key)) return def;
  const json& v = j.at(key);
  if (!v.is_number()) config_fail(std::string(key) + " must be a number");
  return v.get<double>();
}

std::optional<double> get_opt_num(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  const json& v = j.at(key);
  if (!v.is_number()) config_fail(std::string(key) + " must be a number");
  return v.get<double>();
}

std::size_t get_count(const json& j, const char* key, std::size_t def) {
  if (!j.contains(key)) return def;
  const json& v = j.at(key);
  if (!v.is_number_unsigned()) {
    config_fail(std::string(key) + " must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::uint64_t get_seed(const json& j, const char* key, std::uint64_t def) {
  if (!j.contains(key)) return def;
  const json& v = j.at(key);
  if (!v.is_number_unsigned()) {
    config_fail(std::string(key) + " must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

std::string get_str(const json& j, const char* key, const std::string& def) {
  if (!j.contains(key)) return def;
  const json& v = j.at(key);
  if (!v.is_string()) config_fail(std::string(key) + " must be a string");
  return v.get<std::string>();
}

bool get_bool(const json& j, const char* key, bool def) {
  if (!j.contains(key)) return def;
  const json& v = j.at(key);
  if (!v.is_boolean()) config_fail(std::string(key) + " must be a boolean");
  return v.get<bool>();
}

Eigen::Index get_dim(const json& j, const char* key, Eigen::Index def) {
  if (!j.contains(key)) return def;
  const json& v = j.at(key);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0 ||
      v.get<std::uint64_t>() > 1000000) {
    config_fail(std::string(key) + " must be a positive integer");
  }
  return static_cast<Eigen::Index>(v.get<std::uint64_t>());
}

std::string sanitize(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                    (ch >= '0' && ch <= '9') || ch == '-' || ch == '_';
    out += ok ? ch : '_';
  }
  if (out.empty()) out = "x";
  return out;
}

SolverRun dispatch_run(const CompositeProblem& problem,
                       const SolverConfig& sc, const AlgorithmSpec& spec,
                       const Vec& x0) {
  if (spec.algorithm == "fbs") return fbs_run(problem, sc, x0);
  if (spec.algorithm == "fista") {
    if (sc.delta == 0.0) return fista_run(problem, sc, x0, x0);
    return fista_delta_run(problem, sc, x0, x0);
  }
  if (spec.algorithm == "fista_zform") {
    return fista_zform_run(problem, sc, x0, x0);
  }
  throw ConfigError("unknown algorithm '" + spec.algorithm + "'");
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    config_fail(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) config_fail("top level must be an object");
  check_keys(root, "top level",
             {"name", "instances", "algorithms", "max_iters",
              "snapshot_stride", "tol", "plots", "region", "out_dir",
              "quiet"});

  ExperimentConfig cfg;
  cfg.name = get_str(root, "name", cfg.name);
  cfg.max_iters = get_count(root, "max_iters", cfg.max_iters);
  cfg.snapshot_stride = get_count(root, "snapshot_stride",
                                  cfg.snapshot_stride);
  cfg.tol = get_num(root, "tol", cfg.tol);
  if (cfg.tol < 0.0) config_fail("tol must be nonnegative");
  cfg.plots = get_bool(root, "plots", cfg.plots);
  cfg.out_dir = get_str(root, "out_dir", cfg.out_dir);
  cfg.quiet = get_bool(root, "quiet", cfg.quiet);

  if (root.contains("instances")) {
    const json& arr = root.at("instances");
    if (!arr.is_array()) config_fail("instances must be an array");
    for (const json& item : arr) {
      if (!item.is_object()) config_fail("instance entries must be objects");
      check_keys(item, "instance",
                 {"label", "rows", "cols", "a", "b", "rho", "seed"});
      InstanceSpec spec;
      spec.label = get_str(item, "label", spec.label);
      spec.params.rows = get_dim(item, "rows", spec.params.rows);
      spec.params.cols = get_dim(item, "cols", spec.params.cols);
      spec.params.a = get_num(item, "a", spec.params.a);
      spec.params.b = get_num(item, "b", spec.params.b);
      spec.params.rho = get_num(item, "rho", spec.params.rho);
      spec.params.seed = get_seed(item, "seed", spec.params.seed);
      cfg.instances.push_back(std::move(spec));
    }
  }

  if (root.contains("algorithms")) {
    const json& arr = root.at("algorithms");
    if (!arr.is_array()) config_fail("algorithms must be an array");
    for (const json& item : arr) {
      if (!item.is_object()) config_fail("algorithm entries must be objects");
      check_keys(item, "algorithm",
                 {"algorithm", "label", "delta", "step", "inertia",
                  "coupling"});
      AlgorithmSpec spec;
      spec.algorithm = get_str(item, "algorithm", spec.algorithm);
      if (spec.algorithm != "fbs" && spec.algorithm != "fista" &&
          spec.algorithm != "fista_zform") {
        config_fail("algorithm must be fbs, fista or fista_zform");
      }
      spec.label = get_str(item, "label", spec.algorithm);
      spec.delta = get_num(item, "delta", spec.delta);
      spec.step = get_opt_num(item, "step");
      spec.inertia = get_opt_num(item, "inertia");
      spec.coupling = get_opt_num(item, "coupling");
      cfg.algorithms.push_back(std::move(spec));
    }
  }

  if (root.contains("region")) {
    const json& reg = root.at("region");
    if (!reg.is_object()) config_fail("region must be an object");
    check_keys(reg, "region",
               {"mu_points", "rho_points", "mu_max", "rho_max"});
    RegionSpec spec;
    spec.mu_points = get_count(reg, "mu_points", spec.mu_points);
    spec.rho_points = get_count(reg, "rho_points", spec.rho_points);
    spec.mu_max = get_num(reg, "mu_max", spec.mu_max);
    spec.rho_max = get_num(reg, "rho_max", spec.rho_max);
    cfg.region = spec;
  }
  return cfg;
}

ExperimentConfig preset_config(const std::string& name) {
  ExperimentConfig cfg;
  cfg.name = name;
  if (name == "fig1") {
    cfg.region = RegionSpec{};
    return cfg;
  }

  const auto algorithms = [](double rho) {
    std::vector<AlgorithmSpec> algs(4);
    algs[0].algorithm = "fbs";
    algs[0].label = "fbs";
    algs[1].algorithm = "fista";
    algs[1].label = "fista_d0";
    algs[1].delta = 0.0;
    algs[2].algorithm = "fista";
    algs[2].label = "fista_dhalf";
    algs[2].delta = 0.5 * rho;
    algs[3].algorithm = "fista";
    algs[3].label = "fista_drho";
    algs[3].delta = rho;
    return algs;
  };
  const auto instance = [](const char* label, Eigen::Index n, double a,
                           double b, double rho, std::uint64_t seed) {
    InstanceSpec spec;
    spec.label = label;
    spec.params.rows = n;
    spec.params.cols = n;
    spec.params.a = a;
    spec.params.b = b;
    spec.params.rho = rho;
    spec.params.seed = seed;
    return spec;
  };

  if (name == "fig2") {
    const double rho = 0.1;
    cfg.instances = {instance("small_mu", 50, 0.0, 0.2, rho, 1),
                     instance("larger_mu", 50, 0.58, 0.1, rho, 2)};
    cfg.algorithms = algorithms(rho);
    cfg.max_iters = 2000;
    return cfg;
  }
  if (name == "fig3") {
    const double rho = 0.02;
    cfg.instances = {instance("small_mu", 50, 0.0, 0.2, rho, 3),
                     instance("larger_mu", 50, 0.58, 0.1, rho, 4)};
    cfg.algorithms = algorithms(rho);
    cfg.max_iters = 2000;
    return cfg;
  }
  if (name == "fig4") {
    const double rho = 0.02;
    cfg.instances = {instance("small_mu", 1000, 0.0, 0.1, rho, 1),
                     instance("larger_mu", 1000, 5.0, 0.1, rho, 2)};
    cfg.algorithms = algorithms(rho);
    cfg.max_iters = 5000;
    return cfg;
  }
  config_fail("unknown preset '" + name + "'");
}

std::vector<double> region_mu_grid(const RegionSpec& spec) {
  if (spec.mu_points == 0 || !(spec.mu_max > 0.0)) {
    throw DomainError("region grid needs mu_points > 0 and mu_max > 0");
  }
  std::vector<double> grid(spec.mu_points);
  for (std::size_t i = 0; i < spec.mu_points; ++i) {
    grid[i] = spec.mu_max * static_cast<double>(i) /
              static_cast<double>(spec.mu_points);
  }
  return grid;
}

std::vector<double> region_rho_grid(const RegionSpec& spec) {
  if (spec.rho_points < 2 || !(spec.rho_max > 0.0)) {
    throw DomainError("region grid needs rho_points >= 2 and rho_max > 0");
  }
  std::vector<double> grid(spec.rho_points);
  for (std::size_t j = 0; j < spec.rho_points; ++j) {
    grid[j] = spec.rho_max * static_cast<double>(j) /
              static_cast<double>(spec.rho_points - 1);
  }
  return grid;
}

RegionMap build_region_map(const RegionSpec& spec) {
  return region_map(region_mu_grid(spec), region_rho_grid(spec));
}

void emit_region_csv(std::ostream& out, const RegionSpec& spec) {
  const std::vector<double> mu = region_mu_grid(spec);
  const std::vector<double> rho = region_rho_grid(spec);
  out << "mu,rho,r_fbs,r_fista0,winner\n";
  for (double m : mu) {
    for (double r : rho) {
      out << fmt(m) << ',' << fmt(r) << ',' << fmt(fbs_rate(m, r, 1.0))
          << ',' << fmt(fista_rate(m, r, 1.0)) << ','
          << region_name(classify_region(m, r)) << '\n';
    }
  }
  if (!out) throw IoError("failed writing region table");
}

void emit_csv(std::ostream& out, const SolverRun& run,
              const std::vector<std::pair<std::string, std::string>>&
                  metadata) {
  for (const auto& [key, value] : metadata) {
    out << "# " << key << ' ' << value << '\n';
  }
  out << "# algorithm " << run.algorithm << '\n';
  out << "# delta " << fmt(run.delta) << '\n';
  out << "# step " << fmt(run.step) << '\n';
  out << "# inertia " << fmt(run.inertia) << '\n';
  out << "# coupling " << fmt(run.coupling) << '\n';
  out << "# certificate_rate " << fmt(run.certificate.contraction) << '\n';
  if (run.f_star.has_value()) out << "# f_star " << fmt(*run.f_star) << '\n';
  out << "# iterations " << run.iterations << '\n';
  out << "# stopped_early " << (run.stopped_early ? 1 : 0) << '\n';

  std::optional<NormalizedTraces> traces;
  if (run.f_star.has_value()) {
    try {
      traces = normalized_traces(run);
    } catch (const Error&) {
      // Initial point coincides with the solution; normalized columns
      // stay empty.
    }
  }
  out << "k,e_k,v_k,ell_k,F_xk,phi_k\n";
  for (std::size_t k = 0; k < run.values.size(); ++k) {
    out << k << ',';
    if (traces && k < traces->error.size()) out << fmt(traces->error[k]);
    out << ',';
    if (traces && k < traces->value.size()) out << fmt(traces->value[k]);
    out << ',';
    if (traces && k < traces->lyapunov.size()) {
      out << fmt(traces->lyapunov[k]);
    }
    out << ',' << fmt(run.values[k]) << ',';
    if (k < run.lyapunov.size()) out << fmt(run.lyapunov[k]);
    out << '\n';
  }
  if (!out) throw IoError("failed writing run table");
}

namespace {

RunSummary make_summary(const std::string& instance_label,
                        const AlgorithmSpec& spec, const SolverRun& run,
                        const std::optional<NormalizedTraces>& traces,
                        double wall_seconds) {
  RunSummary s;
  s.instance_label = instance_label;
  s.label = spec.label;
  s.algorithm = run.algorithm;
  s.delta = run.delta;
  s.step = run.step;
  s.inertia = run.inertia;
  s.coupling = run.coupling;
  s.certificate_rate = run.certificate.contraction;
  s.iterations = run.iterations;
  s.stopped_early = run.stopped_early;
  s.wall_seconds = wall_seconds;
  s.floor_iteration = run.values.size();
  if (run.f_star.has_value()) {
    s.final_value_gap = run.values.back() - *run.f_star;
  }
  if (traces.has_value()) {
    s.final_e = traces->error.back();
    if (!traces->lyapunov.empty()) s.final_ell = traces->lyapunov.back();
    const std::vector<double>& digest =
        traces->lyapunov.empty() ? traces->value : traces->lyapunov;
    s.floor_iteration = floor_index(digest);
    try {
      s.empirical = empirical_rate(digest, 50);
    } catch (const Error&) {
      // Trace too short for the digest window, or floored at the start.
    }
  }
  return s;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();

  const bool has_runs = !config.instances.empty();
  if (config.instances.empty() != config.algorithms.empty()) {
    throw ConfigError("instances and algorithms must be given together");
  }
  if (!has_runs && !config.region.has_value()) {
    throw ConfigError("experiment has neither runs nor a region grid");
  }
  if (has_runs && config.max_iters == 0) {
    throw ConfigError("max_iters must be positive when runs are requested");
  }
  {
    std::set<std::string> labels;
    for (const AlgorithmSpec& spec : config.algorithms) {
      if (!labels.insert(sanitize(spec.label)).second) {
        throw ConfigError("algorithm labels must be unique: " + spec.label);
      }
    }
    labels.clear();
    for (const InstanceSpec& spec : config.instances) {
      if (!labels.insert(sanitize(spec.label)).second) {
        throw ConfigError("instance labels must be unique: " + spec.label);
      }
    }
  }

  namespace fs = std::filesystem;
  const bool writing = !config.out_dir.empty();
  fs::path dir;
  if (writing) {
    dir = fs::path(config.out_dir) / sanitize(config.name);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
      throw IoError("cannot create output directory " + dir.string() +
                    ": " + ec.message());
    }
  }

  ExperimentResult result;

  for (const InstanceSpec& ispec : config.instances) {
    const auto shared =
        std::make_shared<const QuadraticInstance>(make_instance(ispec.params));
    InstanceResult ir;
    ir.label = ispec.label;
    ir.params = ispec.params;
    ir.mu = shared->mu;
    ir.lipschitz = shared->lipschitz;

    const Vec x0 = Vec::Zero(shared->cols);

    using TimedRun = std::pair<SolverRun, double>;
    std::vector<std::future<TimedRun>> futures;
    futures.reserve(config.algorithms.size());
    for (const AlgorithmSpec& aspec : config.algorithms) {
      SolverConfig sc;
      sc.max_iters = config.max_iters;
      sc.tol = config.tol;
      sc.snapshot_stride = config.snapshot_stride;
      sc.delta = aspec.delta;
      sc.step = aspec.step;
      sc.inertia = aspec.inertia;
      sc.coupling = aspec.coupling;
      futures.push_back(
          std::async(std::launch::async, [sc, aspec, shared, x0]() {
            const auto rt0 = std::chrono::steady_clock::now();
            const CompositeProblem problem = as_problem(shared);
            SolverRun run = dispatch_run(problem, sc, aspec, x0);
            const std::chrono::duration<double> secs =
                std::chrono::steady_clock::now() - rt0;
            return TimedRun(std::move(run), secs.count());
          }));
    }

    std::vector<std::optional<NormalizedTraces>> traces;
    for (std::size_t ai = 0; ai < config.algorithms.size(); ++ai) {
      const AlgorithmSpec& aspec = config.algorithms[ai];
      TimedRun timed = futures[ai].get();
      SolverRun& run = timed.first;

      std::optional<NormalizedTraces> tr;
      if (run.f_star.has_value()) {
        try {
          tr = normalized_traces(run);
        } catch (const Error&) {
        }
      }
      RunSummary summary =
          make_summary(ir.label, aspec, run, tr, timed.second);

      if (writing) {
        const fs::path csv =
            dir / (sanitize(ir.label) + "_" + sanitize(aspec.label) + ".csv");
        std::ofstream out = open_out(csv);
        const std::vector<std::pair<std::string, std::string>> meta = {
            {"instance", ir.label},
            {"label", aspec.label},
            {"seed", std::to_string(ispec.params.seed)},
            {"rows", std::to_string(ispec.params.rows)},
            {"cols", std::to_string(ispec.params.cols)},
            {"gen_a", fmt(ispec.params.a)},
            {"gen_b", fmt(ispec.params.b)},
            {"rho", fmt(ispec.params.rho)},
            {"mu", fmt(ir.mu)},
            {"lipschitz", fmt(ir.lipschitz)},
        };
        emit_csv(out, run, meta);
        summary.csv_path = csv.string();
        result.written.push_back(csv.string());
      }

      traces.push_back(std::move(tr));
      result.summaries.push_back(std::move(summary));
      ir.runs.push_back(std::move(run));
    }

    if (writing && config.plots) {
      const auto write_panel = [&](const char* kind, auto select,
                                   bool with_bounds) {
        std::vector<PlotSeries> series;
        for (std::size_t ai = 0; ai < ir.runs.size(); ++ai) {
          if (!traces[ai].has_value()) continue;
          const std::vector<double>& values = select(*traces[ai]);
          if (values.size() < 2) continue;
          PlotSeries s;
          s.label = config.algorithms[ai].label;
          s.values = values;
          series.push_back(std::move(s));
          const double rate = ir.runs[ai].certificate.contraction;
          if (with_bounds && rate < 1.0) {
            PlotSeries bound;
            bound.label = config.algorithms[ai].label + " bound";
            bound.dashed = true;
            bound.values.resize(values.size());
            double acc = 1.0;
            for (std::size_t k = 0; k < values.size(); ++k) {
              bound.values[k] = acc;
              acc *= rate;
            }
            series.push_back(std::move(bound));
          }
        }
        if (series.empty()) return;
        const fs::path svg =
            dir / (sanitize(ir.label) + "_" + kind + ".svg");
        std::ofstream out = open_out(svg);
        emit_plot(out, ir.label + std::string(": ") + kind, series);
        result.written.push_back(svg.string());
      };
      write_panel("error", [](const NormalizedTraces& t) -> const auto& {
        return t.error;
      }, false);
      write_panel("value", [](const NormalizedTraces& t) -> const auto& {
        return t.value;
      }, false);
      write_panel("lyapunov", [](const NormalizedTraces& t) -> const auto& {
        return t.lyapunov;
      }, true);
    }

    result.instances.push_back(std::move(ir));
  }

  if (writing && has_runs) {
    const fs::path path = dir / "summary.csv";
    std::ofstream out = open_out(path);
    out << "instance,label,algorithm,seed,mu,lipschitz,rho,delta,step,"
           "inertia,coupling,certificate_rate,empirical_rate,"
           "final_value_gap,final_e,final_ell,floor_iteration,iterations,"
           "stopped_early,wall_seconds,csv\n";
    std::size_t row = 0;
    for (const InstanceResult& ir : result.instances) {
      for (std::size_t ai = 0; ai < ir.runs.size(); ++ai, ++row) {
        const RunSummary& s = result.summaries[row];
        out << s.instance_label << ',' << s.label << ',' << s.algorithm
            << ',' << ir.params.seed << ',' << fmt(ir.mu) << ','
            << fmt(ir.lipschitz) << ',' << fmt(ir.params.rho) << ','
            << fmt(s.delta) << ',' << fmt(s.step) << ',' << fmt(s.inertia)
            << ',' << fmt(s.coupling) << ',' << fmt(s.certificate_rate)
            << ',';
        if (s.empirical.has_value()) out << fmt(*s.empirical);
        out << ',';
        if (s.final_value_gap.has_value()) out << fmt(*s.final_value_gap);
        out << ',';
        if (s.final_e.has_value()) out << fmt(*s.final_e);
        out << ',';
        if (s.final_ell.has_value()) out << fmt(*s.final_ell);
        out << ',' << s.floor_iteration << ',' << s.iterations << ','
            << (s.stopped_early ? 1 : 0) << ',' << fmt(s.wall_seconds)
            << ',' << s.csv_path << '\n';
      }
    }
    if (!out) throw IoError("failed writing summary table");
    result.written.push_back(path.string());
  }

  if (config.region.has_value()) {
    result.region = build_region_map(*config.region);
    if (writing) {
      const fs::path csv = dir / "region.csv";
      std::ofstream out = open_out(csv);
      emit_region_csv(out, *config.region);
      result.written.push_back(csv.string());
      if (config.plots) {
        const fs::path svg = dir / "region.svg";
        std::ofstream sout = open_out(svg);
        emit_region_svg(sout, *result.region);
        result.written.push_back(svg.string());
      }
    }
  }

  const std::chrono::duration<double> total =
      std::chrono::steady_clock::now() - t0;
  result.total_wall_seconds = total.count();
  return result;
}

}  // namespace proxshift
