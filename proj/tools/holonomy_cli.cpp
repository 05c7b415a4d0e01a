// Command-line front end for the two-qubit holonomic-phase simulator.
// Links the C API only; all numerics live behind holonomy.h.
//
// Exit codes: 0 success, 1 configuration error, 2 undefined phase at a
// requested single point, 3 verification failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holonomy/holonomy.h"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;

constexpr int kExitConfig = 1;
constexpr int kExitUndefined = 2;
constexpr int kExitVerifyFailed = 3;

struct RunConfig {
  std::vector<double> alpha_grid;
  std::vector<double> s_grid;
  std::vector<double> t_grid;
  int samples_per_segment = 1024;
  double n = 11911.0;
  double n0 = 1616.0;
  int phi_points = 21;
  std::uint64_t seed = 12345;
  int reps = 1;
  std::string out;
  std::string format = "csv";
  bool noiseless = false;
};

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> v;
  v.reserve(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k)
    v.push_back(count > 1 ? lo + (hi - lo) * k / (count - 1) : lo);
  return v;
}

RunConfig default_config() {
  RunConfig cfg;
  cfg.alpha_grid = linspace(0.0, kPi, 21);        // steps of pi/20
  cfg.s_grid = linspace(0.0, kPi / 2.0, 41);      // steps of pi/80
  cfg.t_grid = linspace(0.0, 1.0, 11);
  return cfg;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

[[noreturn]] void config_fail(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitConfig);
}

void check(holo_status status, const std::string& what) {
  if (status != HOLO_OK)
    config_fail(what + " failed: " + holo_status_name(status));
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) config_fail("cannot open config file " + path);
  ordered_json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    config_fail(std::string("config parse error: ") + e.what());
  }
  auto grid = [&](const char* key, std::vector<double>& target) {
    if (doc.contains(key)) target = doc[key].get<std::vector<double>>();
  };
  try {
    grid("alpha_grid", cfg.alpha_grid);
    grid("s_grid", cfg.s_grid);
    grid("t_grid", cfg.t_grid);
    if (doc.contains("samples_per_segment"))
      cfg.samples_per_segment = doc["samples_per_segment"].get<int>();
    if (doc.contains("n")) cfg.n = doc["n"].get<double>();
    if (doc.contains("n0")) cfg.n0 = doc["n0"].get<double>();
    if (doc.contains("phi_points")) cfg.phi_points = doc["phi_points"].get<int>();
    if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("reps")) cfg.reps = doc["reps"].get<int>();
    if (doc.contains("out")) cfg.out = doc["out"].get<std::string>();
    if (doc.contains("format")) cfg.format = doc["format"].get<std::string>();
    if (doc.contains("noiseless")) cfg.noiseless = doc["noiseless"].get<bool>();
  } catch (const std::exception& e) {
    config_fail(std::string("config field error: ") + e.what());
  }
}

void validate_config(const RunConfig& cfg) {
  if (cfg.alpha_grid.empty() || cfg.s_grid.empty())
    config_fail("alpha and s grids must be non-empty");
  for (double a : cfg.alpha_grid)
    if (a < -1e-12 || a > kPi + 1e-12) config_fail("alpha values must lie in [0, pi]");
  for (double s : cfg.s_grid)
    if (s < -1e-12 || s > kPi / 2.0 + 1e-12)
      config_fail("s values must lie in [0, pi/2]");
  if (cfg.n0 < 0.0 || cfg.n < cfg.n0) config_fail("count levels must satisfy N >= N0 >= 0");
  if (cfg.phi_points < 5) config_fail("phi_points must be at least 5");
  if (cfg.reps < 1) config_fail("reps must be at least 1");
  if (cfg.format != "csv" && cfg.format != "json")
    config_fail("format must be csv or json");
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) config_fail("cannot open output file " + path);
  return out;
}

std::vector<double> phi_grid(int points) {
  // Uniform over one fringe period [0, pi).
  std::vector<double> grid;
  grid.reserve(static_cast<size_t>(points));
  for (int k = 0; k < points; ++k) grid.push_back(kPi * k / points);
  return grid;
}

// ---- phase ---------------------------------------------------------------

int cmd_phase(double alpha, double s, const RunConfig& cfg, bool degrees,
              const std::string& project_path) {
  if (degrees) {
    alpha *= kPi / 180.0;
    s *= kPi / 180.0;
  }
  holo_phase_result r{};
  const holo_status status = holo_phase_point(alpha, s, cfg.samples_per_segment, &r);
  if (status == HOLO_ERR_UNDEFINED_PHASE) {
    std::cerr << "undefined phase: the overlap vanishes at this point\n";
    return kExitUndefined;
  }
  check(status, "phase computation");

  ordered_json doc;
  doc["alpha"] = alpha;
  doc["s"] = s;
  doc["samples_per_segment"] = cfg.samples_per_segment;
  doc["pancharatnam_wrapped"] = r.pancharatnam_wrapped;
  doc["pancharatnam_unwrapped"] = r.pancharatnam_unwrapped;
  doc["dynamical"] = r.dynamical;
  doc["holonomic_wrapped"] = r.holonomic_wrapped;
  doc["holonomic_unwrapped"] = r.holonomic_unwrapped;
  doc["overlap_magnitude"] = r.overlap_magnitude;
  doc["closed_form"] = r.closed_form;
  doc["closed_minus_numeric"] = r.closed_form - r.holonomic_wrapped;
  doc["visibility"] = r.visibility;
  doc["dyn_segment_max"] = r.dyn_segment_max;

  if (cfg.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "alpha                  " << fmt(alpha) << "\n"
              << "s                      " << fmt(s) << "\n"
              << "pancharatnam (wrapped) " << fmt(r.pancharatnam_wrapped) << "\n"
              << "pancharatnam (lift)    " << fmt(r.pancharatnam_unwrapped) << "\n"
              << "dynamical              " << fmt(r.dynamical) << "\n"
              << "holonomic (wrapped)    " << fmt(r.holonomic_wrapped) << "\n"
              << "holonomic (lift)       " << fmt(r.holonomic_unwrapped) << "\n"
              << "closed form            " << fmt(r.closed_form) << "\n"
              << "difference             " << fmt(r.closed_form - r.holonomic_wrapped) << "\n"
              << "overlap magnitude      " << fmt(r.overlap_magnitude) << "\n"
              << "max segment dynamical  " << fmt(r.dyn_segment_max) << "\n";
  }
  if (!cfg.out.empty()) {
    auto out = open_output(cfg.out);
    out << doc.dump(2) << "\n";
  }
  if (!project_path.empty()) {
    holo_projection_trace* trace = nullptr;
    check(holo_trace_projections(alpha, s, cfg.samples_per_segment, &trace),
          "projection trace");
    auto out = open_output(project_path);
    out << "t,segment,a_x,a_y,a_z,b_x,b_y,b_z\n";
    const int n = holo_projection_trace_size(trace);
    for (int k = 0; k < n; ++k) {
      holo_projection_point p{};
      holo_projection_trace_point(trace, k, &p);
      out << fmt(p.t) << "," << p.segment_index << "," << fmt(p.a_x) << ","
          << fmt(p.a_y) << "," << fmt(p.a_z) << "," << fmt(p.b_x) << ","
          << fmt(p.b_y) << "," << fmt(p.b_z) << "\n";
    }
    holo_projection_trace_destroy(trace);
  }
  return 0;
}

// ---- sweep ---------------------------------------------------------------

int cmd_sweep(const RunConfig& cfg) {
  validate_config(cfg);
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!cfg.out.empty()) {
    file = open_output(cfg.out);
    out = &file;
  }
  *out << "alpha,s,phi_closed,phi_numeric,v_t,dyn_residual,status\n";
  for (double alpha : cfg.alpha_grid) {
    for (double s : cfg.s_grid) {
      holo_phase_result r{};
      const holo_status status = holo_phase_point(alpha, s, cfg.samples_per_segment, &r);
      if (status == HOLO_OK) {
        *out << fmt(alpha) << "," << fmt(s) << "," << fmt(r.closed_form) << ","
             << fmt(r.holonomic_wrapped) << "," << fmt(r.visibility) << ","
             << fmt(r.dyn_segment_max) << ",ok\n";
      } else if (status == HOLO_ERR_UNDEFINED_PHASE) {
        *out << fmt(alpha) << "," << fmt(s) << ",nan,nan," << fmt(r.visibility)
             << "," << fmt(r.dyn_segment_max) << ",undefined\n";
      } else {
        *out << fmt(alpha) << "," << fmt(s) << ",nan,nan,nan,nan,"
             << holo_status_name(status) << "\n";
      }
    }
  }
  return 0;
}

// ---- schmidt ---------------------------------------------------------------

int cmd_schmidt(const RunConfig& cfg) {
  if (cfg.t_grid.empty()) config_fail("t_grid must be non-empty");
  for (double t : cfg.t_grid)
    if (t < 0.0 || t > 1.0) config_fail("tangle values must lie in [0, 1]");
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!cfg.out.empty()) {
    file = open_output(cfg.out);
    out = &file;
  }
  *out << "T,phi_closed_eq_ent,phi_numeric_unwrapped\n";
  for (double t : cfg.t_grid) {
    double closed = 0.0, numeric = 0.0;
    check(holo_schmidt_point(t, cfg.samples_per_segment, &closed, &numeric),
          "schmidt evolution");
    *out << fmt(t) << "," << fmt(closed) << "," << fmt(numeric) << "\n";
  }
  return 0;
}

// ---- simulate --------------------------------------------------------------

struct PointSummary {
  double alpha = 0.0, s = 0.0;
  double phi_true = 0.0;
  double v_t = 0.0;
  int reps = 0;
  int undetermined = 0;
  double fit_mean = 0.0;         // circular mean of extracted phases
  double stderr_mean = 0.0;
  double coverage = 0.0;         // fraction within 3 stderr of truth
  double visibility_mean = 0.0;
  std::string status = "ok";
};

int cmd_simulate(const RunConfig& cfg) {
  validate_config(cfg);
  const std::string base = cfg.out.empty() ? "simulate" : cfg.out;
  auto fringe_out = open_output(base + ".fringes.csv");
  fringe_out << "alpha,s,rep,phi_rad,counts\n";

  const std::vector<double> grid = phi_grid(cfg.phi_points);

  auto run_fringe = [&](double alpha, double s, std::uint64_t stream,
                        std::vector<double>& counts) -> holo_status {
    holo_coincidence_model model{};
    const holo_status ms = holo_experiment_model(alpha, s, cfg.n, cfg.n0, &model);
    if (ms != HOLO_OK) return ms;
    counts.resize(grid.size());
    if (cfg.noiseless) {
      for (size_t k = 0; k < grid.size(); ++k) {
        const holo_status es = holo_expected_counts(&model, grid[k], &counts[k]);
        if (es != HOLO_OK) return es;
      }
      return HOLO_OK;
    }
    return holo_sample_fringe(&model, grid.data(), static_cast<int32_t>(grid.size()),
                              stream, counts.data());
  };

  // Reference calibration: s = 0 fringes over the alpha grid, one per alpha.
  std::vector<double> reference_phases;
  for (size_t ia = 0; ia < cfg.alpha_grid.size(); ++ia) {
    std::vector<double> counts;
    const std::uint64_t stream = holo_seed_mix(cfg.seed, 0x10000000ull + ia);
    const holo_status status = run_fringe(cfg.alpha_grid[ia], 0.0, stream, counts);
    check(status, "reference fringe");
    holo_fit_result fit{};
    const holo_status fs = holo_fit_sinusoid(grid.data(), counts.data(),
                                             static_cast<int32_t>(grid.size()), &fit);
    check(fs, "reference fit");
    reference_phases.push_back(fit.phase);
  }
  double reference = 0.0;
  check(holo_circular_mean(reference_phases.data(),
                           static_cast<int32_t>(reference_phases.size()), &reference),
        "reference average");

  std::vector<PointSummary> summaries;
  std::uint64_t row_index = 0;
  for (double alpha : cfg.alpha_grid) {
    for (double s : cfg.s_grid) {
      PointSummary ps;
      ps.alpha = alpha;
      ps.s = s;
      ps.reps = cfg.reps;

      holo_coincidence_model model{};
      const holo_status ms = holo_experiment_model(alpha, s, cfg.n, cfg.n0, &model);
      if (ms != HOLO_OK) {
        ps.status = holo_status_name(ms);
        summaries.push_back(ps);
        ++row_index;
        continue;
      }
      ps.phi_true = model.holonomic_phase;
      ps.v_t = model.visibility;

      double cov_hits = 0.0, sx = 0.0, sy = 0.0, se_acc = 0.0, vis_acc = 0.0;
      int fitted = 0;
      for (int rep = 0; rep < cfg.reps; ++rep) {
        std::vector<double> counts;
        const std::uint64_t stream =
            holo_seed_mix(holo_seed_mix(cfg.seed, row_index), static_cast<std::uint64_t>(rep));
        const holo_status rs = run_fringe(alpha, s, stream, counts);
        check(rs, "fringe simulation");
        for (size_t k = 0; k < grid.size(); ++k)
          fringe_out << fmt(alpha) << "," << fmt(s) << "," << rep << ","
                     << fmt(grid[k]) << "," << fmt(counts[k]) << "\n";

        holo_fit_result fit{};
        const holo_status fs = holo_fit_sinusoid(grid.data(), counts.data(),
                                                 static_cast<int32_t>(grid.size()), &fit);
        if (fs == HOLO_ERR_PHASE_UNDETERMINED) {
          ++ps.undetermined;
          continue;
        }
        check(fs, "fringe fit");
        double extracted = 0.0;
        holo_wrap_pi(fit.phase - reference, &extracted);
        double delta = 0.0;
        holo_wrap_pi(extracted - ps.phi_true, &delta);
        if (std::abs(delta) < 3.0 * fit.phase_stderr) cov_hits += 1.0;
        sx += std::cos(extracted);
        sy += std::sin(extracted);
        se_acc += fit.phase_stderr;
        vis_acc += fit.visibility;
        ++fitted;
      }
      if (fitted > 0) {
        ps.fit_mean = std::atan2(sy, sx);
        ps.stderr_mean = se_acc / fitted;
        ps.coverage = cov_hits / fitted;
        ps.visibility_mean = vis_acc / fitted;
        if (ps.undetermined > 0) ps.status = "partial";
      } else {
        ps.status = "undetermined";
      }
      summaries.push_back(ps);
      ++row_index;
    }
  }

  ordered_json doc;
  doc["reference_phase"] = reference;
  doc["noiseless"] = cfg.noiseless;
  doc["n"] = cfg.n;
  doc["n0"] = cfg.n0;
  doc["phi_points"] = cfg.phi_points;
  doc["seed"] = cfg.seed;
  doc["reps"] = cfg.reps;
  doc["points"] = ordered_json::array();
  for (const PointSummary& ps : summaries) {
    ordered_json row;
    row["alpha"] = ps.alpha;
    row["s"] = ps.s;
    row["status"] = ps.status;
    row["phi_true"] = ps.phi_true;
    row["v_t"] = ps.v_t;
    row["reps"] = ps.reps;
    row["undetermined"] = ps.undetermined;
    row["phi_fit_mean"] = ps.fit_mean;
    row["stderr_mean"] = ps.stderr_mean;
    row["coverage_3sigma"] = ps.coverage;
    row["visibility_mean"] = ps.visibility_mean;
    doc["points"].push_back(row);
  }
  auto summary_out = open_output(base + ".summary.json");
  summary_out << doc.dump(2) << "\n";
  std::cout << "wrote " << base << ".fringes.csv and " << base << ".summary.json\n";
  return 0;
}

// ---- topology ---------------------------------------------------------------

int cmd_topology(std::optional<double> s, std::optional<double> theta,
                 const RunConfig& cfg, bool degrees) {
  if (s.has_value() == theta.has_value())
    config_fail("topology needs exactly one of --s or --schmidt <theta_max>");
  holo_ball_trace* trace = nullptr;
  if (s) {
    double sv = degrees ? *s * kPi / 180.0 : *s;
    check(holo_trace_experiment(sv, cfg.samples_per_segment, &trace), "ball trace");
  } else {
    double tv = degrees ? *theta * kPi / 180.0 : *theta;
    check(holo_trace_schmidt(tv, cfg.samples_per_segment, &trace), "ball trace");
  }
  const int crossings = holo_ball_trace_crossings(trace);
  const int grazes = holo_ball_trace_grazes(trace);
  const double phase = holo_ball_trace_topological_phase(trace);

  if (!cfg.out.empty()) {
    auto out = open_output(cfg.out);
    out << "t,r_x,r_y,r_z,segment_index,crossing_flag\n";
    const int n = holo_ball_trace_size(trace);
    for (int k = 0; k < n; ++k) {
      holo_ball_point p{};
      holo_ball_trace_point(trace, k, &p);
      out << fmt(p.t) << "," << fmt(p.r_x) << "," << fmt(p.r_y) << ","
          << fmt(p.r_z) << "," << p.segment_index << "," << p.crossing_flag << "\n";
    }
  }
  holo_ball_trace_destroy(trace);

  ordered_json doc;
  doc["crossings"] = crossings;
  doc["grazes"] = grazes;
  doc["topological_phase"] = phase;
  if (cfg.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "crossings         " << crossings << "\n"
              << "grazes            " << grazes << "\n"
              << "topological phase " << fmt(phase) << " (l*pi)\n";
  }
  return 0;
}

// ---- verify ------------------------------------------------------------------

int cmd_verify(bool inject_fault, const RunConfig& cfg) {
  holo_verify_report* report = nullptr;
  check(holo_verify_run(inject_fault ? 1 : 0, &report), "self checks");
  ordered_json doc;
  doc["checks"] = ordered_json::array();
  const int n = holo_verify_size(report);
  for (int k = 0; k < n; ++k) {
    const char* name = nullptr;
    double residual = 0.0, tolerance = 0.0;
    int32_t pass = 0;
    holo_verify_item(report, k, &name, &residual, &tolerance, &pass);
    ordered_json row;
    row["name"] = name;
    row["residual"] = residual;
    row["tolerance"] = tolerance;
    row["pass"] = pass != 0;
    doc["checks"].push_back(row);
  }
  const bool all_pass = holo_verify_all_pass(report) != 0;
  doc["all_pass"] = all_pass;
  holo_verify_destroy(report);

  std::cout << doc.dump(2) << "\n";
  if (!cfg.out.empty()) {
    auto out = open_output(cfg.out);
    out << doc.dump(2) << "\n";
  }
  return all_pass ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit holonomic-phase simulator (version " +
               std::string(holo_version()) + ")"};
  app.require_subcommand(1);
  app.fallthrough();  // --config/--degrees may follow the subcommand

  RunConfig cfg = default_config();
  std::string config_path;
  bool degrees = false;
  app.add_option("--config", config_path, "JSON config file; flags override its fields");
  app.add_flag("--degrees", degrees, "interpret --alpha/--s/--schmidt in degrees");

  double alpha = 0.0, s_value = 0.0;
  std::optional<double> s_opt, schmidt_theta;
  bool inject_fault = false;
  std::string project_path;

  // Per-command flag targets; registered after config load in the callback
  // would complicate ordering, so every subcommand registers what it uses.
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--samples", cfg.samples_per_segment, "samples per trajectory segment");
    cmd->add_option("--n", cfg.n, "reference fringe maximum N");
    cmd->add_option("--n0", cfg.n0, "reference fringe minimum N0");
    cmd->add_option("--seed", cfg.seed, "master seed");
    cmd->add_option("--reps", cfg.reps, "repetitions per grid point");
    cmd->add_option("--phi-points", cfg.phi_points, "fringe points per scan");
    cmd->add_option("--out", cfg.out, "output path (base path for simulate)");
    cmd->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--noiseless", cfg.noiseless, "expected counts instead of Poisson draws");
  };

  CLI::App* phase = app.add_subcommand("phase", "phase decomposition at one (alpha, s)");
  phase->add_option("--alpha", alpha, "preparation angle")->required();
  phase->add_option("--s", s_value, "opening angle")->required();
  phase->add_option("--project", project_path, "write per-sample Bloch projections CSV");
  add_common(phase);

  CLI::App* sweep = app.add_subcommand("sweep", "closed form vs numerical phase over the grid");
  add_common(sweep);

  CLI::App* simulate =
      app.add_subcommand("simulate", "Monte Carlo fringes, fits and calibration");
  add_common(simulate);

  CLI::App* schmidt = app.add_subcommand("schmidt", "entanglement phase over a tangle grid");
  add_common(schmidt);

  CLI::App* topology = app.add_subcommand("topology", "SO(3)-ball trace of an MES evolution");
  topology->add_option("--s", [&s_opt](const std::vector<std::string>& v) {
    s_opt = std::stod(v[0]);
    return true;
  }, "opening angle of the experiment evolution");
  topology->add_option("--schmidt", [&schmidt_theta](const std::vector<std::string>& v) {
    schmidt_theta = std::stod(v[0]);
    return true;
  }, "theta_max of a Schmidt evolution");
  add_common(topology);

  CLI::App* verify = app.add_subcommand("verify", "run built-in consistency sweeps");
  verify->add_flag("--inject-fault", inject_fault,
                   "perturb a plate angle to confirm the checks detect it");
  add_common(verify);

  app.preparse_callback([&](size_t) {
    // Config file values must land before flags are applied.
    for (int k = 1; k + 1 < argc; ++k)
      if (std::string(argv[k]) == "--config") load_config_file(argv[k + 1], cfg);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    if (phase->parsed()) return cmd_phase(alpha, s_value, cfg, degrees, project_path);
    if (sweep->parsed()) return cmd_sweep(cfg);
    if (simulate->parsed()) return cmd_simulate(cfg);
    if (schmidt->parsed()) return cmd_schmidt(cfg);
    if (topology->parsed()) return cmd_topology(s_opt, schmidt_theta, cfg, degrees);
    if (verify->parsed()) return cmd_verify(inject_fault, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
