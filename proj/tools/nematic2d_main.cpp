// Command-line front end: run simulations, validate coefficient sets, scan
// snapshots for energy concentration, evaluate the scale-invariant monitor
// over stored trajectories, and render scalar heatmaps.
//
// Exit codes: 0 clean, 2 configuration error, 3 numerical abort (the partial
// ledger is flushed before exiting).

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "nematic2d/diagnostics.hpp"
#include "nematic2d/errors.hpp"
#include "nematic2d/heatmap.hpp"
#include "nematic2d/ledger_io.hpp"
#include "nematic2d/sim_config.hpp"
#include "nematic2d/snapshot_io.hpp"
#include "nematic2d/spectral.hpp"

namespace fs = std::filesystem;
using namespace nematic2d;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void print_report(const ValidationReport& report) {
  auto flag = [](bool ok) { return ok ? "ok" : "VIOLATED"; };
  std::cout << "  parodi relation:        " << flag(report.parodi_ok) << "\n";
  std::cout << "  lambda1 < 0:            " << flag(report.lambda1_negative) << "\n";
  std::cout << "  alignment weight >= 0:  " << flag(report.alignment_nonneg) << "\n";
  std::cout << "  mu4 > 0:                " << flag(report.viscosity_positive) << "\n";
  std::cout << "  stretching condition:   " << flag(report.stretching_ok) << "\n";
  for (const auto& m : report.messages) std::cout << "  violation: " << m << "\n";
  for (const auto& w : report.warnings) std::cout << "  warning: " << w << "\n";
}

std::vector<PhiSnapshot> load_snapshot_dir(const std::string& dir, const LeslieCoefficients& c) {
  std::vector<PhiSnapshot> out;
  if (!fs::is_directory(dir)) throw IoError("'" + dir + "' is not a directory");
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".bin") continue;
    Snapshot snap = read_snapshot(entry.path().string());
    Field P = recover_pressure(snap.state.u, snap.state.d, c);
    out.push_back({std::move(snap.state), std::move(P)});
  }
  std::sort(out.begin(), out.end(),
            [](const PhiSnapshot& a, const PhiSnapshot& b) { return a.state.t < b.state.t; });
  if (out.empty()) throw IoError("no .bin snapshots found in '" + dir + "'");
  return out;
}

int cmd_run(const std::string& config_path, bool allow_invalid, const std::string& out_override) {
  SimConfig cfg = parse_config(read_file(config_path));
  if (!out_override.empty()) cfg.output_dir = out_override;

  LeslieCoefficients coeffs = cfg.coefficients();
  ValidationReport report = validate(coeffs, cfg.parodi_tol, cfg.cond_tol);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  if (!report.valid()) {
    if (!allow_invalid) {
      std::cerr << "coefficient set rejected:\n";
      for (const auto& m : report.messages) std::cerr << "  " << m << "\n";
      std::cerr << "(use --allow-invalid to run anyway)\n";
      return kExitConfig;
    }
    for (const auto& m : report.messages) std::cerr << "warning (--allow-invalid): " << m << "\n";
  }

  SolverConfig solver_cfg = cfg.solver();
  if (auto advisory = stiffness_advisory(solver_cfg)) std::cerr << "warning: " << *advisory << "\n";

  fs::create_directories(cfg.output_dir);
  FlowState initial = build_initial_state(cfg);

  int snapshot_index = 0;
  RunHooks hooks;
  hooks.ledger_every = cfg.ledger_every;
  hooks.snapshot_every = cfg.snapshot_every;
  hooks.scan_every = cfg.scan_every;
  hooks.on_snapshot = [&](const FlowState& s) {
    std::ostringstream name;
    name << "snapshot_" << std::setw(6) << std::setfill('0') << snapshot_index++ << ".bin";
    write_snapshot(s, cfg.mode, (fs::path(cfg.output_dir) / name.str()).string());
  };
  if (!cfg.scan_radii.empty() && cfg.scan_every > 0) {
    hooks.scanner = [&](const FlowState& s) {
      std::vector<ConcentrationEvent> all;
      for (double r : cfg.scan_radii) {
        auto events = concentration_scan(s, r, cfg.scan_threshold, cfg.scan_flag_tol);
        all.insert(all.end(), events.begin(), events.end());
      }
      return all;
    };
  }

  RunResult result = run(std::move(initial), coeffs, solver_cfg, hooks);

  write_ledger_rows(result.ledger, (fs::path(cfg.output_dir) / "ledger.csv").string());
  write_ledger_events(result.ledger, (fs::path(cfg.output_dir) / "events.csv").string());

  if (result.aborted) {
    std::cerr << "numerical abort after " << result.steps_completed
              << " steps: " << result.abort_reason << "\n";
    std::cerr << "partial ledger flushed to " << cfg.output_dir << "\n";
    return kExitNumerical;
  }

  std::cout << "completed " << result.steps_completed << " steps to t = " << result.state.t << "\n";
  if (!result.ledger.rows.empty()) {
    const auto& last = result.ledger.rows.back();
    std::cout << "final energy " << last.E << ", max |div u| " << last.max_div_u
              << ", max ||d|-1| " << last.max_unit_violation << "\n";
  }
  std::cout << "events flagged: " << result.ledger.events.size() << "\n";

  // Post-run diagnostics from the written snapshots.
  if ((!cfg.phi_probes.empty() || !cfg.local_windows.empty()) && cfg.snapshot_every > 0) {
    auto snaps = load_snapshot_dir(cfg.output_dir, coeffs);
    for (const auto& probe : cfg.phi_probes) {
      try {
        double value = phi(snaps, probe.cx, probe.cy, probe.t0, probe.r);
        std::cout << "phi(center=(" << probe.cx << "," << probe.cy << "), t0=" << probe.t0
                  << ", r=" << probe.r << ") = " << value << "\n";
      } catch (const std::exception& e) {
        std::cerr << "phi probe skipped: " << e.what() << "\n";
      }
    }
    if (!cfg.local_windows.empty()) {
      std::vector<FlowState> states;
      states.reserve(snaps.size());
      for (auto& s : snaps) states.push_back(s.state);
      for (const auto& w : cfg.local_windows) {
        LocalAuditResult audit =
            local_energy_audit(states, coeffs, {w.cx, w.cy, w.inner_r, w.outer_r});
        std::cout << "local_energy_audit(center=(" << w.cx << "," << w.cy << "), r=[" << w.inner_r
                  << "," << w.outer_r << "]): lhs = " << audit.lhs
                  << ", flux_bound = " << audit.flux_bound << "\n";
      }
    }
  } else if (!cfg.phi_probes.empty() || !cfg.local_windows.empty()) {
    std::cerr << "phi probes / local windows need snapshot_every > 0; skipped\n";
  }
  return kExitOk;
}

int cmd_validate(const std::string& config_path) {
  SimConfig cfg = parse_config(read_file(config_path));
  LeslieCoefficients coeffs = cfg.coefficients();
  ValidationReport report = validate(coeffs, cfg.parodi_tol, cfg.cond_tol);
  std::cout << "lambda1 = " << coeffs.lambda1 << ", lambda2 = " << coeffs.lambda2 << "\n";
  print_report(report);
  std::cout << (report.valid() ? "VALID" : "INVALID") << "\n";
  return report.valid() ? kExitOk : kExitConfig;
}

int cmd_scan(const std::string& snapshot_path, double radius, double threshold, double flag_tol) {
  Snapshot snap = read_snapshot(snapshot_path);
  auto events = concentration_scan(snap.state, radius, threshold, flag_tol);
  std::cout << "t,cx,cy,r,local_energy,threshold\n" << std::setprecision(10);
  for (const auto& e : events)
    std::cout << e.t << ',' << e.cx << ',' << e.cy << ',' << e.radius << ',' << e.local_energy
              << ',' << e.threshold << "\n";
  std::cerr << events.size() << " centers at or above " << threshold * (1.0 - flag_tol) << "\n";
  return kExitOk;
}

int cmd_phi(const std::string& dir, const std::string& center, double t0, double r) {
  double cx = 0.0, cy = 0.0;
  {
    std::stringstream ss(center);
    char comma = 0;
    if (!(ss >> cx >> comma >> cy) || comma != ',')
      throw ConfigError(0, "--center expects 'x,y'");
  }
  // Pressure recovery and the monitor itself need the coefficient set; the
  // snapshot does not store it, so use the default set unless overridden.
  LeslieCoefficients coeffs = LeslieCoefficients::from_mus(0.0, -2.0, 1.0, 1.0, 1.0, 0.0);
  auto snaps = load_snapshot_dir(dir, coeffs);
  double value = phi(snaps, cx, cy, t0, r);
  std::cout << value << "\n";
  return kExitOk;
}

int cmd_render(const std::string& snapshot_path, const std::string& field_name,
               const std::string& out_path, const std::string& palette_name) {
  Snapshot snap = read_snapshot(snapshot_path);
  const TorusGrid& g = snap.state.u.grid();
  Field scalar(g, 1);
  auto o = scalar.comp(0);
  if (field_name == "speed") {
    auto ux = snap.state.u.comp(0);
    auto uy = snap.state.u.comp(1);
    for (size_t p = 0; p < o.size(); ++p) o[p] = std::hypot(ux[p], uy[p]);
  } else if (field_name == "energy_density") {
    Field grad_d = spectral::gradient(snap.state.d);
    auto ux = snap.state.u.comp(0);
    auto uy = snap.state.u.comp(1);
    for (size_t p = 0; p < o.size(); ++p) o[p] = ux[p] * ux[p] + uy[p] * uy[p];
    for (int k = 0; k < grad_d.components(); ++k) {
      auto gc = grad_d.comp(k);
      for (size_t p = 0; p < o.size(); ++p) o[p] += gc[p] * gc[p];
    }
  } else if (field_name == "unit_violation") {
    auto d1 = snap.state.d.comp(0);
    auto d2 = snap.state.d.comp(1);
    auto d3 = snap.state.d.comp(2);
    for (size_t p = 0; p < o.size(); ++p)
      o[p] = std::abs(std::sqrt(d1[p] * d1[p] + d2[p] * d2[p] + d3[p] * d3[p]) - 1.0);
  } else {
    throw ConfigError(0, "unknown field '" + field_name + "' (choose speed, energy_density, unit_violation)");
  }
  Palette palette = palette_name == "signed" ? Palette::signed_diverging : Palette::grayscale;
  render_heatmap(scalar, out_path, palette);
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D nematic liquid crystal hydrodynamics on a periodic domain"};
  app.require_subcommand(1);

  std::string config_path, out_override;
  bool allow_invalid = false;
  auto* run_cmd = app.add_subcommand("run", "run a simulation from a config file");
  run_cmd->add_option("config", config_path, "config file")->required();
  run_cmd->add_flag("--allow-invalid", allow_invalid, "run even if the coefficient set fails validation");
  run_cmd->add_option("--out", out_override, "override the configured output directory");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "check a config's coefficient set");
  validate_cmd->add_option("config", validate_path, "config file")->required();

  std::string scan_path;
  double scan_radius = 0.0, scan_threshold = 8.0 * 3.141592653589793, scan_flag_tol = 0.01;
  auto* scan_cmd = app.add_subcommand("scan", "windowed energy-concentration scan of a snapshot");
  scan_cmd->add_option("snapshot", scan_path, "snapshot file")->required();
  scan_cmd->add_option("--radius", scan_radius, "window radius")->required();
  scan_cmd->add_option("--threshold", scan_threshold, "concentration threshold");
  scan_cmd->add_option("--flag-tol", scan_flag_tol, "relative tolerance below the threshold");

  std::string phi_dir, phi_center;
  double phi_t0 = 0.0, phi_r = 0.25;
  auto* phi_cmd = app.add_subcommand("phi", "scale-invariant monitor over a snapshot directory");
  phi_cmd->add_option("snapshot-dir", phi_dir, "directory of .bin snapshots")->required();
  phi_cmd->add_option("--center", phi_center, "probe center 'x,y'")->required();
  phi_cmd->add_option("--t0", phi_t0, "probe time")->required();
  phi_cmd->add_option("--r", phi_r, "probe radius")->required();

  std::string render_path, render_field = "energy_density", render_out, render_palette = "grayscale";
  auto* render_cmd = app.add_subcommand("render", "render a scalar heatmap from a snapshot");
  render_cmd->add_option("snapshot", render_path, "snapshot file")->required();
  render_cmd->add_option("--field", render_field, "speed | energy_density | unit_violation");
  render_cmd->add_option("--out", render_out, "output PPM path")->required();
  render_cmd->add_option("--palette", render_palette, "grayscale | signed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return cmd_run(config_path, allow_invalid, out_override);
    if (validate_cmd->parsed()) return cmd_validate(validate_path);
    if (scan_cmd->parsed()) return cmd_scan(scan_path, scan_radius, scan_threshold, scan_flag_tol);
    if (phi_cmd->parsed()) return cmd_phi(phi_dir, phi_center, phi_t0, phi_r);
    if (render_cmd->parsed())
      return cmd_render(render_path, render_field, render_out, render_palette);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const CflError& e) {
    std::cerr << "numerical abort: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const NumericalAbort& e) {
    std::cerr << "numerical abort: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}
