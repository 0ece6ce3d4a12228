#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nematic2d/initial_conditions.hpp"
#include "nematic2d/leslie_coefficients.hpp"
#include "nematic2d/solver.hpp"

namespace nematic2d {

/// Probe for the scale-invariant monitor: evaluate at (cx, cy, t0, r).
struct PhiProbe {
  double cx = 0.0;
  double cy = 0.0;
  double t0 = 0.0;
  double r = 0.25;
  friend bool operator==(const PhiProbe&, const PhiProbe&) = default;
};

/// Cutoff window request for the local energy audit.
struct LocalWindowSpec {
  double cx = 0.0;
  double cy = 0.0;
  double inner_r = 0.0;
  double outer_r = 0.0;
  friend bool operator==(const LocalWindowSpec&, const LocalWindowSpec&) = default;
};

enum class InitialKind { taylor_green, geodesic, bubble, random_seeded, file };

/// Everything a run needs, parsed from the line-based config format
/// ([section] headers, key = value pairs, # comments).
struct SimConfig {
  // [grid]
  int n = 64;
  double length = 2.0 * 3.141592653589793238462643383279502884;

  // [coefficients]
  double mu[6] = {0.0, -2.0, 1.0, 1.0, 1.0, 0.0};
  double parodi_tol = 1e-12;
  double cond_tol = 1e-12;

  // [time]
  double dt = 1e-3;
  long steps = 1000;
  int snapshot_every = 0;
  int ledger_every = 10;

  // [mode]
  DirectorMode mode = DirectorMode::projection;
  double epsilon = 0.1;
  bool dealias = true;
  double cfl_guard = 0.5;

  // [initial]
  InitialKind initial = InitialKind::random_seeded;
  double amplitude = 1.0;            // taylor_green
  int geodesic_k = 1;                // geodesic
  double bubble_lambda = 0.0628;     // bubble
  int bubble_degree = 1;             // bubble
  double center_x = 0.0;             // bubble
  double center_y = 0.0;             // bubble
  RandomInitParams random;           // random_seeded
  std::string initial_path;          // file

  // [diagnostics]
  std::vector<double> scan_radii;
  double scan_threshold = 8.0 * 3.141592653589793238462643383279502884;
  double scan_flag_tol = 0.01;
  int scan_every = 0;
  std::vector<PhiProbe> phi_probes;
  std::vector<LocalWindowSpec> local_windows;

  // [output]
  std::string output_dir = "out";

  LeslieCoefficients coefficients() const {
    return LeslieCoefficients::from_mus(mu[0], mu[1], mu[2], mu[3], mu[4], mu[5]);
  }
  SolverConfig solver() const { return {dt, steps, mode, epsilon, dealias, cfl_guard}; }

  friend bool operator==(const SimConfig& a, const SimConfig& b);
};

/// Parses and validates config text. Unknown keys, duplicate keys and syntax
/// problems raise ConfigError with the offending line number; semantic
/// validation failures name the field.
SimConfig parse_config(const std::string& text);

/// Canonical full rendering; parse_config(serialize_config(c)) == c.
std::string serialize_config(const SimConfig& config);

/// Builds the configured initial state (reads a snapshot for file presets).
FlowState build_initial_state(const SimConfig& config);

}  // namespace nematic2d
