#pragma once

#include <functional>
#include <optional>
#include <string>

#include "nematic2d/energy_ledger.hpp"
#include "nematic2d/flow_state.hpp"
#include "nematic2d/kinematics.hpp"

namespace nematic2d {

/// Time-integration parameters. The stiff Laplacians (mu4/2 in the momentum
/// equation, 1/|lambda1| in the director equation) are implicit and diagonal
/// in spectral space, so only the advective CFL guard constrains dt.
struct SolverConfig {
  double dt = 1e-3;
  long steps = 1000;
  DirectorMode mode = DirectorMode::projection;
  double epsilon = 0.1;    // Ginzburg-Landau length scale
  bool dealias = true;     // 2/3-rule truncation of nonlinear products
  double cfl_guard = 0.5;  // max allowed |u| dt / spacing
};

/// Non-fatal advisory for explicit-penalty stiffness (GL mode, dt > eps^2/10).
std::optional<std::string> stiffness_advisory(const SolverConfig& config);

/// One IMEX Euler update of the velocity: Newtonian diffusion implicit,
/// advection, Ericksen stress divergence and the non-Newtonian stress
/// remainder explicit, Leray projection last. Throws CflError when the
/// advective guard is exceeded.
Field momentum_step(const FlowState& state, const LeslieCoefficients& c, const SolverConfig& config);

/// One IMEX Euler update of the director: (1/|lambda1|) Laplacian implicit,
/// everything else explicit; projection mode renormalizes |d| = 1 pointwise
/// afterwards.
Field director_step(const FlowState& state, const LeslieCoefficients& c, const SolverConfig& config);

/// One full step from the frozen state at t_n: director and momentum updates
/// both read the same input state. Throws NumericalAbort on non-finite output.
FlowState advance(const FlowState& state, const LeslieCoefficients& c, const SolverConfig& config);

/// Pressure consistent with the current (u, d): solves
///   lap P = div [ -div ( u (x) u + grad d (.) grad d - sigma^L ) ]
/// spectrally, gauge-fixed to zero mean.
Field recover_pressure(const Field& u, const Field& d, const LeslieCoefficients& c);

/// Diagnostic wiring for run(). Cadences are in steps; 0 disables. Hooks see
/// immutable snapshots. The scanner indirection keeps concentration scanning
/// configurable without coupling the run loop to the diagnostics module.
struct RunHooks {
  int ledger_every = 10;
  int snapshot_every = 0;
  int scan_every = 0;
  std::function<void(const FlowState&)> on_snapshot;
  std::function<void(const LedgerRow&, const FlowState&)> on_row;
  std::function<std::vector<ConcentrationEvent>(const FlowState&)> scanner;
};

struct RunResult {
  FlowState state;
  EnergyLedger ledger;
  bool aborted = false;
  std::string abort_reason;
  long steps_completed = 0;
};

/// Repeated advance with ledger rows, snapshots and scans at their cadences.
/// On NaN or CFL rejection the run stops and returns the last good state with
/// the partial ledger.
RunResult run(FlowState initial, const LeslieCoefficients& c, const SolverConfig& config,
              const RunHooks& hooks = {});

/// Total energy of the state: integral of |u|^2 + |grad d|^2.
double total_energy(const Field& u, const Field& d);

}  // namespace nematic2d
