#pragma once

#include <numbers>
#include <span>
#include <vector>

#include "nematic2d/energy_ledger.hpp"
#include "nematic2d/flow_state.hpp"
#include "nematic2d/kinematics.hpp"

namespace nematic2d {

/// Integral of |u|^2 + |grad d|^2 over the torus.
double total_energy(const FlowState& state);

/// Discrete defect of the global energy balance between two ledger rows.
double energy_law_audit(const LedgerRow& r1, const LedgerRow& r2);

/// Radial cutoff for the local energy audit: eta = 1 on the inner disc,
/// 0 outside the outer disc, quintic smoothstep in between. An inner radius
/// covering the whole torus degenerates to eta == 1 (the global law).
struct CutoffWindow {
  double cx = 0.0;
  double cy = 0.0;
  double inner_r = 0.0;
  double outer_r = 0.0;
};

/// Local energy audit over a trajectory slice (snapshots ordered in t,
/// first = t1, last = t2).
///
/// lhs  = [cutoff-weighted energy](t2) - [same](t1)
///        + time integral of the cutoff-weighted dissipation (all four
///          channels), i.e. the exact local balance; for eta == 1 it equals
///          the global energy-law residual.
/// flux_bound = time integral of the literal flux majorant
///        (|u|^2 + |grad u| + |u||grad d| + |grad d|^2 + |grad^2 d| + |P|) |u| |grad eta^2|
///      + (|grad u| + |u||grad d| + |grad d|^2 + |grad^2 d|) |grad d| |grad eta^2|.
/// The audit passes when lhs <= C_audit * flux_bound up to the
/// time-discretization slack chosen by the caller.
struct LocalAuditResult {
  double lhs = 0.0;
  double flux_bound = 0.0;
};

LocalAuditResult local_energy_audit(std::span<const FlowState> trajectory,
                                    const LeslieCoefficients& c, const CutoffWindow& window);

/// One stored time level for the scale-invariant monitor. The pressure must
/// be the one transported with the snapshot (recover_pressure of the state,
/// or the rescaled copy of it).
struct PhiSnapshot {
  FlowState state;
  Field pressure;
};

/// Scale-invariant quantity over the parabolic cylinder B_r(center) x
/// [t0 - r^2, t0]:
///   (int |u|^4)^{1/4} + (int |grad u|^2)^{1/2} + (int |grad d|^4)^{1/4}
/// + (int |lap d|^2)^{1/2} + (int |P|^2)^{1/2}.
/// Space integrals are exact for band-limited snapshots (padded pointwise
/// powers against the analytic disc transform); time integrals are
/// trapezoidal over the snapshots inside the window. Throws when the stored
/// window does not cover [t0 - r^2, t0].
double phi(std::span<const PhiSnapshot> window, double cx, double cy, double t0, double r);

/// Parabolic rescaling of a stored trajectory about z0 = ((cx, cy), t0):
///   u_r(x, t) = r u(x0 + r x, t0 + r^2 t), d_r = d(...), P_r = r^2 P(...).
/// Requires 1/r to be a whole number of grid refinements and (cx, cy) on
/// grid; the rescaled snapshots live on a torus of period L/r with n/r times
/// the points, so sampling is exact (zero-padding interpolation).
std::vector<PhiSnapshot> rescale_trajectory(std::span<const PhiSnapshot> window, double cx,
                                            double cy, double t0, double r);

/// Windowed energy integral over B_r(x) for every grid center x, by circular
/// correlation with an area-accurate disc mask (partial boundary cells carry
/// their covered-area fraction). Returns one event per center at or above
/// threshold * (1 - flag_tol). Requires r >= 2 spacings.
/// Dirichlet energy of one degree of a finite-energy harmonic sphere map;
/// the quantum against which concentration is judged.
inline constexpr double kEnergyQuantum = 8.0 * std::numbers::pi;

std::vector<ConcentrationEvent> concentration_scan(const FlowState& state, double r,
                                                   double threshold = kEnergyQuantum,
                                                   double flag_tol = 0.01);

/// L^2 norm of the tension field lap d + |grad d|^2 d; zero exactly on
/// harmonic maps.
double tension_residual(const Field& d);

}  // namespace nematic2d
