#pragma once

#include <vector>

namespace nematic2d {

/// One diagnostic sample along a run. Dissipation columns are the four
/// channels of the global energy balance; residual is the discrete energy-law
/// defect against the previous row (trapezoidal in time, 0 for the first row).
struct LedgerRow {
  double t = 0.0;
  double E = 0.0;
  double D_visc = 0.0;
  double D_dir = 0.0;
  double D_align1 = 0.0;
  double D_align2 = 0.0;
  double residual = 0.0;
  double max_div_u = 0.0;
  double max_unit_violation = 0.0;

  double dissipation_total() const { return D_visc + D_dir + D_align1 + D_align2; }
};

/// Windowed energy at or above the concentration threshold.
struct ConcentrationEvent {
  double t = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  double radius = 0.0;
  double local_energy = 0.0;
  double threshold = 0.0;
};

struct EnergyLedger {
  std::vector<LedgerRow> rows;
  std::vector<ConcentrationEvent> events;
};

/// [E(t2) - E(t1)] + trapezoidal integral of the dissipation total. Near zero
/// for exact dynamics; the inequality form is E(t2) <= E(t1) + |residual|.
inline double energy_law_residual(const LedgerRow& r1, const LedgerRow& r2) {
  return (r2.E - r1.E) + 0.5 * (r2.t - r1.t) * (r1.dissipation_total() + r2.dissipation_total());
}

}  // namespace nematic2d
