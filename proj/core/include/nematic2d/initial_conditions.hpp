#pragma once

#include <cstdint>

#include "nematic2d/flow_state.hpp"

namespace nematic2d {

/// Taylor-Green vortex u = a (sin kx cos ky, -cos kx sin ky) on the lowest
/// wavenumber pair, with a constant north-pole director.
FlowState taylor_green_state(const TorusGrid& grid, double amplitude);

/// Equatorial geodesic director d = (cos k x~, sin k x~, 0), x~ = 2 pi x / L,
/// with zero velocity. Stationary for every valid coefficient set.
FlowState geodesic_state(const TorusGrid& grid, int k);

/// Bubble director (see make_bubble) at rest.
FlowState bubble_state(const TorusGrid& grid, double cx, double cy, double lambda, int degree);

/// Smooth seeded random data: velocity built from modes 1 <= |k| <= cutoff
/// with amplitude |k|^slope, Leray-projected and scaled so max|u| =
/// u_amplitude; director = unit-normalized (e0 + d_amplitude * smooth random
/// 3-vector field). Deterministic across platforms for a given seed.
struct RandomInitParams {
  uint64_t seed = 1;
  double spectrum_slope = -2.0;
  int cutoff = 4;
  double u_amplitude = 0.05;
  double d_amplitude = 0.02;
};

FlowState random_state(const TorusGrid& grid, const RandomInitParams& params);

}  // namespace nematic2d
