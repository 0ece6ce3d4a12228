#pragma once

#include <cmath>
#include <functional>
#include <numbers>

#include "nematic2d/field.hpp"
#include "nematic2d/flow_state.hpp"
#include "nematic2d/initial_conditions.hpp"
#include "nematic2d/leslie_coefficients.hpp"
#include "nematic2d/spectral.hpp"

namespace testsupport {

using namespace nematic2d;

inline constexpr double kPi = std::numbers::pi;

/// Reference coefficient set used across the tests: lambda1 = -3, lambda2 = 1,
/// Parodi holds, all dissipation conditions satisfied, mu4 = 1.
inline LeslieCoefficients good_coeffs() {
  return LeslieCoefficients::from_mus(0.0, -2.0, 1.0, 1.0, 1.0, 0.0);
}

/// Fills a scalar component from a pointwise function of (x, y).
inline Field scalar_field(const TorusGrid& g, const std::function<double(double, double)>& f) {
  Field out(g, 1);
  auto v = out.comp(0);
  const int n = g.n();
  const double h = g.spacing();
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) v[static_cast<size_t>(iy) * n + ix] = f(ix * h, iy * h);
  return out;
}

inline Field vector_field(const TorusGrid& g, const std::function<double(double, double)>& fx,
                          const std::function<double(double, double)>& fy) {
  Field out(g, 2);
  auto vx = out.comp(0);
  auto vy = out.comp(1);
  const int n = g.n();
  const double h = g.spacing();
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      vx[static_cast<size_t>(iy) * n + ix] = fx(ix * h, iy * h);
      vy[static_cast<size_t>(iy) * n + ix] = fy(ix * h, iy * h);
    }
  return out;
}

inline double max_abs_diff(const Field& a, const Field& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

/// Seeded smooth divergence-free velocity and unit director for identity
/// and regression tests.
inline FlowState seeded_state(const TorusGrid& g, uint64_t seed, double u_amp = 0.5,
                              double d_amp = 0.8) {
  RandomInitParams params;
  params.seed = seed;
  params.u_amplitude = u_amp;
  params.d_amplitude = d_amp;
  FlowState s = random_state(g, params);
  s.u = spectral::dealias(s.u);
  s.u = spectral::leray_project(s.u);
  return s;
}

}  // namespace testsupport
