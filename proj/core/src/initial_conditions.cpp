#include "nematic2d/initial_conditions.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "nematic2d/bubble.hpp"
#include "nematic2d/spectral.hpp"

namespace nematic2d {

namespace {

// Platform-independent uniform in [0, 1): raw mt19937_64 output, no
// distribution wrapper (those are implementation-defined).
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}
  double uniform() { return std::ldexp(static_cast<double>(gen_()), -64); }
  double gaussian() {
    // Box-Muller; cache the second value.
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = std::max(uniform(), 1e-300);
    double u2 = uniform();
    double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(2.0 * std::numbers::pi * u2);
    have_spare_ = true;
    return mag * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Sum of random low modes with spectrum |k|^slope, normalized to max|.| = 1.
void fill_smooth_random(Field& f, Rng& rng, double slope, int cutoff) {
  const int n = f.n();
  const double L = f.grid().length();
  const double k0 = 2.0 * std::numbers::pi / L;
  for (int c = 0; c < f.components(); ++c) {
    auto v = f.comp(c);
    std::fill(v.begin(), v.end(), 0.0);
    for (int fx = -cutoff; fx <= cutoff; ++fx) {
      for (int fy = -cutoff; fy <= cutoff; ++fy) {
        double kk = std::hypot(static_cast<double>(fx), static_cast<double>(fy));
        if (kk == 0.0 || kk > cutoff) continue;
        double amp = std::pow(kk, slope);
        double a = amp * rng.gaussian();
        double b = amp * rng.gaussian();
        for (int iy = 0; iy < n; ++iy) {
          double y = iy * L / n;
          for (int ix = 0; ix < n; ++ix) {
            double x = ix * L / n;
            double ph = k0 * (fx * x + fy * y);
            v[static_cast<size_t>(iy) * n + ix] += a * std::cos(ph) + b * std::sin(ph);
          }
        }
      }
    }
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    if (m > 0.0)
      for (double& x : v) x /= m;
  }
}

}  // namespace

FlowState taylor_green_state(const TorusGrid& grid, double amplitude) {
  FlowState s = FlowState::zeros(grid);
  const int n = grid.n();
  const double k0 = 2.0 * std::numbers::pi / grid.length();
  auto ux = s.u.comp(0);
  auto uy = s.u.comp(1);
  for (int iy = 0; iy < n; ++iy) {
    double y = k0 * iy * grid.spacing();
    for (int ix = 0; ix < n; ++ix) {
      double x = k0 * ix * grid.spacing();
      size_t p = static_cast<size_t>(iy) * n + ix;
      ux[p] = amplitude * std::sin(x) * std::cos(y);
      uy[p] = -amplitude * std::cos(x) * std::sin(y);
    }
  }
  auto d3 = s.d.comp(2);
  std::fill(d3.begin(), d3.end(), 1.0);
  return s;
}

FlowState geodesic_state(const TorusGrid& grid, int k) {
  FlowState s = FlowState::zeros(grid);
  const int n = grid.n();
  const double k0 = 2.0 * std::numbers::pi / grid.length();
  auto d1 = s.d.comp(0);
  auto d2 = s.d.comp(1);
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      double ph = k * k0 * ix * grid.spacing();
      size_t p = static_cast<size_t>(iy) * n + ix;
      d1[p] = std::cos(ph);
      d2[p] = std::sin(ph);
    }
  }
  return s;
}

FlowState bubble_state(const TorusGrid& grid, double cx, double cy, double lambda, int degree) {
  FlowState s = FlowState::zeros(grid);
  s.d = make_bubble(grid, cx, cy, lambda, degree);
  return s;
}

FlowState random_state(const TorusGrid& grid, const RandomInitParams& params) {
  Rng rng(params.seed);
  FlowState s = FlowState::zeros(grid);

  Field raw_u(grid, 2);
  fill_smooth_random(raw_u, rng, params.spectrum_slope, params.cutoff);
  Field u = spectral::leray_project(raw_u);
  double m = 0.0;
  auto ux = u.comp(0);
  auto uy = u.comp(1);
  for (size_t p = 0; p < ux.size(); ++p) m = std::max(m, std::hypot(ux[p], uy[p]));
  if (m > 0.0) u *= params.u_amplitude / m;
  s.u = std::move(u);

  // Tangent-bundle style director: smooth 3-vector noise about a fixed base
  // direction, renormalized pointwise.
  const double e0[3] = {0.4082482904638630, 0.2041241452319315, 0.8897565210026093};
  Field noise(grid, 3);
  fill_smooth_random(noise, rng, params.spectrum_slope, params.cutoff);
  auto d1 = s.d.comp(0);
  auto d2 = s.d.comp(1);
  auto d3 = s.d.comp(2);
  for (size_t p = 0; p < d1.size(); ++p) {
    double v1 = e0[0] + params.d_amplitude * noise.comp(0)[p];
    double v2 = e0[1] + params.d_amplitude * noise.comp(1)[p];
    double v3 = e0[2] + params.d_amplitude * noise.comp(2)[p];
    double norm = std::sqrt(v1 * v1 + v2 * v2 + v3 * v3);
    d1[p] = v1 / norm;
    d2[p] = v2 / norm;
    d3[p] = v3 / norm;
  }
  return s;
}

}  // namespace nematic2d
