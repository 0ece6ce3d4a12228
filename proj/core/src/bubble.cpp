#include "nematic2d/bubble.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace nematic2d {

namespace {
double smoothstep5(double s) {
  s = std::clamp(s, 0.0, 1.0);
  return s * s * s * (s * (6.0 * s - 15.0) + 10.0);
}
}  // namespace

Field make_bubble(const TorusGrid& grid, double cx, double cy, double lambda, int degree) {
  if (!(lambda > 0.0)) throw std::invalid_argument("bubble scale lambda must be positive");
  if (degree < 1) throw std::invalid_argument("bubble degree must be a positive integer");

  const int n = grid.n();
  const double h = grid.spacing();
  const double L = grid.length();
  const double rho0 = 0.25 * L;
  const double rho1 = 0.45 * L;

  Field d(grid, 3);
  auto d1 = d.comp(0);
  auto d2 = d.comp(1);
  auto d3 = d.comp(2);
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      double dx = grid.min_image(ix * h, cx);
      double dy = grid.min_image(iy * h, cy);
      double rho = std::hypot(dx, dy);
      std::complex<double> w = std::pow(std::complex<double>(dx / lambda, dy / lambda), degree);
      // chi -> 0 pushes w/chi to infinity, i.e. d to the exact south pole,
      // making the field constant (hence periodic) near the seam.
      double chi = 1.0 - smoothstep5((rho - rho0) / (rho1 - rho0));
      double W = std::norm(w);
      double den = chi * chi + W;
      size_t p = static_cast<size_t>(iy) * n + ix;
      if (den == 0.0) {  // center with chi == 1 cannot reach here; guard anyway
        d1[p] = 0.0;
        d2[p] = 0.0;
        d3[p] = 1.0;
      } else {
        d1[p] = 2.0 * chi * w.real() / den;
        d2[p] = 2.0 * chi * w.imag() / den;
        d3[p] = (chi * chi - W) / den;
      }
    }
  }
  return d;
}

}  // namespace nematic2d
