#pragma once

#include <complex>
#include <vector>

#include "nematic2d/field.hpp"

namespace nematic2d::spectral {

/// Fourier coefficients of one real field component in half-complex layout:
/// index [ky][kx] with kx in 0..n/2, ky in 0..n-1 (negative frequencies in
/// the upper half). Coefficients are normalized so f(x) = sum c_k e^{i k.x}.
struct SpectralComponent {
  int n = 0;
  double length = 0.0;
  std::vector<std::complex<double>> c;
};

SpectralComponent forward(const TorusGrid& grid, std::span<const double> values);
void inverse(const SpectralComponent& spec, std::span<double> out);

/// Spectral derivative along an axis (0 = x, 1 = y). Exact for band-limited
/// input; Nyquist rows/columns are zeroed as their first derivative has no
/// consistent sign.
Field derivative(const Field& f, int axis);

/// Gradient with the derivative axis as the leading tensor index:
/// out.comp(axis * C + c) = d f_c / d x_axis.
Field gradient(const Field& f);

/// Scalar divergence of a 2-component field.
Field divergence(const Field& v);

Field laplacian(const Field& f);

/// Orthogonal projection of a 2-component field onto its divergence-free
/// part. Idempotent; the mean (k = 0) mode is untouched.
Field leray_project(const Field& v);

/// Torus integral of a scalar field (mean value times L^2; trapezoidal
/// quadrature, which is spectrally accurate on the torus).
double integrate(const Field& f);

/// 2/3-rule dealiasing: zeroes every mode with |freq_x| or |freq_y| above n/3.
Field dealias(const Field& f);

/// Zero-padding interpolation onto a grid with factor times more points per
/// axis (same period). Exact for band-limited input with empty Nyquist modes.
Field upsample(const Field& f, int factor);

/// Circular shift by whole cells: out(ix, iy) = in(ix + sx, iy + sy) mod n.
Field roll(const Field& f, int sx, int sy);

/// Reinterpret the same sample values on a different grid of equal n.
Field with_grid(const Field& f, const TorusGrid& grid);

/// Per-mode solve of (1 - a * Laplacian) out = f, i.e. division by 1 + a|k|^2.
Field implicit_diffusion_solve(const Field& f, double a);

/// (u . grad) f per component, with the products dealiased.
Field advect(const Field& u, const Field& f);

/// out_j = sum_i d_i T_ij for a 4-component tensor field T (entry i*2+j).
/// Each entry is dealiased before differentiation.
Field divergence_first_index(const Field& tensor);

/// Exact integral of a band-limited scalar field over the disc B_r(cx, cy),
/// evaluated from the field's Fourier coefficients against the analytic disc
/// transform (Bessel J1). No pixelization error.
double disc_integrate(const Field& f, double cx, double cy, double r);

}  // namespace nematic2d::spectral
