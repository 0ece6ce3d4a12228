#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nematic2d {

/// Uniform N x N collocation grid on the flat torus [0, L)^2.
///
/// Points are x = ix * spacing(), y = iy * spacing(). Spectral modes carry
/// integer frequencies in {-n/2, ..., n/2 - 1} per axis, scaled by 2*pi/L.
class TorusGrid {
 public:
  TorusGrid(int n, double length = 2.0 * std::numbers::pi) : n_(n), length_(length) {
    if (n < 8 || n % 2 != 0) throw std::invalid_argument("grid size must be even and >= 8");
    if (!(length > 0.0) || !std::isfinite(length))
      throw std::invalid_argument("grid length must be positive and finite");
  }

  int n() const { return n_; }
  double length() const { return length_; }
  double spacing() const { return length_ / n_; }
  long cells() const { return static_cast<long>(n_) * n_; }

  /// Integer frequency of mode index i in [0, n): 0..n/2-1, then -n/2..-1.
  int freq(int i) const { return i < n_ / 2 ? i : i - n_; }

  /// Physical wavenumber 2*pi*freq/L of mode index i.
  double wavenumber(int i) const { return 2.0 * std::numbers::pi * freq(i) / length_; }

  /// Shortest signed displacement from b to a along one axis.
  double min_image(double a, double b) const {
    double s = std::fmod(a - b, length_);
    if (s < -0.5 * length_) s += length_;
    if (s >= 0.5 * length_) s -= length_;
    return s;
  }

  friend bool operator==(const TorusGrid& a, const TorusGrid& b) {
    return a.n_ == b.n_ && a.length_ == b.length_;
  }

 private:
  int n_;
  double length_;
};

}  // namespace nematic2d
