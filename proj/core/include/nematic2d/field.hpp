#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "nematic2d/torus_grid.hpp"

namespace nematic2d {

/// Real-valued multi-component field on a TorusGrid.
///
/// Storage is component-major; within a component the layout is row-major
/// with y as the row index: offset = iy * n + ix. Component counts in use:
/// 1 (scalars), 2 (velocity), 3 (director), 4 (2x2 tensors, offset i*2+j
/// for entry T_ij with i the row index).
class Field {
 public:
  Field(TorusGrid grid, int components)
      : grid_(grid),
        components_(components),
        data_(static_cast<size_t>(components) * grid.cells(), 0.0) {
    if (components < 1) throw std::invalid_argument("field needs at least one component");
  }

  const TorusGrid& grid() const { return grid_; }
  int components() const { return components_; }
  int n() const { return grid_.n(); }
  long cells() const { return grid_.cells(); }

  std::span<double> comp(int c) { return {data_.data() + static_cast<size_t>(c) * cells(), static_cast<size_t>(cells())}; }
  std::span<const double> comp(int c) const {
    return {data_.data() + static_cast<size_t>(c) * cells(), static_cast<size_t>(cells())};
  }

  double& at(int c, int ix, int iy) { return data_[static_cast<size_t>(c) * cells() + static_cast<size_t>(iy) * n() + ix]; }
  double at(int c, int ix, int iy) const {
    return data_[static_cast<size_t>(c) * cells() + static_cast<size_t>(iy) * n() + ix];
  }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  size_t size() const { return data_.size(); }

  bool all_finite() const {
    for (double v : data_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  Field& operator+=(const Field& o) {
    check_same_shape(o);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  Field& operator-=(const Field& o) {
    check_same_shape(o);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }

  Field& operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
  }

  /// this += s * o
  Field& axpy(double s, const Field& o) {
    check_same_shape(o);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += s * o.data_[i];
    return *this;
  }

 private:
  void check_same_shape(const Field& o) const {
    if (!(grid_ == o.grid_) || components_ != o.components_)
      throw std::invalid_argument("field shape mismatch");
  }

  TorusGrid grid_;
  int components_;
  std::vector<double> data_;
};

}  // namespace nematic2d
