#pragma once

#include "nematic2d/field.hpp"

namespace nematic2d {

/// Velocity (2 components), director (3 components), simulation time.
///
/// After every accepted step the solver restores: divergence(u) <= 1e-10 in
/// max norm, and in projection mode ||d| - 1| <= 1e-12 pointwise.
struct FlowState {
  Field u;
  Field d;
  double t = 0.0;

  static FlowState zeros(const TorusGrid& grid) { return {Field(grid, 2), Field(grid, 3), 0.0}; }
};

}  // namespace nematic2d
