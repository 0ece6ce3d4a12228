#pragma once

#include "nematic2d/field.hpp"

namespace nematic2d {

/// Degree-m harmonic sphere map localized at scale lambda: the inverse
/// stereographic image of w = (z / lambda)^m with z the displacement from
/// center. |d| = 1 holds exactly pointwise.
///
/// To make the field smooth across the torus seam, w is driven to infinity
/// (d to the south pole) by a quintic blend over min-image radii
/// [L/4, 0.45 L]; the plain rational map is kept untouched inside L/4. For
/// lambda well below L/4 the Dirichlet energy stays within a fraction of a
/// percent of 8 pi m.
Field make_bubble(const TorusGrid& grid, double cx, double cy, double lambda, int degree);

}  // namespace nematic2d
