#pragma once

#include <string>

#include "nematic2d/field.hpp"

namespace nematic2d {

enum class Palette { grayscale, signed_diverging };

/// Renders a scalar field as a binary PPM (P6) image, n x n pixels, row 0 at
/// the top (largest y). Grayscale is min-max normalized (a constant field
/// maps to mid-gray); the signed palette is symmetric about zero
/// (blue-white-red). Rejects non-scalar fields.
void render_heatmap(const Field& field, const std::string& path, Palette palette = Palette::grayscale);

}  // namespace nematic2d
