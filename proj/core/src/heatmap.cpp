#include "nematic2d/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <vector>

#include "nematic2d/errors.hpp"

namespace nematic2d {

void render_heatmap(const Field& field, const std::string& path, Palette palette) {
  if (field.components() != 1) throw std::invalid_argument("heatmap rendering expects a scalar field");
  const int n = field.n();
  auto v = field.comp(0);

  double lo = v[0], hi = v[0], amp = 0.0;
  for (double x : v) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
    amp = std::max(amp, std::abs(x));
  }

  std::vector<unsigned char> pix(static_cast<size_t>(n) * n * 3);
  for (int row = 0; row < n; ++row) {
    int iy = n - 1 - row;  // top of the image is the largest y
    for (int ix = 0; ix < n; ++ix) {
      double x = v[static_cast<size_t>(iy) * n + ix];
      unsigned char r, g, b;
      if (palette == Palette::grayscale) {
        double s = hi > lo ? (x - lo) / (hi - lo) : 0.5;
        r = g = b = static_cast<unsigned char>(std::lround(255.0 * std::clamp(s, 0.0, 1.0)));
      } else {
        double s = amp > 0.0 ? std::clamp(x / amp, -1.0, 1.0) : 0.0;
        // blue (negative) -> white (zero) -> red (positive)
        if (s >= 0.0) {
          r = 255;
          g = b = static_cast<unsigned char>(std::lround(255.0 * (1.0 - s)));
        } else {
          b = 255;
          r = g = static_cast<unsigned char>(std::lround(255.0 * (1.0 + s)));
        }
      }
      size_t p = (static_cast<size_t>(row) * n + ix) * 3;
      pix[p] = r;
      pix[p + 1] = g;
      pix[p + 2] = b;
    }
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "P6\n" << n << " " << n << "\n255\n";
  out.write(reinterpret_cast<const char*>(pix.data()), static_cast<std::streamsize>(pix.size()));
  if (!out) throw IoError("write failure on '" + path + "'");
}

}  // namespace nematic2d
