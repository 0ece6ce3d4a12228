#include "nematic2d/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace nematic2d::spectral {

namespace {

// One r2c/c2r plan pair per grid size. Planning is serialized; execution on
// caller-owned buffers is thread-safe via the new-array interface.
class PlanCache {
 public:
  struct Plans {
    fftw_plan fwd = nullptr;
    fftw_plan inv = nullptr;
  };

  static const Plans& get(int n) {
    static PlanCache cache;
    std::lock_guard<std::mutex> lock(cache.mu_);
    auto it = cache.plans_.find(n);
    if (it != cache.plans_.end()) return it->second;

    std::vector<double> real(static_cast<size_t>(n) * n);
    std::vector<std::complex<double>> cplx(static_cast<size_t>(n) * (n / 2 + 1));
    Plans p;
    unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    p.fwd = fftw_plan_dft_r2c_2d(n, n, real.data(), reinterpret_cast<fftw_complex*>(cplx.data()), flags);
    p.inv = fftw_plan_dft_c2r_2d(n, n, reinterpret_cast<fftw_complex*>(cplx.data()), real.data(), flags);
    return cache.plans_.emplace(n, p).first->second;
  }

 private:
  PlanCache() = default;
  ~PlanCache() {
    for (auto& [n, p] : plans_) {
      fftw_destroy_plan(p.fwd);
      fftw_destroy_plan(p.inv);
    }
  }
  std::mutex mu_;
  std::map<int, Plans> plans_;
};

int half_width(int n) { return n / 2 + 1; }

// Frequency of a half-complex column/row index.
int col_freq(int kx) { return kx; }  // kx in 0..n/2
int row_freq(int ky, int n) { return ky < n / 2 ? ky : ky - n; }

SpectralComponent forward_span(const TorusGrid& g, std::span<const double> v) {
  const int n = g.n();
  SpectralComponent s;
  s.n = n;
  s.length = g.length();
  s.c.resize(static_cast<size_t>(n) * half_width(n));
  std::vector<double> tmp(v.begin(), v.end());  // r2c may not preserve input
  fftw_execute_dft_r2c(PlanCache::get(n).fwd, tmp.data(), reinterpret_cast<fftw_complex*>(s.c.data()));
  const double scale = 1.0 / (static_cast<double>(n) * n);
  for (auto& z : s.c) z *= scale;
  return s;
}

void inverse_into(SpectralComponent s, std::span<double> out) {
  fftw_execute_dft_c2r(PlanCache::get(s.n).inv, reinterpret_cast<fftw_complex*>(s.c.data()), out.data());
}

// Apply a per-mode complex multiplier m(kx_index, ky_index).
template <typename F>
void apply_multiplier(SpectralComponent& s, F&& m) {
  const int n = s.n;
  const int hw = half_width(n);
  for (int ky = 0; ky < n; ++ky)
    for (int kx = 0; kx < hw; ++kx) s.c[static_cast<size_t>(ky) * hw + kx] *= m(kx, ky);
}

}  // namespace

SpectralComponent forward(const TorusGrid& grid, std::span<const double> values) {
  return forward_span(grid, values);
}

void inverse(const SpectralComponent& spec, std::span<double> out) { inverse_into(spec, out); }

Field derivative(const Field& f, int axis) {
  if (axis != 0 && axis != 1) throw std::invalid_argument("axis must be 0 or 1");
  const TorusGrid& g = f.grid();
  const int n = g.n();
  const double k0 = 2.0 * std::numbers::pi / g.length();
  Field out(g, f.components());
  for (int c = 0; c < f.components(); ++c) {
    SpectralComponent s = forward_span(g, f.comp(c));
    apply_multiplier(s, [&](int kx, int ky) -> std::complex<double> {
      int fx = col_freq(kx);
      int fy = row_freq(ky, n);
      if (fx == n / 2 || fy == -n / 2) return 0.0;  // Nyquist has no odd derivative
      double k = k0 * (axis == 0 ? fx : fy);
      return {0.0, k};
    });
    inverse_into(std::move(s), out.comp(c));
  }
  return out;
}

Field gradient(const Field& f) {
  const int C = f.components();
  Field out(f.grid(), 2 * C);
  for (int axis = 0; axis < 2; ++axis) {
    Field d = derivative(f, axis);
    for (int c = 0; c < C; ++c) {
      auto src = d.comp(c);
      auto dst = out.comp(axis * C + c);
      std::copy(src.begin(), src.end(), dst.begin());
    }
  }
  return out;
}

Field divergence(const Field& v) {
  if (v.components() != 2) throw std::invalid_argument("divergence expects a 2-component field");
  Field dx = derivative(v, 0);
  Field dy = derivative(v, 1);
  Field out(v.grid(), 1);
  auto o = out.comp(0);
  auto a = dx.comp(0);
  auto b = dy.comp(1);
  for (size_t i = 0; i < o.size(); ++i) o[i] = a[i] + b[i];
  return out;
}

Field laplacian(const Field& f) {
  const TorusGrid& g = f.grid();
  const int n = g.n();
  const double k0 = 2.0 * std::numbers::pi / g.length();
  Field out(g, f.components());
  for (int c = 0; c < f.components(); ++c) {
    SpectralComponent s = forward_span(g, f.comp(c));
    apply_multiplier(s, [&](int kx, int ky) -> std::complex<double> {
      double fx = col_freq(kx);
      double fy = row_freq(ky, n);
      return -k0 * k0 * (fx * fx + fy * fy);
    });
    inverse_into(std::move(s), out.comp(c));
  }
  return out;
}

Field leray_project(const Field& v) {
  if (v.components() != 2) throw std::invalid_argument("leray_project expects a 2-component field");
  const TorusGrid& g = v.grid();
  const int n = g.n();
  const int hw = half_width(n);
  SpectralComponent su = forward_span(g, v.comp(0));
  SpectralComponent sv = forward_span(g, v.comp(1));
  for (int ky = 0; ky < n; ++ky) {
    for (int kx = 0; kx < hw; ++kx) {
      double fx = col_freq(kx);
      double fy = row_freq(ky, n);
      double k2 = fx * fx + fy * fy;
      if (k2 == 0.0) continue;
      size_t idx = static_cast<size_t>(ky) * hw + kx;
      std::complex<double> div = fx * su.c[idx] + fy * sv.c[idx];
      su.c[idx] -= fx * div / k2;
      sv.c[idx] -= fy * div / k2;
    }
  }
  Field out(g, 2);
  inverse_into(std::move(su), out.comp(0));
  inverse_into(std::move(sv), out.comp(1));
  return out;
}

double integrate(const Field& f) {
  if (f.components() != 1) throw std::invalid_argument("integrate expects a scalar field");
  auto v = f.comp(0);
  double sum = 0.0;
  for (double x : v) sum += x;
  const double L = f.grid().length();
  return sum / static_cast<double>(v.size()) * L * L;
}

Field dealias(const Field& f) {
  const TorusGrid& g = f.grid();
  const int n = g.n();
  Field out(g, f.components());
  for (int c = 0; c < f.components(); ++c) {
    SpectralComponent s = forward_span(g, f.comp(c));
    apply_multiplier(s, [&](int kx, int ky) -> double {
      int fx = std::abs(col_freq(kx));
      int fy = std::abs(row_freq(ky, n));
      return (3 * fx > n || 3 * fy > n) ? 0.0 : 1.0;
    });
    inverse_into(std::move(s), out.comp(c));
  }
  return out;
}

Field upsample(const Field& f, int factor) {
  if (factor < 1) throw std::invalid_argument("upsample factor must be >= 1");
  const TorusGrid& g = f.grid();
  const int n = g.n();
  if (factor == 1) return f;
  const int m = n * factor;
  TorusGrid big(m, g.length());
  Field out(big, f.components());
  const int hw_src = half_width(n);
  const int hw_dst = half_width(m);
  for (int c = 0; c < f.components(); ++c) {
    SpectralComponent src = forward_span(g, f.comp(c));
    SpectralComponent dst;
    dst.n = m;
    dst.length = g.length();
    dst.c.assign(static_cast<size_t>(m) * hw_dst, {0.0, 0.0});
    // Copy modes strictly below the source Nyquist frequency.
    for (int ky = 0; ky < n; ++ky) {
      int fy = row_freq(ky, n);
      if (fy == -n / 2) continue;
      int ky_dst = fy >= 0 ? fy : fy + m;
      for (int kx = 0; kx < n / 2; ++kx) {
        dst.c[static_cast<size_t>(ky_dst) * hw_dst + kx] = src.c[static_cast<size_t>(ky) * hw_src + kx];
      }
    }
    inverse_into(std::move(dst), out.comp(c));
  }
  return out;
}

Field roll(const Field& f, int sx, int sy) {
  const int n = f.n();
  auto wrap = [n](int i) {
    int r = i % n;
    return r < 0 ? r + n : r;
  };
  Field out(f.grid(), f.components());
  for (int c = 0; c < f.components(); ++c) {
    auto src = f.comp(c);
    auto dst = out.comp(c);
    for (int iy = 0; iy < n; ++iy)
      for (int ix = 0; ix < n; ++ix)
        dst[static_cast<size_t>(iy) * n + ix] = src[static_cast<size_t>(wrap(iy + sy)) * n + wrap(ix + sx)];
  }
  return out;
}

Field with_grid(const Field& f, const TorusGrid& grid) {
  if (grid.n() != f.n()) throw std::invalid_argument("with_grid requires matching point counts");
  Field out(grid, f.components());
  std::copy(f.data(), f.data() + f.size(), out.data());
  return out;
}

Field implicit_diffusion_solve(const Field& f, double a) {
  const TorusGrid& g = f.grid();
  const int n = g.n();
  const double k0 = 2.0 * std::numbers::pi / g.length();
  Field out(g, f.components());
  for (int c = 0; c < f.components(); ++c) {
    SpectralComponent s = forward_span(g, f.comp(c));
    apply_multiplier(s, [&](int kx, int ky) -> double {
      double fx = col_freq(kx);
      double fy = row_freq(ky, n);
      double k2 = k0 * k0 * (fx * fx + fy * fy);
      return 1.0 / (1.0 + a * k2);
    });
    inverse_into(std::move(s), out.comp(c));
  }
  return out;
}

Field advect(const Field& u, const Field& f) {
  if (u.components() != 2) throw std::invalid_argument("advect expects a 2-component velocity");
  Field dx = derivative(f, 0);
  Field dy = derivative(f, 1);
  Field out(f.grid(), f.components());
  auto ux = u.comp(0);
  auto uy = u.comp(1);
  for (int c = 0; c < f.components(); ++c) {
    auto gx = dx.comp(c);
    auto gy = dy.comp(c);
    auto o = out.comp(c);
    for (size_t i = 0; i < o.size(); ++i) o[i] = ux[i] * gx[i] + uy[i] * gy[i];
  }
  return dealias(out);
}

Field divergence_first_index(const Field& tensor) {
  if (tensor.components() != 4) throw std::invalid_argument("expected a 4-component tensor field");
  Field t = dealias(tensor);
  Field out(tensor.grid(), 2);
  for (int j = 0; j < 2; ++j) {
    Field row(tensor.grid(), 2);
    std::copy(t.comp(0 * 2 + j).begin(), t.comp(0 * 2 + j).end(), row.comp(0).begin());
    std::copy(t.comp(1 * 2 + j).begin(), t.comp(1 * 2 + j).end(), row.comp(1).begin());
    Field d = divergence(row);
    std::copy(d.comp(0).begin(), d.comp(0).end(), out.comp(j).begin());
  }
  return out;
}

double disc_integrate(const Field& f, double cx, double cy, double r) {
  if (f.components() != 1) throw std::invalid_argument("disc_integrate expects a scalar field");
  if (!(r > 0.0)) throw std::invalid_argument("disc radius must be positive");
  const TorusGrid& g = f.grid();
  const int n = g.n();
  const int hw = half_width(n);
  const double k0 = 2.0 * std::numbers::pi / g.length();
  SpectralComponent s = forward_span(g, f.comp(0));
  double acc = 0.0;
  for (int ky = 0; ky < n; ++ky) {
    double kyv = k0 * row_freq(ky, n);
    for (int kx = 0; kx < hw; ++kx) {
      double kxv = k0 * col_freq(kx);
      double kk = std::hypot(kxv, kyv);
      double w;
      if (kk == 0.0) {
        w = std::numbers::pi * r * r;
      } else {
        w = 2.0 * std::numbers::pi * r * std::cyl_bessel_j(1, kk * r) / kk;
      }
      std::complex<double> phase(std::cos(kxv * cx + kyv * cy), std::sin(kxv * cx + kyv * cy));
      double term = (s.c[static_cast<size_t>(ky) * hw + kx] * phase).real() * w;
      // Half-complex layout stores kx > 0 columns once; their conjugates
      // contribute the same real part.
      double mult = (kx == 0 || kx == n / 2) ? 1.0 : 2.0;
      acc += mult * term;
    }
  }
  return acc;
}

}  // namespace nematic2d::spectral
