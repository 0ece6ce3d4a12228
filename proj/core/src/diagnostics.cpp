#include "nematic2d/diagnostics.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "nematic2d/solver.hpp"
#include "nematic2d/spectral.hpp"

namespace nematic2d {

namespace {

double sqr(double x) { return x * x; }

// Quintic smoothstep: C^2, 0 -> 1 over [0, 1].
double smoothstep5(double s) {
  s = std::clamp(s, 0.0, 1.0);
  return s * s * s * (s * (6.0 * s - 15.0) + 10.0);
}

double d_smoothstep5(double s) {
  if (s <= 0.0 || s >= 1.0) return 0.0;
  return 30.0 * s * s * sqr(1.0 - s);
}

// Pointwise |u|^2 + |grad d|^2 with spectral derivatives.
Field energy_density(const FlowState& state) {
  Field grad_d = spectral::gradient(state.d);
  Field density(state.u.grid(), 1);
  auto e = density.comp(0);
  auto ux = state.u.comp(0);
  auto uy = state.u.comp(1);
  for (size_t p = 0; p < e.size(); ++p) e[p] = ux[p] * ux[p] + uy[p] * uy[p];
  for (int k = 0; k < grad_d.components(); ++k) {
    auto g = grad_d.comp(k);
    for (size_t p = 0; p < e.size(); ++p) e[p] += g[p] * g[p];
  }
  return density;
}

// eta^2 and |grad(eta^2)| on the grid for a radial cutoff window.
struct CutoffWeights {
  Field eta2;
  Field grad_eta2_mag;
};

CutoffWeights cutoff_weights(const TorusGrid& g, const CutoffWindow& w) {
  if (!(w.outer_r > w.inner_r) || !(w.inner_r > 0.0))
    throw std::invalid_argument("cutoff window needs 0 < inner_r < outer_r");
  CutoffWeights out{Field(g, 1), Field(g, 1)};
  const int n = g.n();
  const double h = g.spacing();
  const double width = w.outer_r - w.inner_r;
  auto e2 = out.eta2.comp(0);
  auto gm = out.grad_eta2_mag.comp(0);
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      double dx = g.min_image(ix * h, w.cx);
      double dy = g.min_image(iy * h, w.cy);
      double s = std::hypot(dx, dy);
      size_t p = static_cast<size_t>(iy) * n + ix;
      if (s <= w.inner_r) {
        e2[p] = 1.0;
        gm[p] = 0.0;
      } else if (s >= w.outer_r) {
        e2[p] = 0.0;
        gm[p] = 0.0;
      } else {
        double arg = (s - w.inner_r) / width;
        double eta = 1.0 - smoothstep5(arg);
        e2[p] = eta * eta;
        gm[p] = std::abs(2.0 * eta * d_smoothstep5(arg) / width);
      }
    }
  }
  return out;
}

// int_B f for the pointwise power of a band-limited field, with the power
// computed on a zero-padded grid so its Fourier coefficients stay exact.
double padded_disc_power(const Field& src, int power, int pad, double cx, double cy, double r) {
  Field up = spectral::upsample(src, pad);
  Field g(up.grid(), 1);
  auto o = g.comp(0);
  for (size_t p = 0; p < o.size(); ++p) {
    double acc = 0.0;
    for (int c = 0; c < up.components(); ++c) acc += sqr(up.comp(c)[p]);
    o[p] = power == 4 ? acc * acc : acc;
  }
  return spectral::disc_integrate(g, cx, cy, r);
}

struct PhiSpaceIntegrals {
  double u4, gu2, gd4, lapd2, p2;
};

PhiSpaceIntegrals phi_space_integrals(const PhiSnapshot& snap, double cx, double cy, double r) {
  PhiSpaceIntegrals out{};
  out.u4 = padded_disc_power(snap.state.u, 4, 4, cx, cy, r);
  out.gu2 = padded_disc_power(spectral::gradient(snap.state.u), 2, 2, cx, cy, r);
  out.gd4 = padded_disc_power(spectral::gradient(snap.state.d), 4, 4, cx, cy, r);
  out.lapd2 = padded_disc_power(spectral::laplacian(snap.state.d), 2, 2, cx, cy, r);
  out.p2 = padded_disc_power(snap.pressure, 2, 2, cx, cy, r);
  return out;
}

}  // namespace

double total_energy(const FlowState& state) { return total_energy(state.u, state.d); }

double energy_law_audit(const LedgerRow& r1, const LedgerRow& r2) {
  return energy_law_residual(r1, r2);
}

LocalAuditResult local_energy_audit(std::span<const FlowState> trajectory,
                                    const LeslieCoefficients& c, const CutoffWindow& window) {
  if (trajectory.size() < 2)
    throw std::invalid_argument("local energy audit needs at least two snapshots");
  const TorusGrid& g = trajectory.front().u.grid();
  CutoffWeights w = cutoff_weights(g, window);
  auto e2 = w.eta2.comp(0);
  auto gm = w.grad_eta2_mag.comp(0);

  const double inv_abs_l1 = 1.0 / std::abs(c.lambda1);
  const double w1 = c.alignment_weight();
  const double w2 = c.stretching_weight();

  auto weighted_energy = [&](const FlowState& s) {
    Field density = energy_density(s);
    auto e = density.comp(0);
    for (size_t p = 0; p < e.size(); ++p) e[p] *= e2[p];
    return spectral::integrate(density);
  };

  auto dissipation_and_flux = [&](const FlowState& s) -> std::pair<double, double> {
    Field G = spectral::gradient(s.u);
    Field grad_d = spectral::gradient(s.d);
    Field lap_d = spectral::laplacian(s.d);
    Field hess = spectral::gradient(grad_d);  // 12 comps: second derivatives of d
    Field P = recover_pressure(s.u, s.d, c);

    Field diss_density(g, 1), flux_density(g, 1);
    auto dd = diss_density.comp(0);
    auto fd = flux_density.comp(0);
    auto ux = s.u.comp(0);
    auto uy = s.u.comp(1);
    auto d1 = s.d.comp(0);
    auto d2 = s.d.comp(1);
    auto pr = P.comp(0);
    for (size_t p = 0; p < dd.size(); ++p) {
      double gu2 = 0.0;
      for (int k = 0; k < 4; ++k) gu2 += sqr(G.comp(k)[p]);
      double gd2 = 0.0;
      for (int k = 0; k < 6; ++k) gd2 += sqr(grad_d.comp(k)[p]);
      double tau2 = 0.0;
      for (int comp = 0; comp < 3; ++comp) tau2 += sqr(lap_d.comp(comp)[p] + gd2 * s.d.comp(comp)[p]);

      double g11 = G.comp(0)[p], g12 = G.comp(1)[p], g21 = G.comp(2)[p], g22 = G.comp(3)[p];
      double a11 = g11, a12 = 0.5 * (g12 + g21), a22 = g22;
      double adh1 = a11 * d1[p] + a12 * d2[p];
      double adh2 = a12 * d1[p] + a22 * d2[p];
      double dAd = d1[p] * adh1 + d2[p] * adh2;
      dd[p] = e2[p] * (c.mu4 * gu2 + 2.0 * inv_abs_l1 * tau2 + 2.0 * w1 * dAd * dAd +
                       2.0 * w2 * (adh1 * adh1 + adh2 * adh2));

      if (gm[p] != 0.0) {
        double uabs = std::hypot(ux[p], uy[p]);
        double gu = std::sqrt(gu2);
        double gd = std::sqrt(gd2);
        double h2 = 0.0;
        for (int k = 0; k < 12; ++k) h2 += sqr(hess.comp(k)[p]);
        double hd = std::sqrt(h2);
        double group_u = (uabs * uabs + gu + uabs * gd + gd * gd + hd + std::abs(pr[p])) * uabs;
        double group_d = (gu + uabs * gd + gd * gd + hd) * gd;
        fd[p] = (group_u + group_d) * gm[p];
      }
    }
    return {spectral::integrate(diss_density), spectral::integrate(flux_density)};
  };

  // Trapezoidal time quadrature over the stored snapshots.
  double diss_int = 0.0, flux_int = 0.0;
  std::pair<double, double> prev = dissipation_and_flux(trajectory[0]);
  for (size_t i = 1; i < trajectory.size(); ++i) {
    std::pair<double, double> cur = dissipation_and_flux(trajectory[i]);
    double dt = trajectory[i].t - trajectory[i - 1].t;
    if (!(dt > 0.0)) throw std::invalid_argument("trajectory snapshots must increase in t");
    diss_int += 0.5 * dt * (prev.first + cur.first);
    flux_int += 0.5 * dt * (prev.second + cur.second);
    prev = cur;
  }

  LocalAuditResult out;
  out.lhs = weighted_energy(trajectory.back()) - weighted_energy(trajectory.front()) + diss_int;
  out.flux_bound = flux_int;
  return out;
}

double phi(std::span<const PhiSnapshot> window, double cx, double cy, double t0, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("phi radius must be positive");
  const double t_start = t0 - r * r;
  const double slack = 1e-9 * std::max(1.0, std::abs(t0));
  std::vector<const PhiSnapshot*> inside;
  for (const auto& s : window) {
    if (s.state.t >= t_start - slack && s.state.t <= t0 + slack) inside.push_back(&s);
  }
  if (inside.size() < 2) throw std::invalid_argument("phi window needs at least two snapshots in [t0 - r^2, t0]");
  std::sort(inside.begin(), inside.end(),
            [](const PhiSnapshot* a, const PhiSnapshot* b) { return a->state.t < b->state.t; });
  if (inside.front()->state.t > t_start + slack || inside.back()->state.t < t0 - slack)
    throw std::invalid_argument("stored snapshots do not cover the parabolic cylinder depth r^2");

  PhiSpaceIntegrals acc{};
  PhiSpaceIntegrals prev = phi_space_integrals(*inside[0], cx, cy, r);
  for (size_t i = 1; i < inside.size(); ++i) {
    PhiSpaceIntegrals cur = phi_space_integrals(*inside[i], cx, cy, r);
    double dt = inside[i]->state.t - inside[i - 1]->state.t;
    acc.u4 += 0.5 * dt * (prev.u4 + cur.u4);
    acc.gu2 += 0.5 * dt * (prev.gu2 + cur.gu2);
    acc.gd4 += 0.5 * dt * (prev.gd4 + cur.gd4);
    acc.lapd2 += 0.5 * dt * (prev.lapd2 + cur.lapd2);
    acc.p2 += 0.5 * dt * (prev.p2 + cur.p2);
    prev = cur;
  }
  auto nonneg = [](double v) { return std::max(v, 0.0); };
  return std::pow(nonneg(acc.u4), 0.25) + std::sqrt(nonneg(acc.gu2)) + std::pow(nonneg(acc.gd4), 0.25) +
         std::sqrt(nonneg(acc.lapd2)) + std::sqrt(nonneg(acc.p2));
}

std::vector<PhiSnapshot> rescale_trajectory(std::span<const PhiSnapshot> window, double cx,
                                            double cy, double t0, double r) {
  if (window.empty()) return {};
  const TorusGrid& g = window.front().state.u.grid();
  const double h = g.spacing();
  const double inv = 1.0 / r;
  const int factor = static_cast<int>(std::lround(inv));
  if (std::abs(inv - factor) > 1e-9 || factor < 1)
    throw std::invalid_argument("rescale requires 1/r to be a whole refinement factor");
  const int ix0 = static_cast<int>(std::lround(cx / h));
  const int iy0 = static_cast<int>(std::lround(cy / h));
  if (std::abs(cx - ix0 * h) > 1e-9 * h || std::abs(cy - iy0 * h) > 1e-9 * h)
    throw std::invalid_argument("rescale center must lie on the grid");

  TorusGrid big(g.n() * factor, g.length() * factor);
  std::vector<PhiSnapshot> out;
  out.reserve(window.size());
  for (const auto& s : window) {
    // Sample at x0 + r xi: upsample by 1/r, then shift x0 to the origin.
    Field u = spectral::with_grid(
        spectral::roll(spectral::upsample(s.state.u, factor), ix0 * factor, iy0 * factor), big);
    Field d = spectral::with_grid(
        spectral::roll(spectral::upsample(s.state.d, factor), ix0 * factor, iy0 * factor), big);
    Field P = spectral::with_grid(
        spectral::roll(spectral::upsample(s.pressure, factor), ix0 * factor, iy0 * factor), big);
    u *= r;
    P *= r * r;
    double tau = (s.state.t - t0) / (r * r);
    out.push_back({FlowState{std::move(u), std::move(d), tau}, std::move(P)});
  }
  return out;
}

std::vector<ConcentrationEvent> concentration_scan(const FlowState& state, double r,
                                                   double threshold, double flag_tol) {
  const TorusGrid& g = state.u.grid();
  const int n = g.n();
  const double h = g.spacing();
  if (r < 2.0 * h) throw std::invalid_argument("scan radius must be at least two grid spacings");

  // Area-fraction disc mask centered at cell (0, 0); boundary cells are
  // supersampled. The mask is even, so correlation equals convolution.
  Field mask(g, 1);
  auto m = mask.comp(0);
  const int ss = 64;
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      double dx = g.min_image(ix * h, 0.0);
      double dy = g.min_image(iy * h, 0.0);
      double ax = std::abs(dx), ay = std::abs(dy);
      double near2 = sqr(std::max(ax - 0.5 * h, 0.0)) + sqr(std::max(ay - 0.5 * h, 0.0));
      double far2 = sqr(ax + 0.5 * h) + sqr(ay + 0.5 * h);
      size_t p = static_cast<size_t>(iy) * n + ix;
      if (far2 <= r * r) {
        m[p] = 1.0;
      } else if (near2 > r * r) {
        m[p] = 0.0;
      } else {
        int hits = 0;
        for (int sy = 0; sy < ss; ++sy) {
          double yy = dy + ((sy + 0.5) / ss - 0.5) * h;
          for (int sx = 0; sx < ss; ++sx) {
            double xx = dx + ((sx + 0.5) / ss - 0.5) * h;
            if (xx * xx + yy * yy <= r * r) ++hits;
          }
        }
        m[p] = static_cast<double>(hits) / (ss * ss);
      }
    }
  }

  Field density = energy_density(state);
  // Circular correlation via the spectral product; cell area completes the sum.
  spectral::SpectralComponent sd = spectral::forward(g, density.comp(0));
  spectral::SpectralComponent sm = spectral::forward(g, mask.comp(0));
  for (size_t i = 0; i < sd.c.size(); ++i) sd.c[i] *= std::conj(sm.c[i]);
  Field windowed(g, 1);
  spectral::inverse(sd, windowed.comp(0));
  const double cell = h * h;
  const double n2 = static_cast<double>(n) * n;

  std::vector<ConcentrationEvent> events;
  auto wv = windowed.comp(0);
  const double cut = threshold * (1.0 - flag_tol);
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      double local = wv[static_cast<size_t>(iy) * n + ix] * n2 * cell;
      if (local >= cut)
        events.push_back({state.t, ix * h, iy * h, r, local, threshold});
    }
  }
  return events;
}

double tension_residual(const Field& d) {
  Field grad_d = spectral::gradient(d);
  Field lap_d = spectral::laplacian(d);
  Field density(d.grid(), 1);
  auto o = density.comp(0);
  const int C = d.components();
  for (size_t p = 0; p < o.size(); ++p) {
    double gd2 = 0.0;
    for (int k = 0; k < 2 * C; ++k) gd2 += sqr(grad_d.comp(k)[p]);
    double tau2 = 0.0;
    for (int c = 0; c < C; ++c) tau2 += sqr(lap_d.comp(c)[p] + gd2 * d.comp(c)[p]);
    o[p] = tau2;
  }
  return std::sqrt(std::max(spectral::integrate(density), 0.0));
}

}  // namespace nematic2d
