#include "nematic2d/kinematics.hpp"

#include <cmath>
#include <stdexcept>

#include "nematic2d/spectral.hpp"

namespace nematic2d {

namespace {

void require_valid_lambda1(const LeslieCoefficients& c) {
  if (!(c.lambda1 < 0.0))
    throw std::invalid_argument("director dynamics requires lambda1 = mu2 - mu3 < 0");
}

// |grad d|^2 summed over all components of a pre-computed gradient (axis-major).
Field grad_norm2(const Field& grad, int ncomp) {
  Field out(grad.grid(), 1);
  auto o = out.comp(0);
  for (int axis = 0; axis < 2; ++axis) {
    for (int c = 0; c < ncomp; ++c) {
      auto g = grad.comp(axis * ncomp + c);
      for (size_t i = 0; i < o.size(); ++i) o[i] += g[i] * g[i];
    }
  }
  return out;
}

}  // namespace

std::pair<Field, Field> strain_vorticity(const Field& u) {
  if (u.components() != 2) throw std::invalid_argument("strain_vorticity expects a velocity field");
  Field G = spectral::gradient(u);  // G.comp(i*2+j) = d_i u_j
  Field A(u.grid(), 4);
  Field Om(u.grid(), 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      auto gij = G.comp(i * 2 + j);
      auto gji = G.comp(j * 2 + i);
      auto a = A.comp(i * 2 + j);
      auto w = Om.comp(i * 2 + j);
      for (size_t p = 0; p < a.size(); ++p) {
        a[p] = 0.5 * (gij[p] + gji[p]);
        w[p] = 0.5 * (gij[p] - gji[p]);
      }
    }
  }
  return {std::move(A), std::move(Om)};
}

Field corotational_N(const Field& u, const Field& d, const LeslieCoefficients& c) {
  require_valid_lambda1(c);
  auto [A, Om] = strain_vorticity(u);
  Field grad_d = spectral::gradient(d);
  Field lap_d = spectral::laplacian(d);
  Field gd2 = grad_norm2(grad_d, 3);

  const double ratio = c.lambda2 / c.lambda1;
  const double inv_abs_l1 = 1.0 / std::abs(c.lambda1);
  Field N(d.grid(), 3);
  auto a11 = A.comp(0), a12 = A.comp(1), a22 = A.comp(3);
  auto d1 = d.comp(0), d2 = d.comp(1);
  for (int comp = 0; comp < 3; ++comp) {
    auto n = N.comp(comp);
    auto dc = d.comp(comp);
    auto lapc = lap_d.comp(comp);
    auto g2 = gd2.comp(0);
    for (size_t p = 0; p < n.size(); ++p) {
      double adh = comp == 0   ? a11[p] * d1[p] + a12[p] * d2[p]
                   : comp == 1 ? a12[p] * d1[p] + a22[p] * d2[p]
                               : 0.0;
      double dAd = d1[p] * (a11[p] * d1[p] + a12[p] * d2[p]) + d2[p] * (a12[p] * d1[p] + a22[p] * d2[p]);
      n[p] = -ratio * adh + inv_abs_l1 * (lapc[p] + g2[p] * dc[p]) + ratio * dAd * dc[p];
    }
  }
  return N;
}

KinematicTensors compute_kinematics(const Field& u, const Field& d, const LeslieCoefficients& c) {
  auto [A, Om] = strain_vorticity(u);
  Field Ad_hat(u.grid(), 2);
  Field dAd(u.grid(), 1);
  {
    auto a11 = A.comp(0), a12 = A.comp(1), a22 = A.comp(3);
    auto d1 = d.comp(0), d2 = d.comp(1);
    auto h1 = Ad_hat.comp(0), h2 = Ad_hat.comp(1);
    auto q = dAd.comp(0);
    for (size_t p = 0; p < q.size(); ++p) {
      h1[p] = a11[p] * d1[p] + a12[p] * d2[p];
      h2[p] = a12[p] * d1[p] + a22[p] * d2[p];
      q[p] = d1[p] * h1[p] + d2[p] * h2[p];
    }
  }
  Field N = corotational_N(u, d, c);
  return {std::move(A), std::move(Om), std::move(N), std::move(Ad_hat), std::move(dAd)};
}

Field leslie_stress(const KinematicTensors& t, const Field& d, const LeslieCoefficients& c) {
  Field sig(d.grid(), 4);
  auto d1 = d.comp(0), d2 = d.comp(1);
  auto q = t.dAd.comp(0);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      auto s = sig.comp(i * 2 + j);
      auto a = t.A.comp(i * 2 + j);
      auto ni = t.N.comp(i), nj = t.N.comp(j);
      auto hi = t.Ad_hat.comp(i), hj = t.Ad_hat.comp(j);
      auto di = i == 0 ? d1 : d2;
      auto dj = j == 0 ? d1 : d2;
      for (size_t p = 0; p < s.size(); ++p) {
        s[p] = c.mu1 * q[p] * di[p] * dj[p] + c.mu2 * ni[p] * dj[p] + c.mu3 * nj[p] * di[p] +
               c.mu4 * a[p] + c.mu5 * hi[p] * dj[p] + c.mu6 * hj[p] * di[p];
      }
    }
  }
  return sig;
}

Field ericksen_stress(const Field& d) {
  Field grad_d = spectral::gradient(d);
  const int C = d.components();
  Field out(d.grid(), 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      auto o = out.comp(i * 2 + j);
      for (int c = 0; c < C; ++c) {
        auto gi = grad_d.comp(i * C + c);
        auto gj = grad_d.comp(j * C + c);
        for (size_t p = 0; p < o.size(); ++p) o[p] += gi[p] * gj[p];
      }
    }
  }
  return out;
}

Field director_rhs(const Field& u, const Field& d, const LeslieCoefficients& c, DirectorMode mode,
                   double epsilon) {
  require_valid_lambda1(c);
  if (mode == DirectorMode::ginzburg_landau && !(epsilon > 0.0))
    throw std::invalid_argument("Ginzburg-Landau epsilon must be positive");

  auto [A, Om] = strain_vorticity(u);
  Field grad_d = spectral::gradient(d);
  Field lap_d = spectral::laplacian(d);
  Field gd2 = grad_norm2(grad_d, 3);
  Field adv = spectral::advect(u, d);

  const double ratio = c.lambda2 / c.lambda1;
  const double inv_abs_l1 = 1.0 / std::abs(c.lambda1);
  Field rhs(d.grid(), 3);
  auto a11 = A.comp(0), a12 = A.comp(1), a22 = A.comp(3);
  auto w12 = Om.comp(1);
  auto d1 = d.comp(0), d2 = d.comp(1), d3 = d.comp(2);
  auto g2 = gd2.comp(0);
  for (int comp = 0; comp < 3; ++comp) {
    auto o = rhs.comp(comp);
    auto dc = comp == 0 ? d1 : comp == 1 ? d2 : d3;
    auto lapc = lap_d.comp(comp);
    auto ad = adv.comp(comp);
    for (size_t p = 0; p < o.size(); ++p) {
      double om_dh = comp == 0 ? w12[p] * d2[p] : comp == 1 ? -w12[p] * d1[p] : 0.0;
      double a_dh = comp == 0   ? a11[p] * d1[p] + a12[p] * d2[p]
                    : comp == 1 ? a12[p] * d1[p] + a22[p] * d2[p]
                                : 0.0;
      o[p] = -ad[p] + om_dh - ratio * a_dh + inv_abs_l1 * lapc[p];
      if (mode == DirectorMode::projection) {
        double dAd = d1[p] * (a11[p] * d1[p] + a12[p] * d2[p]) +
                     d2[p] * (a12[p] * d1[p] + a22[p] * d2[p]);
        o[p] += inv_abs_l1 * g2[p] * dc[p] + ratio * dAd * dc[p];
      } else {
        double m2 = d1[p] * d1[p] + d2[p] * d2[p] + d3[p] * d3[p];
        o[p] += inv_abs_l1 / (epsilon * epsilon) * (1.0 - m2) * dc[p];
      }
    }
  }
  return rhs;
}

std::pair<double, double> stress_power_identity(const Field& u, const Field& d,
                                                const LeslieCoefficients& c, const Field& eta) {
  KinematicTensors t = compute_kinematics(u, d, c);
  Field sig = leslie_stress(t, d, c);
  Field G = spectral::gradient(u);

  Field lhs_density(u.grid(), 1);
  Field rhs_density(u.grid(), 1);
  auto L = lhs_density.comp(0);
  auto R = rhs_density.comp(0);
  auto e = eta.comp(0);
  auto w12 = t.Omega.comp(1);
  auto d1 = d.comp(0), d2 = d.comp(1);
  auto n1 = t.N.comp(0), n2 = t.N.comp(1);
  auto h1 = t.Ad_hat.comp(0), h2 = t.Ad_hat.comp(1);
  auto q = t.dAd.comp(0);
  for (size_t p = 0; p < L.size(); ++p) {
    double e2 = e[p] * e[p];

    double sp = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) sp += sig.comp(i * 2 + j)[p] * G.comp(i * 2 + j)[p];
    L[p] = e2 * sp;

    double a11 = t.A.comp(0)[p], a12 = t.A.comp(1)[p], a22 = t.A.comp(3)[p];
    double A2 = a11 * a11 + 2.0 * a12 * a12 + a22 * a22;
    double om1 = w12[p] * d2[p];   // (Omega d^)_1
    double om2 = -w12[p] * d1[p];  // (Omega d^)_2
    double n_om = n1[p] * om1 + n2[p] * om2;
    double n_ad = n1[p] * h1[p] + n2[p] * h2[p];
    double ad_om = h1[p] * om1 + h2[p] * om2;
    R[p] = e2 * (c.mu1 * q[p] * q[p] + c.mu4 * A2 + (c.mu5 + c.mu6) * (h1[p] * h1[p] + h2[p] * h2[p]) +
                 c.lambda1 * n_om - c.lambda2 * n_ad + c.lambda2 * ad_om);
  }
  return {spectral::integrate(lhs_density), spectral::integrate(rhs_density)};
}

Dissipation dissipation_functionals(const Field& u, const Field& d, const LeslieCoefficients& c) {
  require_valid_lambda1(c);
  Field G = spectral::gradient(u);
  Field grad_d = spectral::gradient(d);
  Field lap_d = spectral::laplacian(d);
  Field gd2 = grad_norm2(grad_d, 3);

  Field visc_density(u.grid(), 1), dir_density(u.grid(), 1), a1_density(u.grid(), 1),
      a2_density(u.grid(), 1);
  auto dv = visc_density.comp(0);
  auto dd = dir_density.comp(0);
  auto w1d = a1_density.comp(0);
  auto w2d = a2_density.comp(0);
  auto d1 = d.comp(0), d2 = d.comp(1);
  auto g2 = gd2.comp(0);
  for (size_t p = 0; p < dv.size(); ++p) {
    double gu2 = 0.0;
    for (int k = 0; k < 4; ++k) gu2 += G.comp(k)[p] * G.comp(k)[p];
    dv[p] = gu2;

    double tau2 = 0.0;
    for (int comp = 0; comp < 3; ++comp) {
      double tau = lap_d.comp(comp)[p] + g2[p] * d.comp(comp)[p];
      tau2 += tau * tau;
    }
    dd[p] = tau2;

    double g11 = G.comp(0)[p], g12 = G.comp(1)[p], g21 = G.comp(2)[p], g22 = G.comp(3)[p];
    double a11 = g11, a12 = 0.5 * (g12 + g21), a22 = g22;
    double adh1 = a11 * d1[p] + a12 * d2[p];
    double adh2 = a12 * d1[p] + a22 * d2[p];
    double dAd = d1[p] * adh1 + d2[p] * adh2;
    w1d[p] = dAd * dAd;
    w2d[p] = adh1 * adh1 + adh2 * adh2;
  }

  Dissipation out;
  out.visc = c.mu4 * spectral::integrate(visc_density);
  out.dir = 2.0 / std::abs(c.lambda1) * spectral::integrate(dir_density);
  out.align1 = 2.0 * c.alignment_weight() * spectral::integrate(a1_density);
  out.align2 = 2.0 * c.stretching_weight() * spectral::integrate(a2_density);
  return out;
}

}  // namespace nematic2d
