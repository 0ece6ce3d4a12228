#include "nematic2d/solver.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "nematic2d/errors.hpp"
#include "nematic2d/spectral.hpp"

namespace nematic2d {

namespace {

double max_speed(const Field& u) {
  auto ux = u.comp(0);
  auto uy = u.comp(1);
  double m = 0.0;
  for (size_t p = 0; p < ux.size(); ++p) m = std::max(m, std::hypot(ux[p], uy[p]));
  return m;
}

Field maybe_dealias(const Field& f, bool enabled) { return enabled ? spectral::dealias(f) : f; }

}  // namespace

std::optional<std::string> stiffness_advisory(const SolverConfig& config) {
  if (config.mode == DirectorMode::ginzburg_landau && config.dt > config.epsilon * config.epsilon / 10.0) {
    std::ostringstream os;
    os << "explicit Ginzburg-Landau penalty is stiff: dt = " << config.dt
       << " exceeds epsilon^2/10 = " << config.epsilon * config.epsilon / 10.0;
    return os.str();
  }
  return std::nullopt;
}

Field momentum_step(const FlowState& state, const LeslieCoefficients& c, const SolverConfig& config) {
  const double h = state.u.grid().spacing();
  const double umax = max_speed(state.u);
  if (umax * config.dt / h > config.cfl_guard) {
    double advisory = 0.9 * config.cfl_guard * h / umax;
    std::ostringstream os;
    os << "advective CFL guard exceeded: |u| dt / h = " << umax * config.dt / h << " > "
       << config.cfl_guard << "; suggested dt <= " << advisory;
    throw CflError(os.str(), advisory);
  }

  KinematicTensors t = compute_kinematics(state.u, state.d, c);
  Field sigma = leslie_stress(t, state.d, c);
  Field eric = ericksen_stress(state.d);
  // Explicit stress: sigma^L - mu4 A (implicit Newtonian part) minus the
  // Ericksen stress, all under one divergence.
  Field explicit_stress(state.u.grid(), 4);
  for (int k = 0; k < 4; ++k) {
    auto s = sigma.comp(k);
    auto a = t.A.comp(k);
    auto e = eric.comp(k);
    auto o = explicit_stress.comp(k);
    for (size_t p = 0; p < o.size(); ++p) o[p] = s[p] - c.mu4 * a[p] - e[p];
  }
  Field force = spectral::divergence_first_index(explicit_stress);
  Field advection = spectral::advect(state.u, state.u);

  Field rhs = state.u;
  rhs.axpy(config.dt, force);
  rhs.axpy(-config.dt, advection);
  Field ustar = spectral::implicit_diffusion_solve(rhs, config.dt * 0.5 * c.mu4);
  return spectral::leray_project(ustar);
}

Field director_step(const FlowState& state, const LeslieCoefficients& c, const SolverConfig& config) {
  Field rhs_explicit = director_rhs(state.u, state.d, c, config.mode, config.epsilon);
  // The implicit solve removes the full (1/|l1|) lap d term, so subtract the
  // explicit copy director_rhs included.
  Field lap_d = spectral::laplacian(state.d);
  rhs_explicit.axpy(-1.0 / std::abs(c.lambda1), lap_d);
  rhs_explicit = maybe_dealias(rhs_explicit, config.dealias);

  Field rhs = state.d;
  rhs.axpy(config.dt, rhs_explicit);
  Field dstar = spectral::implicit_diffusion_solve(rhs, config.dt / std::abs(c.lambda1));

  if (config.mode == DirectorMode::projection) {
    auto d1 = dstar.comp(0);
    auto d2 = dstar.comp(1);
    auto d3 = dstar.comp(2);
    for (size_t p = 0; p < d1.size(); ++p) {
      double norm = std::sqrt(d1[p] * d1[p] + d2[p] * d2[p] + d3[p] * d3[p]);
      if (norm < 0.5) throw NumericalAbort("director magnitude collapsed below 0.5 before renormalization");
      d1[p] /= norm;
      d2[p] /= norm;
      d3[p] /= norm;
    }
  }
  return dstar;
}

FlowState advance(const FlowState& state, const LeslieCoefficients& c, const SolverConfig& config) {
  Field d_next = director_step(state, c, config);
  Field u_next = momentum_step(state, c, config);
  if (!u_next.all_finite() || !d_next.all_finite())
    throw NumericalAbort("non-finite value produced at t = " + std::to_string(state.t + config.dt));
  return {std::move(u_next), std::move(d_next), state.t + config.dt};
}

Field recover_pressure(const Field& u, const Field& d, const LeslieCoefficients& c) {
  KinematicTensors t = compute_kinematics(u, d, c);
  Field sigma = leslie_stress(t, d, c);
  Field eric = ericksen_stress(d);

  Field T(u.grid(), 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      auto o = T.comp(i * 2 + j);
      auto ui = u.comp(i);
      auto uj = u.comp(j);
      auto e = eric.comp(i * 2 + j);
      auto s = sigma.comp(i * 2 + j);
      for (size_t p = 0; p < o.size(); ++p) o[p] = ui[p] * uj[p] + e[p] - s[p];
    }
  }
  T = spectral::dealias(T);

  const TorusGrid& g = u.grid();
  const int n = g.n();
  const int hw = n / 2 + 1;
  auto freq_y = [n](int ky) { return ky < n / 2 ? ky : ky - n; };

  spectral::SpectralComponent acc;
  acc.n = n;
  acc.length = g.length();
  acc.c.assign(static_cast<size_t>(n) * hw, {0.0, 0.0});
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      spectral::SpectralComponent s = spectral::forward(g, T.comp(i * 2 + j));
      for (int ky = 0; ky < n; ++ky) {
        double fy = freq_y(ky);
        for (int kx = 0; kx < hw; ++kx) {
          double fx = kx;
          double ki = i == 0 ? fx : fy;
          double kj = j == 0 ? fx : fy;
          double k2 = fx * fx + fy * fy;
          if (k2 == 0.0) continue;  // zero-mean gauge
          size_t idx = static_cast<size_t>(ky) * hw + kx;
          acc.c[idx] += -ki * kj / k2 * s.c[idx];
        }
      }
    }
  }
  Field P(g, 1);
  spectral::inverse(acc, P.comp(0));
  return P;
}

double total_energy(const Field& u, const Field& d) {
  Field grad_d = spectral::gradient(d);
  Field density(u.grid(), 1);
  auto e = density.comp(0);
  auto ux = u.comp(0);
  auto uy = u.comp(1);
  for (size_t p = 0; p < e.size(); ++p) e[p] = ux[p] * ux[p] + uy[p] * uy[p];
  for (int k = 0; k < grad_d.components(); ++k) {
    auto g = grad_d.comp(k);
    for (size_t p = 0; p < e.size(); ++p) e[p] += g[p] * g[p];
  }
  return spectral::integrate(density);
}

namespace {

LedgerRow make_row(const FlowState& s, const LeslieCoefficients& c, const LedgerRow* prev) {
  LedgerRow row;
  row.t = s.t;
  row.E = total_energy(s.u, s.d);
  Dissipation diss = dissipation_functionals(s.u, s.d, c);
  row.D_visc = diss.visc;
  row.D_dir = diss.dir;
  row.D_align1 = diss.align1;
  row.D_align2 = diss.align2;
  Field div = spectral::divergence(s.u);
  row.max_div_u = div.max_abs();
  auto d1 = s.d.comp(0);
  auto d2 = s.d.comp(1);
  auto d3 = s.d.comp(2);
  double worst = 0.0;
  for (size_t p = 0; p < d1.size(); ++p) {
    double norm = std::sqrt(d1[p] * d1[p] + d2[p] * d2[p] + d3[p] * d3[p]);
    worst = std::max(worst, std::abs(norm - 1.0));
  }
  row.max_unit_violation = worst;
  row.residual = prev ? energy_law_residual(*prev, row) : 0.0;
  return row;
}

}  // namespace

RunResult run(FlowState initial, const LeslieCoefficients& c, const SolverConfig& config,
              const RunHooks& hooks) {
  RunResult result{std::move(initial), {}, false, "", 0};

  auto emit = [&](long step) {
    bool row_due = hooks.ledger_every > 0 && (step % hooks.ledger_every == 0 || step == config.steps);
    if (row_due) {
      const LedgerRow* prev = result.ledger.rows.empty() ? nullptr : &result.ledger.rows.back();
      if (!prev || result.state.t > prev->t) {
        LedgerRow row = make_row(result.state, c, prev);
        result.ledger.rows.push_back(row);
        if (hooks.on_row) hooks.on_row(row, result.state);
      }
    }
    if (hooks.snapshot_every > 0 && (step % hooks.snapshot_every == 0 || step == config.steps))
      if (hooks.on_snapshot) hooks.on_snapshot(result.state);
    if (hooks.scanner && hooks.scan_every > 0 && (step % hooks.scan_every == 0 || step == config.steps)) {
      auto events = hooks.scanner(result.state);
      result.ledger.events.insert(result.ledger.events.end(), events.begin(), events.end());
    }
  };

  emit(0);
  for (long step = 1; step <= config.steps; ++step) {
    try {
      result.state = advance(result.state, c, config);
    } catch (const CflError& e) {
      result.aborted = true;
      result.abort_reason = e.what();
      break;
    } catch (const NumericalAbort& e) {
      result.aborted = true;
      result.abort_reason = e.what();
      break;
    }
    result.steps_completed = step;
    emit(step);
  }
  return result;
}

}  // namespace nematic2d
