#pragma once

#include <utility>

#include "nematic2d/field.hpp"
#include "nematic2d/leslie_coefficients.hpp"

namespace nematic2d {

/// Which director dynamics is being integrated: exact unit-sphere constraint
/// maintained by pointwise renormalization, or the Ginzburg-Landau penalty
/// relaxation of that constraint.
enum class DirectorMode { projection, ginzburg_landau };

/// Pointwise tensors derived from one (u, d) state.
///
/// A and Omega are full 2x2 tensors (component i*2+j); N is the co-rotational
/// director rate obtained by substituting the director equation, so it is a
/// local function of (u, d) with no stored time derivative.
struct KinematicTensors {
  Field A;       // symmetric rate of strain, 4 components
  Field Omega;   // skew part, 4 components
  Field N;       // 3 components
  Field Ad_hat;  // A * d^, 2 components
  Field dAd;     // d^T A d^, scalar
};

/// A_ij = (d_i u_j + d_j u_i)/2, Omega_ij = (d_i u_j - d_j u_i)/2.
std::pair<Field, Field> strain_vorticity(const Field& u);

/// Co-rotational derivative with the time derivative eliminated through the
/// director equation:
///   N = -(l2/l1)(A d^, 0) + (1/|l1|)(lap d + |grad d|^2 d) + (l2/l1)(d^T A d^) d.
/// Requires lambda1 < 0.
Field corotational_N(const Field& u, const Field& d, const LeslieCoefficients& c);

KinematicTensors compute_kinematics(const Field& u, const Field& d, const LeslieCoefficients& c);

/// sigma^L_ij = mu1 (d^T A d^) d_i d_j + mu2 N_i d_j + mu3 N_j d_i + mu4 A_ij
///            + mu5 (A d^)_i d_j + mu6 (A d^)_j d_i,  1 <= i, j <= 2.
Field leslie_stress(const KinematicTensors& t, const Field& d, const LeslieCoefficients& c);

/// (grad d (.) grad d)_ij = < d_i d, d_j d >, summed over all three director
/// components. Symmetric positive semidefinite pointwise.
Field ericksen_stress(const Field& d);

/// Full right-hand side of the director equation (advection included).
Field director_rhs(const Field& u, const Field& d, const LeslieCoefficients& c, DirectorMode mode,
                   double epsilon = 0.1);

/// Both routes of the stress-power identity: lhs integrates eta^2 sigma^L : grad u
/// term by term; rhs integrates the closed form
///   eta^2 [ mu1 |A:d^(x)d^|^2 + mu4 |A|^2 + (mu5+mu6)|A d^|^2
///           + l1 N^.(Om d^) - l2 N^.(A d^) + l2 (A d^).(Om d^) ].
/// The two agree pointwise when the lambda relations and Parodi hold.
std::pair<double, double> stress_power_identity(const Field& u, const Field& d,
                                                const LeslieCoefficients& c, const Field& eta);

/// The four signed dissipation channels of the global energy balance;
/// dE/dt = -(visc + dir + align1 + align2) along exact dynamics.
struct Dissipation {
  double visc = 0.0;    // mu4 |grad u|^2
  double dir = 0.0;     // (2/|l1|) |lap d + |grad d|^2 d|^2
  double align1 = 0.0;  // 2 (mu1 - l2^2/l1) |A:d^(x)d^|^2
  double align2 = 0.0;  // 2 (mu5 + mu6 + l2^2/l1) |A d^|^2
  double total() const { return visc + dir + align1 + align2; }
};

Dissipation dissipation_functionals(const Field& u, const Field& d, const LeslieCoefficients& c);

}  // namespace nematic2d
