#pragma once

#include <string>
#include <utility>
#include <vector>

namespace nematic2d {

/// Derived rotational/stretching viscosities (mu2 - mu3, mu5 - mu6).
/// Throws std::invalid_argument on non-finite input.
std::pair<double, double> derive_lambdas(double mu2, double mu3, double mu5, double mu6);

/// The six Leslie viscosities with the two derived lambdas. Immutable value
/// type; lambdas are always recomputed from the mus, never stored
/// independently.
struct LeslieCoefficients {
  double mu1, mu2, mu3, mu4, mu5, mu6;
  double lambda1, lambda2;

  static LeslieCoefficients from_mus(double mu1, double mu2, double mu3, double mu4, double mu5,
                                     double mu6);

  /// Weight of the |A:d^d^|^2 dissipation channel: mu1 - lambda2^2/lambda1.
  double alignment_weight() const { return mu1 - lambda2 * lambda2 / lambda1; }
  /// Weight of the |A d^|^2 dissipation channel: mu5 + mu6 + lambda2^2/lambda1.
  double stretching_weight() const { return mu5 + mu6 + lambda2 * lambda2 / lambda1; }

  friend bool operator==(const LeslieCoefficients&, const LeslieCoefficients&) = default;
};

/// Outcome of checking a coefficient set against the structural conditions:
/// Parodi's relation mu2 + mu3 = mu6 - mu5, lambda1 < 0, mu1 - lambda2^2/lambda1 >= 0,
/// mu4 > 0, and mu5 + mu6 >= -lambda2^2/lambda1.
struct ValidationReport {
  bool parodi_ok = false;
  bool lambda1_negative = false;
  bool alignment_nonneg = false;
  bool viscosity_positive = false;
  bool stretching_ok = false;
  std::vector<std::string> messages;  // human-readable violations
  std::vector<std::string> warnings;  // non-fatal advisories

  bool valid() const {
    return parodi_ok && lambda1_negative && alignment_nonneg && viscosity_positive && stretching_ok;
  }
};

/// Invalid sets produce a failing report, never an exception.
ValidationReport validate(const LeslieCoefficients& c, double parodi_tol = 1e-12,
                          double cond_tol = 1e-12);

}  // namespace nematic2d
