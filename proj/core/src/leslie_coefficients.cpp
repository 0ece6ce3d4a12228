#include "nematic2d/leslie_coefficients.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nematic2d {

namespace {
constexpr double kWeightWarnLevel = 1e-10;

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}
}  // namespace

std::pair<double, double> derive_lambdas(double mu2, double mu3, double mu5, double mu6) {
  if (!std::isfinite(mu2) || !std::isfinite(mu3) || !std::isfinite(mu5) || !std::isfinite(mu6))
    throw std::invalid_argument("Leslie coefficients must be finite");
  return {mu2 - mu3, mu5 - mu6};
}

LeslieCoefficients LeslieCoefficients::from_mus(double mu1, double mu2, double mu3, double mu4,
                                                double mu5, double mu6) {
  if (!std::isfinite(mu1) || !std::isfinite(mu4))
    throw std::invalid_argument("Leslie coefficients must be finite");
  auto [l1, l2] = derive_lambdas(mu2, mu3, mu5, mu6);
  return {mu1, mu2, mu3, mu4, mu5, mu6, l1, l2};
}

ValidationReport validate(const LeslieCoefficients& c, double parodi_tol, double cond_tol) {
  ValidationReport r;

  double parodi_gap = (c.mu2 + c.mu3) - (c.mu6 - c.mu5);
  r.parodi_ok = std::abs(parodi_gap) <= parodi_tol;
  if (!r.parodi_ok)
    r.messages.push_back("Parodi relation violated: mu2+mu3 = " + fmt(c.mu2 + c.mu3) +
                         " but mu6-mu5 = " + fmt(c.mu6 - c.mu5));

  // lambda1 = 0 is rejected outright: the director equation divides by it.
  r.lambda1_negative = c.lambda1 < 0.0;
  if (!r.lambda1_negative)
    r.messages.push_back("rotational viscosity must be negative: lambda1 = mu2-mu3 = " +
                         fmt(c.lambda1));

  if (r.lambda1_negative) {
    double w1 = c.alignment_weight();
    double w2 = c.stretching_weight();
    r.alignment_nonneg = w1 >= -cond_tol;
    r.stretching_ok = w2 >= -cond_tol;
    if (!r.alignment_nonneg)
      r.messages.push_back("alignment dissipation weight negative: mu1 - lambda2^2/lambda1 = " +
                           fmt(w1));
    if (!r.stretching_ok)
      r.messages.push_back("stretching condition violated: mu5+mu6 = " + fmt(c.mu5 + c.mu6) +
                           " < -lambda2^2/lambda1 = " + fmt(-c.lambda2 * c.lambda2 / c.lambda1));
    if (r.alignment_nonneg && w1 < kWeightWarnLevel)
      r.warnings.push_back("alignment dissipation weight is nearly zero (" + fmt(w1) +
                           "); long runs dissipate only marginally in this channel");
    if (r.stretching_ok && w2 < kWeightWarnLevel)
      r.warnings.push_back("stretching dissipation weight is nearly zero (" + fmt(w2) + ")");
  } else {
    r.alignment_nonneg = false;
    r.stretching_ok = false;
  }

  r.viscosity_positive = c.mu4 > 0.0;
  if (!r.viscosity_positive)
    r.messages.push_back("Newtonian viscosity mu4 must be positive: mu4 = " + fmt(c.mu4));

  return r;
}

}  // namespace nematic2d
