#pragma once

#include <span>
#include <vector>

#include "mec/dist.hpp"

namespace mec {

/// Right-continuous piecewise-constant function on [0, inf).
///
/// The function equals `leading` on [0, breakpoints[0]) and values[j] on
/// [breakpoints[j], breakpoints[j+1]); the last value extends to infinity.
/// Information-spectrum CDFs use leading = 0, survival envelopes leading = 1.
class StepFunction {
 public:
  StepFunction() = default;
  StepFunction(double leading, std::vector<double> breakpoints,
               std::vector<double> values);

  double operator()(double t) const;

  double leading() const noexcept { return leading_; }
  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t pieces() const noexcept { return breakpoints_.size(); }

 private:
  double leading_ = 0.0;
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

/// CDF of the information of p, t -> P[i(X) <= t].
StepFunction info_spectrum(const Pmf& p);

/// Pointwise minimum of the members' information spectra, on the union of
/// their breakpoints. This is the constraint every Q with Q <=_i P_y for all
/// y must satisfy: F_Q(t) <= C(t).
StepFunction cdf_envelope(const MarginalFamily& family);

/// G(t) = sup_y P[i(X) > t | Y=y] = 1 - C(t), same breakpoints as C.
StepFunction survival_envelope(const MarginalFamily& family);

/// True iff F_q(t) <= F_p(t) + slack for every t, i.e. q <=_i p.
bool spectrum_dominates(const Pmf& q, const Pmf& p, double slack = 1e-9);

/// Spectrum-integral lower bound K_alpha on the minimum coupling entropy.
/// Every integral is evaluated in closed form per piece of G.
double k_alpha(const MarginalFamily& family, double alpha);

/// Same as above with a precomputed survival envelope.
double k_alpha(const StepFunction& survival, double alpha);

/// Earlier tau-slack converse: max(0, G(t + tau) - base^(-tau)), a lower
/// bound on P[i(Z) > t]. The default base is e.
double old_spectrum_lower_bound(const MarginalFamily& family, double t,
                                double tau, double base = 2.718281828459045);

}  // namespace mec
