#pragma once

#include <optional>
#include <vector>

#include "mec/dist.hpp"
#include "mec/spectrum.hpp"

namespace mec {

/// The majorization-maximal Q with Q <=_i P_y for every member, built
/// greedily: each next mass is the largest q <= previous mass such that
/// (mass so far) + q <= C(log2(1/q)), with C the CDF envelope.
Pmf qstar_greedy(const MarginalFamily& family);

/// H_alpha(Q*), the tightest of the spectrum-based lower bounds.
double qstar_bound(const MarginalFamily& family, double alpha);

struct BoundsReport {
  double alpha = 1.0;
  double qstar_bound = 0.0;
  double k_alpha_bound = 0.0;
  double meet_bound = 0.0;
  double sup_bound = 0.0;
  std::optional<double> greedy_upper;

  /// Checks the ordering qstar >= {k_alpha, meet} >= sup and
  /// greedy_upper >= qstar, each with the given slack.
  bool ordered(double slack = 1e-9) const;
};

/// Caches everything about a family that does not depend on alpha, so a
/// sweep over alpha only evaluates entropies.
class BoundsEvaluator {
 public:
  explicit BoundsEvaluator(const MarginalFamily& family, bool with_upper = false);

  BoundsReport at(double alpha) const;

  const Pmf& qstar() const noexcept { return qstar_; }
  const Pmf& meet() const noexcept { return meet_; }
  const StepFunction& survival() const noexcept { return survival_; }

 private:
  MarginalFamily family_;
  Pmf qstar_;
  Pmf meet_;
  StepFunction survival_;
  std::optional<std::vector<double>> coupling_masses_;
};

BoundsReport compare_bounds(const MarginalFamily& family, double alpha,
                            bool with_upper = false);

}  // namespace mec
