#pragma once

#include <span>
#include <vector>

#include "mec/dist.hpp"

namespace mec::detail {

/// Information values closer than this (in bits) are treated as one step.
/// This absorbs last-ulp differences between masses that are equal in exact
/// arithmetic but were reached by different sums.
inline constexpr double kInfoTolerance = 1e-12;

/// A cluster of coinciding information values across several PMFs.
struct Level {
  double t_lo;      // smallest information in the cluster; the breakpoint
  double t_hi;      // largest information in the cluster; evaluation point
  double mass_hi;   // largest atom mass in the cluster, i.e. 2^-t_lo exactly
};

/// Merged, ascending information levels of every atom in `pmfs`.
std::vector<Level> merged_levels(std::span<const Pmf* const> pmfs);

/// P[i(X) <= t] computed directly from the atoms.
double cdf_at(const Pmf& p, double t);

/// cdf_at(p, level.t_hi) for every level, in one sweep. Same summation
/// order as cdf_at, so the results are identical.
std::vector<double> cdf_on_levels(const Pmf& p, std::span<const Level> levels);

/// Envelope values C on the given levels: min over members of cdf_at(t_hi).
/// The last value is forced to exactly 1.
std::vector<double> envelope_values(const MarginalFamily& family,
                                    std::span<const Level> levels);

std::vector<Level> family_levels(const MarginalFamily& family);

}  // namespace mec::detail
