#pragma once

#include "mec/dist.hpp"

namespace mec {

/// True iff q <=_m p: every prefix sum of q is at most the matching prefix
/// sum of p (plus slack), with the shorter vector zero-padded.
bool majorizes(const Pmf& p, const Pmf& q, double slack = kMassTolerance);

/// Greatest lower bound of the members in the majorization lattice. Its
/// prefix-sum vector is the pointwise minimum of the members' prefix sums.
Pmf majorization_meet(const MarginalFamily& family);

/// H_alpha of the meet.
double meet_bound(const MarginalFamily& family, double alpha);

}  // namespace mec
