#pragma once

#include "mec/dist.hpp"

namespace mec {

/// Three conditionals on six outcomes whose bounds cross over in alpha.
MarginalFamily example_one_family();

/// Binary conditionals {[0.9, 0.1], [1 - p, p]} for p in [0, 0.5].
/// `first_mass` sets the fixed member to [first_mass, 1 - first_mass].
MarginalFamily example_two_family(double p, double first_mass = 0.9);

}  // namespace mec
