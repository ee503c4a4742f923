#include "mec/reference_families.hpp"

namespace mec {

MarginalFamily example_one_family() {
  return make_family({
      {0.5, 0.125, 0.125, 0.125, 0.125, 0.0},
      {0.4, 0.4, 0.1, 0.1, 0.0, 0.0},
      {0.35, 0.35, 0.25, 0.04, 0.005, 0.005},
  });
}

MarginalFamily example_two_family(double p, double first_mass) {
  return make_family({{first_mass, 1.0 - first_mass}, {1.0 - p, p}});
}

}  // namespace mec
