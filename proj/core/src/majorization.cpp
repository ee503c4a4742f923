#include "mec/majorization.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace mec {

namespace {

std::vector<double> prefix_sums(const Pmf& p, std::size_t length) {
  std::vector<double> sums(length, 0.0);
  double running = 0.0;
  for (std::size_t k = 0; k < length; ++k) {
    if (k < p.size()) running += p[k].mass;
    sums[k] = running;
  }
  return sums;
}

}  // namespace

bool majorizes(const Pmf& p, const Pmf& q, double slack) {
  const std::size_t n = std::max(p.size(), q.size());
  auto ps = prefix_sums(p, n);
  auto qs = prefix_sums(q, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (qs[k] > ps[k] + slack) return false;
  }
  return true;
}

Pmf majorization_meet(const MarginalFamily& family) {
  std::size_t n = 0;
  for (const auto& m : family) n = std::max(n, m.size());

  std::vector<double> lower(n, 1.0);
  for (const auto& m : family) {
    auto sums = prefix_sums(m, n);
    for (std::size_t k = 0; k < n; ++k) lower[k] = std::min(lower[k], sums[k]);
  }

  // The pointwise minimum of concave prefix-sum sequences is concave, so the
  // first differences are already a sorted PMF.
  std::vector<double> masses(n);
  std::adjacent_difference(lower.begin(), lower.end(), masses.begin());
  for (double& m : masses) {
    if (m < 1e-12) m = 0.0;
  }
#ifndef NDEBUG
  for (std::size_t k = 1; k < n; ++k) assert(masses[k] <= masses[k - 1] + 1e-12);
#endif
  while (!masses.empty() && masses.back() == 0.0) masses.pop_back();
  return make_pmf(masses);
}

double meet_bound(const MarginalFamily& family, double alpha) {
  return renyi_entropy(majorization_meet(family), alpha);
}

}  // namespace mec
