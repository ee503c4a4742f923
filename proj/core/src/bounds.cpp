#include "mec/bounds.hpp"

#include <algorithm>

#include "levels.hpp"
#include "mec/coupling.hpp"
#include "mec/majorization.hpp"

namespace mec {

namespace {

constexpr double kNegligibleMass = 1e-12;

}  // namespace

// Piece j of the envelope covers atom masses in (mass_hi[j+1], mass_hi[j]]
// and has value c[j]. A candidate from piece j is min(prev, c[j] - cum,
// mass_hi[j]); it is feasible because its information is at least t_lo[j]
// where C >= c[j]. The largest feasible q lies in some piece and equals that
// piece's candidate, so the greedy step is the best candidate. Pieces above
// the one holding `prev` are dominated by it and pieces whose top mass is
// below the running best cannot win, which bounds the scan.
Pmf qstar_greedy(const MarginalFamily& family) {
  const auto levels = detail::family_levels(family);
  const auto c = detail::envelope_values(family, levels);

  std::vector<double> masses;
  double cum = 0.0;
  double prev = 1.0;
  std::size_t first = 0;
  while (1.0 - cum > kNegligibleMass) {
    while (first + 1 < levels.size() && levels[first + 1].mass_hi >= prev) ++first;

    double best = 0.0;
    for (std::size_t j = first; j < levels.size(); ++j) {
      if (levels[j].mass_hi <= best) break;
      double candidate = std::min({prev, c[j] - cum, levels[j].mass_hi});
      best = std::max(best, candidate);
    }
    if (best <= kNegligibleMass) break;
    masses.push_back(best);
    cum += best;
    prev = best;
  }
  return make_pmf(masses);
}

double qstar_bound(const MarginalFamily& family, double alpha) {
  return renyi_entropy(qstar_greedy(family), alpha);
}

bool BoundsReport::ordered(double slack) const {
  bool ok = qstar_bound >= k_alpha_bound - slack &&
            qstar_bound >= meet_bound - slack &&
            k_alpha_bound >= sup_bound - slack &&
            meet_bound >= sup_bound - slack;
  if (greedy_upper) ok = ok && *greedy_upper >= qstar_bound - slack;
  return ok;
}

BoundsEvaluator::BoundsEvaluator(const MarginalFamily& family, bool with_upper)
    : family_(family),
      qstar_(qstar_greedy(family)),
      meet_(majorization_meet(family)),
      survival_(survival_envelope(family)) {
  if (with_upper) coupling_masses_ = greedy_coupling(family).masses();
}

BoundsReport BoundsEvaluator::at(double alpha) const {
  BoundsReport r;
  r.alpha = alpha;
  r.qstar_bound = renyi_entropy(qstar_, alpha);
  r.k_alpha_bound = k_alpha(survival_, alpha);
  r.meet_bound = renyi_entropy(meet_, alpha);
  r.sup_bound = sup_conditional_entropy(family_, alpha);
  if (coupling_masses_) r.greedy_upper = renyi_entropy(*coupling_masses_, alpha);
  return r;
}

BoundsReport compare_bounds(const MarginalFamily& family, double alpha,
                            bool with_upper) {
  return BoundsEvaluator(family, with_upper).at(alpha);
}

}  // namespace mec
