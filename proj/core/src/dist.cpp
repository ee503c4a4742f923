#include "mec/dist.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mec/error.hpp"

namespace mec {

namespace {

constexpr double kShannonBand = 1e-9;

double shannon(std::span<const double> masses) {
  double h = 0.0;
  for (double m : masses) {
    if (m > 0.0) h -= m * std::log2(m);
  }
  return h;
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0)) {
    throw Error(ErrorCode::NegativeAlpha,
                "alpha must be non-negative, got " + std::to_string(alpha));
  }
}

}  // namespace

std::vector<double> Pmf::masses() const {
  std::vector<double> out;
  out.reserve(atoms_.size());
  for (const auto& a : atoms_) out.push_back(a.mass);
  return out;
}

Pmf make_pmf(std::span<const double> raw, std::span<const std::size_t> labels) {
  if (raw.empty()) throw Error(ErrorCode::EmptyInput, "empty mass vector");
  if (!labels.empty() && labels.size() != raw.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "label count " + std::to_string(labels.size()) +
                    " does not match mass count " + std::to_string(raw.size()));
  }

  Pmf p;
  double total = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    double m = raw[i];
    if (!std::isfinite(m) || m < -kMassTolerance) {
      throw Error(ErrorCode::NegativeMass,
                  "entry " + std::to_string(i) + " is " + std::to_string(m));
    }
    total += std::max(m, 0.0);
    if (m > 0.0) p.atoms_.push_back({labels.empty() ? i : labels[i], m});
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw Error(ErrorCode::NotNormalized,
                "masses sum to " + std::to_string(total));
  }
  // Stable sort keeps ascending original position among ties.
  std::stable_sort(p.atoms_.begin(), p.atoms_.end(),
                   [](const Atom& a, const Atom& b) { return a.mass > b.mass; });
  return p;
}

double information(const Pmf& p, std::size_t k) {
  if (k >= p.size()) {
    throw Error(ErrorCode::DimensionMismatch, "atom index " + std::to_string(k) + " out of range");
  }
  return -std::log2(p[k].mass);
}

double renyi_entropy(std::span<const double> masses, double alpha) {
  check_alpha(alpha);
  if (alpha == 0.0) {
    auto support = std::count_if(masses.begin(), masses.end(),
                                 [](double m) { return m > 0.0; });
    return support > 0 ? std::log2(static_cast<double>(support)) : 0.0;
  }
  if (std::abs(alpha - 1.0) < kShannonBand) return shannon(masses);

  // log2 sum m^a = a log2 m_max + log2 sum (m / m_max)^a keeps large orders
  // away from underflow.
  double peak = 0.0;
  for (double m : masses) peak = std::max(peak, m);
  if (peak <= 0.0) return 0.0;
  double scaled = 0.0;
  for (double m : masses) {
    if (m > 0.0) scaled += std::pow(m / peak, alpha);
  }
  double log_sum = alpha * std::log2(peak) + std::log2(scaled);
  return std::max(0.0, log_sum / (1.0 - alpha));
}

double renyi_entropy(const Pmf& p, double alpha) {
  auto m = p.masses();
  return renyi_entropy(m, alpha);
}

MarginalFamily::MarginalFamily(std::vector<Pmf> members,
                               std::optional<std::vector<double>> y_weights)
    : members_(std::move(members)), y_weights_(std::move(y_weights)) {
  if (members_.empty()) throw Error(ErrorCode::EmptyInput, "family has no members");
  if (y_weights_) {
    if (y_weights_->size() != members_.size()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "y weights and members differ in length");
    }
    double total = 0.0;
    for (double w : *y_weights_) {
      if (!(w > 0.0)) throw Error(ErrorCode::NegativeMass, "y weight must be positive");
      total += w;
    }
    if (std::abs(total - 1.0) > kMassTolerance) {
      throw Error(ErrorCode::NotNormalized, "y weights sum to " + std::to_string(total));
    }
  }
}

MarginalFamily make_family(const std::vector<std::vector<double>>& members) {
  std::vector<Pmf> pmfs;
  pmfs.reserve(members.size());
  for (const auto& m : members) pmfs.push_back(make_pmf(m));
  return MarginalFamily(std::move(pmfs));
}

JointPmf::JointPmf(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw Error(ErrorCode::EmptyInput, "joint has no rows");
  cols_ = rows_.front().size();
  double total = 0.0;
  for (std::size_t y = 0; y < rows_.size(); ++y) {
    auto& row = rows_[y];
    if (row.size() != cols_) {
      throw Error(ErrorCode::DimensionMismatch, "joint rows differ in length");
    }
    double row_total = 0.0;
    for (double& m : row) {
      if (!std::isfinite(m) || m < -kMassTolerance) {
        throw Error(ErrorCode::NegativeMass,
                    "joint entry in row " + std::to_string(y) + " is " + std::to_string(m));
      }
      m = std::max(m, 0.0);
      row_total += m;
    }
    if (!(row_total > 0.0)) {
      throw Error(ErrorCode::EmptyRow, "row " + std::to_string(y) + " has zero mass");
    }
    total += row_total;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw Error(ErrorCode::NotNormalized, "joint sums to " + std::to_string(total));
  }
}

MarginalFamily conditionals_from_joint(const JointPmf& joint) {
  std::vector<Pmf> members;
  std::vector<double> weights;
  members.reserve(joint.rows());
  for (std::size_t y = 0; y < joint.rows(); ++y) {
    auto row = joint.row(y);
    double w = std::accumulate(row.begin(), row.end(), 0.0);
    if (!(w > 0.0)) {
      throw Error(ErrorCode::EmptyRow, "row " + std::to_string(y) + " has zero mass");
    }
    std::vector<double> conditional(row.begin(), row.end());
    for (double& m : conditional) m /= w;
    members.push_back(make_pmf(conditional));
    weights.push_back(w);
  }
  // Renormalize weights so that a joint within tolerance of 1 still yields
  // exactly normalized y weights.
  double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w /= total;
  return MarginalFamily(std::move(members), std::move(weights));
}

double sup_conditional_entropy(const MarginalFamily& family, double alpha) {
  double best = 0.0;
  for (const auto& member : family) {
    best = std::max(best, renyi_entropy(member, alpha));
  }
  return best;
}

}  // namespace mec
