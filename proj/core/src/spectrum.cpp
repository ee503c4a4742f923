#include "mec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "levels.hpp"
#include "mec/error.hpp"

namespace mec {

namespace detail {

std::vector<Level> merged_levels(std::span<const Pmf* const> pmfs) {
  struct Point {
    double info;
    double mass;
  };
  std::vector<Point> points;
  for (const Pmf* p : pmfs) {
    for (const auto& a : *p) points.push_back({-std::log2(a.mass), a.mass});
  }
  std::sort(points.begin(), points.end(),
            [](const Point& a, const Point& b) { return a.info < b.info; });

  std::vector<Level> levels;
  for (const auto& pt : points) {
    if (!levels.empty() && pt.info - levels.back().t_lo <= kInfoTolerance) {
      levels.back().t_hi = pt.info;
      levels.back().mass_hi = std::max(levels.back().mass_hi, pt.mass);
    } else {
      levels.push_back({pt.info, pt.info, pt.mass});
    }
  }
  return levels;
}

double cdf_at(const Pmf& p, double t) {
  double total = 0.0;
  for (const auto& a : p) {
    if (-std::log2(a.mass) <= t) total += a.mass;
  }
  return std::min(total, 1.0);
}

std::vector<double> cdf_on_levels(const Pmf& p, std::span<const Level> levels) {
  std::vector<double> values;
  values.reserve(levels.size());
  std::size_t k = 0;
  double total = 0.0;
  for (const auto& level : levels) {
    // Atoms are sorted by decreasing mass, so information is increasing.
    while (k < p.size() && -std::log2(p[k].mass) <= level.t_hi) total += p[k++].mass;
    values.push_back(std::min(total, 1.0));
  }
  return values;
}

std::vector<Level> family_levels(const MarginalFamily& family) {
  std::vector<const Pmf*> ptrs;
  for (const auto& m : family) ptrs.push_back(&m);
  return merged_levels(ptrs);
}

std::vector<double> envelope_values(const MarginalFamily& family,
                                    std::span<const Level> levels) {
  std::vector<double> values(levels.size(), 1.0);
  for (const auto& member : family) {
    auto f = cdf_on_levels(member, levels);
    for (std::size_t j = 0; j < levels.size(); ++j) values[j] = std::min(values[j], f[j]);
  }
  if (!values.empty()) values.back() = 1.0;
  return values;
}

}  // namespace detail

StepFunction::StepFunction(double leading, std::vector<double> breakpoints,
                           std::vector<double> values)
    : leading_(leading),
      breakpoints_(std::move(breakpoints)),
      values_(std::move(values)) {
  if (breakpoints_.size() != values_.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "step function needs one value per breakpoint");
  }
  for (std::size_t j = 1; j < breakpoints_.size(); ++j) {
    if (!(breakpoints_[j] > breakpoints_[j - 1])) {
      throw Error(ErrorCode::InvalidInput, "breakpoints must be strictly increasing");
    }
  }
}

double StepFunction::operator()(double t) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  if (it == breakpoints_.begin()) return leading_;
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

StepFunction info_spectrum(const Pmf& p) {
  const Pmf* ptr = &p;
  auto levels = detail::merged_levels(std::span<const Pmf* const>(&ptr, 1));
  std::vector<double> breakpoints;
  for (const auto& level : levels) breakpoints.push_back(level.t_lo);
  auto values = detail::cdf_on_levels(p, levels);
  values.back() = 1.0;
  return StepFunction(0.0, std::move(breakpoints), std::move(values));
}

StepFunction cdf_envelope(const MarginalFamily& family) {
  auto levels = detail::family_levels(family);
  std::vector<double> breakpoints;
  for (const auto& level : levels) breakpoints.push_back(level.t_lo);
  return StepFunction(0.0, std::move(breakpoints),
                      detail::envelope_values(family, levels));
}

StepFunction survival_envelope(const MarginalFamily& family) {
  auto cdf = cdf_envelope(family);
  std::vector<double> values(cdf.values().begin(), cdf.values().end());
  for (double& v : values) v = 1.0 - v;
  values.back() = 0.0;
  return StepFunction(1.0, {cdf.breakpoints().begin(), cdf.breakpoints().end()},
                      std::move(values));
}

bool spectrum_dominates(const Pmf& q, const Pmf& p, double slack) {
  const Pmf* both[] = {&q, &p};
  const auto levels = detail::merged_levels(both);
  const auto fq = detail::cdf_on_levels(q, levels);
  const auto fp = detail::cdf_on_levels(p, levels);
  for (std::size_t j = 0; j < levels.size(); ++j) {
    if (fq[j] > fp[j] + slack) return false;
  }
  return true;
}

double k_alpha(const StepFunction& survival, double alpha) {
  if (!(alpha >= 0.0)) throw Error(ErrorCode::NegativeAlpha, "alpha must be non-negative");
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double tail = survival.pieces() ? survival.values().back() : survival.leading();

  // Pieces as (start, end, value); the leading piece starts at zero.
  auto bps = survival.breakpoints();
  auto vals = survival.values();
  auto for_each_piece = [&](auto&& fn) {
    double start = 0.0;
    double value = survival.leading();
    for (std::size_t j = 0; j < bps.size(); ++j) {
      if (bps[j] > start) fn(start, bps[j], value);
      start = bps[j];
      value = vals[j];
    }
  };

  if (std::abs(alpha - 1.0) < 1e-9) {
    if (tail > 0.0) return inf;
    double integral = 0.0;
    for_each_piece([&](double a, double b, double g) { integral += g * (b - a); });
    return integral;
  }

  // (1 - alpha) ln 2 * int G(t) 2^{(1-alpha) t} dt, exactly per piece:
  // g * (2^{x b} - 2^{x a}) = g * 2^{x a} * expm1(x (b - a) ln 2).
  const double x = 1.0 - alpha;
  const double ln2 = std::numbers::ln2;
  double sum = 0.0;
  for_each_piece([&](double a, double b, double g) {
    if (g != 0.0) sum += g * std::exp2(x * a) * std::expm1(x * (b - a) * ln2);
  });
  if (tail > 0.0) {
    if (x > 0.0) return inf;
    double last = bps.empty() ? 0.0 : bps.back();
    sum -= tail * std::exp2(x * last);
  }
  double k = std::log1p(sum) / ln2 / x;
  return std::max(k, 0.0);
}

double k_alpha(const MarginalFamily& family, double alpha) {
  if (!(alpha >= 0.0)) throw Error(ErrorCode::NegativeAlpha, "alpha must be non-negative");
  return k_alpha(survival_envelope(family), alpha);
}

double old_spectrum_lower_bound(const MarginalFamily& family, double t,
                                double tau, double base) {
  if (!(t >= 0.0) || !(tau > 0.0) || !(base > 1.0)) {
    throw Error(ErrorCode::InvalidInput, "need t >= 0, tau > 0 and base > 1");
  }
  double g = 0.0;
  for (const auto& member : family) {
    g = std::max(g, 1.0 - detail::cdf_at(member, t + tau));
  }
  return std::max(0.0, g - std::pow(base, -tau));
}

}  // namespace mec
