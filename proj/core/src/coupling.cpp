#include "mec/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "mec/error.hpp"

namespace mec {

namespace {

constexpr double kSaturated = 1e-12;

double entropy_of(const std::map<std::vector<std::size_t>, double>& cells) {
  std::vector<double> masses;
  masses.reserve(cells.size());
  for (const auto& [key, mass] : cells) masses.push_back(mass);
  return renyi_entropy(masses, 1.0);
}

}  // namespace

Coupling::Coupling(MarginalFamily family, std::vector<CouplingEntry> entries)
    : family_(std::move(family)) {
  const std::size_t m = family_.size();
  std::map<std::vector<std::size_t>, double> merged;
  for (auto& e : entries) {
    if (e.atoms.size() != m) {
      throw Error(ErrorCode::DimensionMismatch,
                  "coupling tuple has " + std::to_string(e.atoms.size()) +
                      " coordinates for " + std::to_string(m) + " members");
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (e.atoms[i] >= family_[i].size()) {
        throw Error(ErrorCode::DimensionMismatch, "coupling atom index out of range");
      }
    }
    if (e.mass < 0.0) throw Error(ErrorCode::NegativeMass, "negative coupling mass");
    merged[e.atoms] += e.mass;
  }
  for (auto& [atoms, mass] : merged) {
    if (mass >= kSaturated) entries_.push_back({atoms, mass});
  }
  if (marginal_deviation() > 4 * kMassTolerance) {
    throw Error(ErrorCode::InvalidInput,
                "coupling marginals deviate by " + std::to_string(marginal_deviation()));
  }
}

std::vector<double> Coupling::masses() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.mass);
  return out;
}

double Coupling::marginal_deviation() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < family_.size(); ++i) {
    std::vector<double> marginal(family_[i].size(), 0.0);
    for (const auto& e : entries_) marginal[e.atoms[i]] += e.mass;
    for (std::size_t a = 0; a < marginal.size(); ++a) {
      worst = std::max(worst, std::abs(marginal[a] - family_[i][a].mass));
    }
  }
  return worst;
}

Coupling greedy_coupling(const MarginalFamily& family) {
  const std::size_t m = family.size();
  std::vector<std::vector<double>> residual;
  for (const auto& member : family) residual.push_back(member.masses());

  std::vector<CouplingEntry> entries;
  std::vector<std::size_t> pick(m);
  for (;;) {
    double r = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      // max_element returns the first maximum, i.e. the lowest index on ties.
      auto it = std::max_element(residual[i].begin(), residual[i].end());
      pick[i] = static_cast<std::size_t>(it - residual[i].begin());
      r = std::min(r, *it);
    }
    if (r <= kSaturated) break;
    for (std::size_t i = 0; i < m; ++i) {
      double& left = residual[i][pick[i]];
      left -= r;
      if (left <= kSaturated) left = 0.0;
    }
    entries.push_back({pick, r});
  }
  return Coupling(family, std::move(entries));
}

double coupling_entropy(const Coupling& coupling, double alpha) {
  // Same order as a Pmf of the masses, so both give bit-identical sums.
  auto masses = coupling.masses();
  std::sort(masses.begin(), masses.end(), std::greater<>());
  return renyi_entropy(masses, alpha);
}

FunctionalRepresentation to_functional_representation(const Coupling& coupling,
                                                      const Pmf& y_weights) {
  const auto& family = coupling.family();
  const std::size_t m = family.size();
  if (y_weights.size() != m) {
    throw Error(ErrorCode::DimensionMismatch,
                "y weights have " + std::to_string(y_weights.size()) +
                    " atoms for " + std::to_string(m) + " members");
  }
  auto entries = coupling.entries();
  std::vector<double> masses;
  std::vector<std::size_t> labels;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    masses.push_back(entries[k].mass);
    labels.push_back(k);
  }

  FunctionalRepresentation rep{make_pmf(masses, labels), {}, y_weights, {}};
  rep.g.assign(m, std::vector<std::size_t>(entries.size()));
  for (std::size_t y = 0; y < m; ++y) {
    for (std::size_t k = 0; k < entries.size(); ++k) {
      rep.g[y][k] = family[y][entries[k].atoms[y]].label;
    }
  }
  return rep;
}

RepresentationDiagnostics verify_representation(const FunctionalRepresentation& rep,
                                                const MarginalFamily& family) {
  const std::size_t m = family.size();
  if (rep.g.size() != m) {
    throw Error(ErrorCode::DimensionMismatch, "g table has wrong number of y rows");
  }
  std::vector<double> weight(m, 0.0);
  for (const auto& a : rep.y_weights) {
    if (a.label >= m) throw Error(ErrorCode::DimensionMismatch, "y label out of range");
    weight[a.label] = a.mass;
  }
  std::size_t z_count = 0;
  for (const auto& a : rep.z) z_count = std::max(z_count, a.label + 1);
  for (const auto& row : rep.g) {
    if (row.size() < z_count) {
      throw Error(ErrorCode::InvalidInput, "g table is not total on the support of Z");
    }
  }

  auto z_given = [&](std::size_t y, const Atom& z) {
    if (rep.z_given_y) return (*rep.z_given_y)[y].at(z.label);
    return z.mass;
  };

  // Explicit joint over (x, y, z) plus its (y, z), y and z marginals.
  std::map<std::vector<std::size_t>, double> xyz, yz, ys, zs;
  double deviation = 0.0;
  for (std::size_t y = 0; y < m; ++y) {
    std::map<std::size_t, double> pushforward;
    for (const auto& z : rep.z) {
      double pz = z_given(y, z);
      double mass = weight[y] * pz;
      std::size_t x = rep.g[y][z.label];
      pushforward[x] += pz;
      if (mass <= 0.0) continue;
      xyz[{x, y, z.label}] += mass;
      yz[{y, z.label}] += mass;
      ys[{y}] += mass;
      zs[{z.label}] += mass;
    }
    for (const auto& a : family[y]) {
      auto it = pushforward.find(a.label);
      double got = it == pushforward.end() ? 0.0 : it->second;
      deviation = std::max(deviation, std::abs(got - a.mass));
      if (it != pushforward.end()) pushforward.erase(it);
    }
    for (const auto& [x, mass] : pushforward) deviation = std::max(deviation, mass);
  }

  double h_xyz = entropy_of(xyz);
  double h_yz = entropy_of(yz);
  RepresentationDiagnostics d;
  d.conditional_entropy = std::max(0.0, h_xyz - h_yz);
  d.mutual_information = std::max(0.0, entropy_of(ys) + entropy_of(zs) - h_yz);
  d.max_marginal_deviation = deviation;
  return d;
}

namespace {

// Vertex enumeration for two marginals. A vertex of the transportation
// polytope has a forest support; peeling a leaf cell always assigns
// min(row residual, column residual), so every vertex is produced by some
// sequence of saturating assignments.
class VertexEnumerator {
 public:
  using Cells = std::vector<std::pair<std::size_t, double>>;  // (row * cols + col, mass)
  using Completions = std::vector<Cells>;

  VertexEnumerator(std::vector<double> rows, std::vector<double> cols)
      : rows_(std::move(rows)), cols_(std::move(cols)) {}

  const Completions& run() { return expand(rows_, cols_); }
  std::size_t width() const { return cols_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<long long>& k) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (long long v : k) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
      return h;
    }
  };

  static std::vector<long long> key_of(const std::vector<double>& a,
                                       const std::vector<double>& b) {
    std::vector<long long> key;
    for (double v : a) key.push_back(std::llround(v * 1e12));
    for (double v : b) key.push_back(std::llround(v * 1e12));
    return key;
  }

  static std::vector<long long> vertex_key(const Cells& cells) {
    std::vector<long long> key;
    for (const auto& [cell, mass] : cells) {
      key.push_back(static_cast<long long>(cell));
      key.push_back(std::llround(mass * 1e10));
    }
    return key;
  }

  const Completions& expand(const std::vector<double>& r, const std::vector<double>& c) {
    auto key = key_of(r, c);
    if (auto it = memo_.find(key); it != memo_.end()) return *it->second;

    auto out = std::make_shared<Completions>();
    std::unordered_set<std::vector<long long>, KeyHash> seen;
    bool any = false;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] <= kSaturated) continue;
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] <= kSaturated) continue;
        any = true;
        double v = std::min(r[i], c[j]);
        auto nr = r;
        auto nc = c;
        nr[i] = r[i] <= c[j] ? 0.0 : r[i] - v;
        nc[j] = c[j] <= r[i] ? 0.0 : c[j] - v;
        if (nr[i] <= kSaturated) nr[i] = 0.0;
        if (nc[j] <= kSaturated) nc[j] = 0.0;
        for (const auto& tail : expand(nr, nc)) {
          Cells cells = tail;
          cells.emplace_back(i * c.size() + j, v);
          std::sort(cells.begin(), cells.end());
          if (seen.insert(vertex_key(cells)).second) out->push_back(std::move(cells));
        }
      }
    }
    if (!any) out->push_back({});
    auto [it, inserted] = memo_.emplace(std::move(key), std::move(out));
    return *it->second;
  }


  std::vector<double> rows_;
  std::vector<double> cols_;
  std::unordered_map<std::vector<long long>, std::shared_ptr<Completions>, KeyHash> memo_;
};

void require_small(const MarginalFamily& family) {
  if (family.size() != 2 || family[0].size() > 4 || family[1].size() > 4) {
    throw Error(ErrorCode::TooLarge,
                "vertex enumeration needs two members with at most four atoms each");
  }
}

Coupling to_coupling(const MarginalFamily& family, const VertexEnumerator::Cells& cells,
                     std::size_t width) {
  std::vector<CouplingEntry> entries;
  for (const auto& [cell, mass] : cells) {
    entries.push_back({{cell / width, cell % width}, mass});
  }
  return Coupling(family, std::move(entries));
}

}  // namespace

std::vector<Coupling> extreme_couplings(const MarginalFamily& family) {
  require_small(family);
  VertexEnumerator enumerator(family[0].masses(), family[1].masses());
  const auto& vertices = enumerator.run();

  std::vector<Coupling> out;
  out.reserve(vertices.size());
  for (const auto& cells : vertices) out.push_back(to_coupling(family, cells, enumerator.width()));
  return out;
}

OracleResult brute_force_min_entropy(const MarginalFamily& family, double alpha) {
  require_small(family);
  VertexEnumerator enumerator(family[0].masses(), family[1].masses());
  const auto& vertices = enumerator.run();

  // Score raw cells; only the winner becomes a Coupling.
  std::size_t best = 0;
  double best_h = INFINITY;
  std::vector<double> masses;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    masses.clear();
    for (const auto& cell : vertices[k]) masses.push_back(cell.second);
    std::sort(masses.begin(), masses.end(), std::greater<>());
    double h = renyi_entropy(masses, alpha);
    if (h < best_h) {
      best_h = h;
      best = k;
    }
  }
  auto coupling = to_coupling(family, vertices[best], enumerator.width());
  return {coupling_entropy(coupling, alpha), std::move(coupling)};
}

}  // namespace mec
