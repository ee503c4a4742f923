#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mec/dist.hpp"

namespace mec {

/// One cell of a coupling: for member i, atoms[i] is a storage index into
/// family[i].
struct CouplingEntry {
  std::vector<std::size_t> atoms;
  double mass;
};

/// Sparse joint distribution of (X_1, ..., X_m) with X_i ~ family[i].
class Coupling {
 public:
  /// Entries below 1e-12 are pruned and repeated tuples merged. Throws
  /// Error{DimensionMismatch} on malformed tuples and Error{InvalidInput}
  /// when a marginal is off by more than a few normalization tolerances.
  Coupling(MarginalFamily family, std::vector<CouplingEntry> entries);

  const MarginalFamily& family() const noexcept { return family_; }
  std::span<const CouplingEntry> entries() const noexcept { return entries_; }
  std::vector<double> masses() const;

  /// Largest |marginal_i(a) - family[i](a)| over all members and atoms.
  double marginal_deviation() const;

 private:
  MarginalFamily family_;
  std::vector<CouplingEntry> entries_;
};

/// Greedy coupling: repeatedly pair the largest residual atom of every member
/// with the smallest of those maxima. At most sum of support sizes entries.
Coupling greedy_coupling(const MarginalFamily& family);

double coupling_entropy(const Coupling& coupling, double alpha);

/// X = g(Y, Z) with Z independent of Y.
struct FunctionalRepresentation {
  /// Labels of z atoms index the coupling entry they came from.
  Pmf z;
  /// g[y][z label] is the x label produced for that (y, z).
  std::vector<std::vector<std::size_t>> g;
  /// Labels are y indices.
  Pmf y_weights;
  /// Optional P(z | y) indexed [y][z label]. Absent means Z ~ z for every y.
  std::optional<std::vector<std::vector<double>>> z_given_y;
};

/// Z is the coupling tuple and g(y_j, z) projects it onto coordinate j.
/// Throws Error{DimensionMismatch} if y_weights does not have one atom per
/// member.
FunctionalRepresentation to_functional_representation(const Coupling& coupling,
                                                      const Pmf& y_weights);

struct RepresentationDiagnostics {
  double conditional_entropy;     // H(X | Y, Z)
  double mutual_information;      // I(Y; Z)
  double max_marginal_deviation;  // max_y,x |P(x|y) from g - family[y](x)|
};

/// Builds the explicit joint of (X, Y, Z) and measures how far the
/// representation is from satisfying its defining conditions.
RepresentationDiagnostics verify_representation(
    const FunctionalRepresentation& rep, const MarginalFamily& family);

/// All vertices of the transportation polytope of a two-member family,
/// deduplicated on masses rounded to 1e-10.
std::vector<Coupling> extreme_couplings(const MarginalFamily& family);

struct OracleResult {
  double entropy;
  Coupling coupling;
};

/// Exact minimum H_alpha over all couplings of a two-member family with
/// supports of at most four atoms, by vertex enumeration. Throws
/// Error{TooLarge} otherwise.
OracleResult brute_force_min_entropy(const MarginalFamily& family, double alpha);

}  // namespace mec
