#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace mec {

/// Normalization tolerance shared by every validating constructor.
inline constexpr double kMassTolerance = 1e-9;

struct Atom {
  std::size_t label;  // caller-supplied identifier, defaults to original index
  double mass;
};

/// A finite probability mass function. Atoms are stored with strictly
/// positive masses in non-increasing order; equal masses keep ascending
/// original position.
class Pmf {
 public:
  std::size_t size() const noexcept { return atoms_.size(); }
  const Atom& operator[](std::size_t k) const { return atoms_[k]; }
  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::vector<double> masses() const;

  auto begin() const noexcept { return atoms_.begin(); }
  auto end() const noexcept { return atoms_.end(); }

 private:
  friend Pmf make_pmf(std::span<const double>, std::span<const std::size_t>);
  std::vector<Atom> atoms_;
};

/// Validates, drops zero masses and sorts. Entries in [-tolerance, 0) are
/// clamped to zero. Throws Error{NegativeMass} or Error{NotNormalized}.
Pmf make_pmf(std::span<const double> raw,
             std::span<const std::size_t> labels = {});

inline Pmf make_pmf(std::initializer_list<double> raw) {
  return make_pmf(std::span<const double>(raw.begin(), raw.size()));
}

/// Information (surprisal) of atom k in bits.
double information(const Pmf& p, std::size_t k);

/// Rényi entropy of order alpha in bits. alpha == 0 counts the support and
/// alpha within 1e-9 of 1 uses the Shannon form.
double renyi_entropy(const Pmf& p, double alpha);

/// Rényi entropy of an arbitrary non-negative mass vector that is already
/// (approximately) normalized. Zero entries are ignored.
double renyi_entropy(std::span<const double> masses, double alpha);

inline double shannon_entropy(const Pmf& p) { return renyi_entropy(p, 1.0); }

/// The conditionals P_{X|Y=y} of some joint, or any collection to be coupled.
class MarginalFamily {
 public:
  explicit MarginalFamily(std::vector<Pmf> members,
                          std::optional<std::vector<double>> y_weights = {});

  std::size_t size() const noexcept { return members_.size(); }
  const Pmf& operator[](std::size_t i) const { return members_[i]; }
  std::span<const Pmf> members() const noexcept { return members_; }
  const std::optional<std::vector<double>>& y_weights() const noexcept {
    return y_weights_;
  }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

 private:
  std::vector<Pmf> members_;
  std::optional<std::vector<double>> y_weights_;
};

/// Convenience: builds each member with make_pmf.
MarginalFamily make_family(const std::vector<std::vector<double>>& members);

/// Joint masses indexed [y][x].
class JointPmf {
 public:
  explicit JointPmf(std::vector<std::vector<double>> rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t y, std::size_t x) const { return rows_[y][x]; }
  std::span<const double> row(std::size_t y) const { return rows_[y]; }

 private:
  std::vector<std::vector<double>> rows_;
  std::size_t cols_ = 0;
};

/// Row-normalizes the joint. Member y keeps x column indices as labels and
/// the row totals become the y weights.
MarginalFamily conditionals_from_joint(const JointPmf& joint);

/// Largest member Rényi entropy; the classical conditional-entropy bound.
double sup_conditional_entropy(const MarginalFamily& family, double alpha);

}  // namespace mec
