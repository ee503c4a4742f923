#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mec/dist.hpp"

namespace mec::cli {

/// Parsed input document: exactly one of `marginals` or `joint`.
struct InputSpec {
  std::optional<std::vector<std::vector<double>>> marginals;
  std::optional<std::vector<std::vector<double>>> joint;
  std::optional<std::vector<std::string>> labels;
};

/// Parses {"marginals": [[...], ...]} or {"joint": [[...], ...]} with an
/// optional "labels" array. Throws mec::Error{InvalidInput} on malformed
/// documents and the usual validation errors on bad masses.
InputSpec parse_input(std::string_view json_text);
InputSpec read_input(const std::string& path);

/// Conditionals of the joint, or the marginals as given.
MarginalFamily family_of(const InputSpec& input);

/// "start:stop:step" (endpoints inclusive within 1e-12) or "a,b,c".
/// Values are sorted and deduplicated.
std::vector<double> parse_grid(std::string_view spec);

/// Fixed-point, nine decimals, '.' separator regardless of locale.
std::string format_fixed(double value);
std::string format_vector(std::span<const double> values);

std::string bounds_csv(const MarginalFamily& family, std::span<const double> alphas,
                       bool with_upper, bool with_oracle);

/// One row (t, C(t), G(t)) per merged breakpoint.
std::string spectrum_csv(const MarginalFamily& family);

std::string example_one_report(std::span<const double> alphas, bool with_upper);
std::string example_two_report(std::span<const double> p_grid, double alpha,
                               double first_mass);

std::string frl_report(const InputSpec& input, bool with_oracle);

/// Entry point shared by the executable and the tests. Returns the process
/// exit code: 0 on success, 2 on usage or input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mec::cli
