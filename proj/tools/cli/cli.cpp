#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mec/mec.hpp"

namespace mec::cli {

namespace {

using nlohmann::json;

[[noreturn]] void bad_input(const std::string& what) {
  throw Error(ErrorCode::InvalidInput, what);
}

std::vector<std::vector<double>> matrix_of(const json& node, const char* name) {
  if (!node.is_array() || node.empty()) {
    bad_input(std::string("\"") + name + "\" must be a non-empty array of arrays");
  }
  std::vector<std::vector<double>> out;
  for (const auto& row : node) {
    if (!row.is_array() || row.empty()) {
      bad_input(std::string("every entry of \"") + name + "\" must be a non-empty array");
    }
    std::vector<double> values;
    for (const auto& v : row) {
      if (!v.is_number()) bad_input(std::string("non-numeric mass in \"") + name + "\"");
      values.push_back(v.get<double>());
    }
    out.push_back(std::move(values));
  }
  return out;
}

double parse_number(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    bad_input("not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::string csv_row(std::initializer_list<double> values) {
  std::string row;
  for (double v : values) {
    if (!row.empty()) row += ',';
    row += format_fixed(v);
  }
  return row;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) bad_input("cannot open output file " + path);
  file << text;
}

}  // namespace

InputSpec parse_input(std::string_view json_text) {
  json doc = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) bad_input("malformed JSON");
  if (!doc.is_object()) bad_input("top-level JSON value must be an object");

  InputSpec spec;
  const bool has_marginals = doc.contains("marginals");
  const bool has_joint = doc.contains("joint");
  if (has_marginals == has_joint) {
    bad_input("exactly one of \"marginals\" or \"joint\" is required");
  }
  if (has_marginals) spec.marginals = matrix_of(doc["marginals"], "marginals");
  if (has_joint) spec.joint = matrix_of(doc["joint"], "joint");
  if (doc.contains("labels")) {
    const auto& labels = doc["labels"];
    if (!labels.is_array()) bad_input("\"labels\" must be an array of strings");
    std::vector<std::string> names;
    for (const auto& l : labels) {
      if (!l.is_string()) bad_input("\"labels\" must be an array of strings");
      names.push_back(l.get<std::string>());
    }
    const auto& rows = has_marginals ? *spec.marginals : *spec.joint;
    for (const auto& row : rows) {
      if (row.size() > names.size()) throw Error(ErrorCode::DimensionMismatch, "fewer labels than outcomes");
    }
    spec.labels = std::move(names);
  }
  // Validate every vector now so errors surface before any computation.
  if (spec.marginals) {
    for (const auto& row : *spec.marginals) make_pmf(row);
  } else {
    JointPmf{*spec.joint};
  }
  return spec;
}

InputSpec read_input(const std::string& path) {
  std::ifstream file(path);
  if (!file) bad_input("cannot read input file " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_input(buffer.str());
}

MarginalFamily family_of(const InputSpec& input) {
  if (input.joint) return conditionals_from_joint(JointPmf(*input.joint));
  return make_family(*input.marginals);
}

std::vector<double> parse_grid(std::string_view spec) {
  std::vector<double> values;
  if (spec.find(':') != std::string_view::npos) {
    std::vector<double> parts;
    std::size_t start = 0;
    for (;;) {
      auto pos = spec.find(':', start);
      parts.push_back(parse_number(spec.substr(start, pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    if (parts.size() != 3) bad_input("grid must look like start:stop:step");
    const double lo = parts[0], hi = parts[1], step = parts[2];
    if (!(step > 0.0) || !(hi >= lo) || !std::isfinite(hi)) {
      bad_input("grid needs step > 0 and stop >= start");
    }
    for (long long i = 0;; ++i) {
      // Snap to the 1e-12 lattice so 0.05 * 3 prints and compares as 0.15.
      double v = std::round((lo + static_cast<double>(i) * step) * 1e12) / 1e12;
      if (v > hi + 1e-12) break;
      values.push_back(v);
    }
  } else {
    std::size_t start = 0;
    for (;;) {
      auto pos = spec.find(',', start);
      values.push_back(parse_number(spec.substr(start, pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
  }
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v)) bad_input("grid values must be finite and >= 0");
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end(),
                           [](double a, double b) { return b - a <= 1e-12; }),
               values.end());
  return values;
}

std::string format_fixed(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 9);
  std::string s(buf, ec == std::errc() ? ptr : buf);
  if (s == "-0.000000000") s.erase(0, 1);
  return s;
}

std::string format_vector(std::span<const double> values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += format_fixed(values[i]);
  }
  return s + "]";
}

std::string bounds_csv(const MarginalFamily& family, std::span<const double> alphas,
                       bool with_upper, bool with_oracle) {
  BoundsEvaluator evaluator(family, with_upper);
  std::optional<std::vector<Coupling>> vertices;
  if (with_oracle) vertices = extreme_couplings(family);

  std::string out = "alpha,qstar,k_alpha,meet,sup";
  if (with_upper) out += ",greedy_upper";
  if (with_oracle) out += ",oracle";
  out += '\n';
  for (double alpha : alphas) {
    auto r = evaluator.at(alpha);
    out += csv_row({r.alpha, r.qstar_bound, r.k_alpha_bound, r.meet_bound, r.sup_bound});
    if (with_upper) out += ',' + format_fixed(*r.greedy_upper);
    if (with_oracle) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& c : *vertices) best = std::min(best, coupling_entropy(c, alpha));
      out += ',' + format_fixed(best);
    }
    out += '\n';
  }
  return out;
}

std::string spectrum_csv(const MarginalFamily& family) {
  auto cdf = cdf_envelope(family);
  auto survival = survival_envelope(family);
  std::string out = "t,C,G\n";
  for (std::size_t j = 0; j < cdf.pieces(); ++j) {
    out += csv_row({cdf.breakpoints()[j], cdf.values()[j], survival.values()[j]}) + '\n';
  }
  return out;
}

std::string example_one_report(std::span<const double> alphas, bool with_upper) {
  auto family = example_one_family();
  std::string out;
  for (std::size_t y = 0; y < family.size(); ++y) {
    out += "# member y" + std::to_string(y + 1) + "=" + format_vector(family[y].masses()) + '\n';
  }
  out += "# qstar=" + format_vector(qstar_greedy(family).masses()) + '\n';
  out += "# meet=" + format_vector(majorization_meet(family).masses()) + '\n';
  return out + bounds_csv(family, alphas, with_upper, false);
}

std::string example_two_report(std::span<const double> p_grid, double alpha,
                               double first_mass) {
  std::string header;
  std::string table = "p,qstar,k_alpha,meet,sup,greedy_upper\n";
  for (double p : p_grid) {
    if (!(p >= 0.0 && p <= 0.5)) bad_input("p must lie in [0, 0.5]");
    auto family = example_two_family(p, first_mass);
    BoundsEvaluator evaluator(family, true);
    auto r = evaluator.at(alpha);
    header += "# p=" + format_fixed(p) + " qstar=" + format_vector(evaluator.qstar().masses()) +
              " meet=" + format_vector(evaluator.meet().masses()) + '\n';
    table += csv_row({p, r.qstar_bound, r.k_alpha_bound, r.meet_bound, r.sup_bound,
                      *r.greedy_upper}) +
             '\n';
  }
  return header + table;
}

std::string frl_report(const InputSpec& input, bool with_oracle) {
  if (!input.joint) bad_input("frl needs a \"joint\" input");
  auto family = family_of(input);
  const auto& weights = *family.y_weights();
  auto coupling = greedy_coupling(family);
  auto rep = to_functional_representation(coupling, make_pmf(weights));
  auto diag = verify_representation(rep, family);
  auto bounds = compare_bounds(family, 1.0, false);

  auto x_name = [&](std::size_t x) {
    return input.labels ? (*input.labels)[x] : std::to_string(x);
  };

  std::ostringstream out;
  out << "H(Z)=" << format_fixed(renyi_entropy(rep.z, 1.0)) << '\n'
      << "support(Z)=" << rep.z.size() << '\n'
      << "H(X|Y,Z)=" << format_fixed(diag.conditional_entropy) << '\n'
      << "I(Y;Z)=" << format_fixed(diag.mutual_information) << '\n'
      << "max_marginal_deviation=" << format_fixed(diag.max_marginal_deviation) << '\n'
      << "qstar=" << format_fixed(bounds.qstar_bound) << '\n'
      << "k_alpha=" << format_fixed(bounds.k_alpha_bound) << '\n'
      << "meet=" << format_fixed(bounds.meet_bound) << '\n'
      << "sup=" << format_fixed(bounds.sup_bound) << '\n';
  if (with_oracle) {
    out << "oracle=" << format_fixed(brute_force_min_entropy(family, 1.0).entropy) << '\n';
  }
  out << "# z,mass,g(y1..ym,z)\n";
  for (const auto& z : rep.z) {
    out << "# " << z.label << ',' << format_fixed(z.mass);
    for (const auto& row : rep.g) out << ',' << x_name(row[z.label]);
    out << '\n';
  }
  return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lower and upper bounds on minimum-entropy couplings", "mec"};
  app.require_subcommand(1);

  std::string input_path;
  std::string output_path;
  std::string alpha_spec = "1";
  std::string p_spec = "0:0.5:0.01";
  bool with_upper = false;
  bool with_oracle = false;
  int which = 0;
  double first_mass = 0.9;

  auto* bounds = app.add_subcommand("bounds", "bound table over an alpha grid (CSV)");
  bounds->add_option("--input", input_path, "JSON input file")->required();
  bounds->add_option("--alpha", alpha_spec, "alpha grid: start:stop:step or a,b,c");
  bounds->add_flag("--with-upper", with_upper, "add the greedy coupling upper bound");
  bounds->add_flag("--oracle", with_oracle, "add the exact minimum (2 members, <= 4 atoms)");
  bounds->add_option("--output", output_path, "output file (default stdout)");

  auto* example = app.add_subcommand("example", "built-in worked examples");
  example->add_option("which", which, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  example->add_option("--alpha", alpha_spec, "alpha grid (example 1) or single alpha (example 2)");
  example->add_option("--p-grid", p_spec, "p grid for example 2");
  example->add_option("--first-mass", first_mass,
                      "first mass of the fixed member in example 2");
  example->add_flag("--with-upper", with_upper, "add the greedy upper bound (example 1)");
  example->add_option("--output", output_path, "output file (default stdout)");

  auto* spectrum = app.add_subcommand("spectrum", "CDF and survival envelopes (CSV)");
  spectrum->add_option("--input", input_path, "JSON input file")->required();
  spectrum->add_option("--output", output_path, "output file (default stdout)");

  auto* frl = app.add_subcommand("frl", "functional representation from a joint");
  frl->add_option("--input", input_path, "JSON input file with a joint")->required();
  frl->add_flag("--oracle", with_oracle, "add the exact minimum (2 members, <= 4 atoms)");
  frl->add_option("--output", output_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string text;
    if (bounds->parsed()) {
      auto family = family_of(read_input(input_path));
      text = bounds_csv(family, parse_grid(alpha_spec), with_upper, with_oracle);
    } else if (example->parsed()) {
      if (which == 1) {
        std::string spec = example->count("--alpha") ? alpha_spec : "0:5:0.05";
        text = example_one_report(parse_grid(spec), with_upper);
      } else {
        auto alphas = parse_grid(alpha_spec);
        if (alphas.size() != 1) bad_input("example 2 takes a single alpha");
        if (!(first_mass > 0.5 && first_mass < 1.0)) bad_input("--first-mass must lie in (0.5, 1)");
        text = example_two_report(parse_grid(p_spec), alphas.front(), first_mass);
      }
    } else if (spectrum->parsed()) {
      text = spectrum_csv(family_of(read_input(input_path)));
    } else if (frl->parsed()) {
      text = frl_report(read_input(input_path), with_oracle);
    }
    write_output(text, output_path, out);
  } catch (const Error& e) {
    err << "mec: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace mec::cli
