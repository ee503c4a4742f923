#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "mec/error.hpp"
#include "mec/spectrum.hpp"

using namespace mec;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "mec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(MEC_FIXTURE_DIR) + "/" + name; }

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("parse_input") {
  SUBCASE("marginals") {
    auto spec = cli::parse_input(R"({"marginals": [[0.5, 0.5], [1.0]]})");
    REQUIRE(spec.marginals);
    CHECK_FALSE(spec.joint);
    CHECK(cli::family_of(spec).size() == 2);
  }
  SUBCASE("joint with labels") {
    auto spec = cli::parse_input(R"({"joint": [[0.25, 0.25], [0.5, 0.0]], "labels": ["a", "b"]})");
    REQUIRE(spec.joint);
    REQUIRE(spec.labels);
    auto f = cli::family_of(spec);
    CHECK(f.size() == 2);
    CHECK(f[1].size() == 1);
  }
  SUBCASE("errors") {
    CHECK(code_of([] { cli::parse_input("{\"marginals\": [[0.5, 0.5]"); }) ==
          ErrorCode::InvalidInput);
    CHECK(code_of([] { cli::parse_input("[1, 2]"); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { cli::parse_input("{}"); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] {
            cli::parse_input(R"({"marginals": [[1.0]], "joint": [[1.0]]})");
          }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { cli::parse_input(R"({"marginals": [["x"]]})"); }) ==
          ErrorCode::InvalidInput);
    CHECK(code_of([] { cli::parse_input(R"({"marginals": [[0.5, 0.4]]})"); }) ==
          ErrorCode::NotNormalized);
    CHECK(code_of([] { cli::parse_input(R"({"marginals": [[1.5, -0.5]]})"); }) ==
          ErrorCode::NegativeMass);
    CHECK(code_of([] { cli::parse_input(R"({"joint": [[0.5, 0.5], [0.0, 0.0]]})"); }) ==
          ErrorCode::EmptyRow);
    CHECK(code_of([] {
            cli::parse_input(R"({"marginals": [[0.5, 0.5]], "labels": ["a"]})");
          }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([] { cli::read_input(fixture("does_not_exist.json")); }) ==
          ErrorCode::InvalidInput);
  }
}

TEST_CASE("parse_grid") {
  auto g = cli::parse_grid("0:5:0.05");
  REQUIRE(g.size() == 101);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == doctest::Approx(5.0));
  CHECK(g[69] == doctest::Approx(3.45));
  CHECK(cli::parse_grid("0:0.5:0.01").size() == 51);
  CHECK(cli::parse_grid("2,1,2,0.5") == std::vector<double>{0.5, 1.0, 2.0});
  CHECK(cli::parse_grid("1.5") == std::vector<double>{1.5});
  CHECK_THROWS_AS(cli::parse_grid("1:0:0.1"), Error);
  CHECK_THROWS_AS(cli::parse_grid("0:1:0"), Error);
  CHECK_THROWS_AS(cli::parse_grid("a,b"), Error);
  CHECK_THROWS_AS(cli::parse_grid("-1"), Error);
}

TEST_CASE("format_fixed") {
  CHECK(cli::format_fixed(0.0) == "0.000000000");
  CHECK(cli::format_fixed(1.0 / 3.0) == "0.333333333");
  CHECK(cli::format_fixed(2.0) == "2.000000000");
  CHECK(cli::format_fixed(-1e-15) == "0.000000000");
  CHECK(cli::format_fixed(1.25e-10) == "0.000000000");
  std::vector<double> v{0.9, 0.1};
  CHECK(cli::format_vector(v) == "[0.900000000,0.100000000]");
}

TEST_CASE("bounds subcommand") {
  SUBCASE("single marginal gives four equal columns") {
    auto r = invoke({"bounds", "--input", fixture("single_marginal.json"), "--alpha", "0,0.5,1,2,10"});
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == std::vector<std::string>{"alpha", "qstar", "k_alpha", "meet", "sup"});
    for (std::size_t k = 1; k < rows.size(); ++k) {
      CHECK(rows[k][1] == rows[k][2]);
      CHECK(rows[k][1] == rows[k][3]);
      CHECK(rows[k][1] == rows[k][4]);
    }
    CHECK(rows[3][1] == "1.750000000");
  }
  SUBCASE("upper bound and oracle columns") {
    auto r = invoke({"bounds", "--input", fixture("small_pair.json"), "--alpha", "1",
                     "--with-upper", "--oracle"});
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].back() == "oracle");
    CHECK(rows[0][5] == "greedy_upper");
    CHECK(rows[1][6] == "1.360964047");
  }
  SUBCASE("values round-trip at nine decimals") {
    auto r = invoke({"bounds", "--input", fixture("example1_marginals.json"), "--alpha",
                     "0:5:0.05", "--with-upper"});
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 102);
    for (std::size_t k = 1; k < rows.size(); ++k) {
      for (const auto& cell : rows[k]) {
        REQUIRE(cli::format_fixed(std::stod(cell)) == cell);
      }
    }
  }
  SUBCASE("output file") {
    auto path = std::filesystem::temp_directory_path() / "mec_cli_test_output.csv";
    auto r = invoke({"bounds", "--input", fixture("point_mass.json"), "--alpha", "1", "--output",
                     path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == "alpha,qstar,k_alpha,meet,sup\n1.000000000,0.000000000,0.000000000,"
                        "0.000000000,0.000000000\n");
    std::filesystem::remove(path);
  }
  SUBCASE("input errors exit with 2") {
    auto r = invoke({"bounds", "--input", fixture("malformed.json")});
    CHECK(r.code == 2);
    CHECK(r.err.find("malformed") != std::string::npos);
    CHECK(r.out.empty());
    CHECK(invoke({"bounds", "--input", fixture("example1_marginals.json"), "--alpha", "x"}).code == 2);
    CHECK(invoke({"bounds"}).code == 2);
    CHECK(invoke({"nonsense"}).code == 2);
    CHECK(invoke({"bounds", "--input", fixture("example1_marginals.json"), "--alpha", "1",
                  "--oracle"}).code == 2);
  }
  SUBCASE("help exits with 0") { CHECK(invoke({"--help"}).code == 0); }
}

TEST_CASE("example subcommand") {
  SUBCASE("three-member example") {
    auto r = invoke({"example", "1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# qstar=[0.350000000,0.150000000,0.125000000,0.125000000,0.100000000,"
                     "0.100000000,0.040000000,0.005000000,0.005000000]") != std::string::npos);
    CHECK(r.out.find("# meet=[0.350000000,0.275000000,0.125000000,0.125000000,0.120000000,"
                     "0.005000000]") != std::string::npos);
    CHECK(csv_rows(r.out).size() == 102);
  }
  SUBCASE("binary example at p = 0.3") {
    auto r = invoke({"example", "2", "--p-grid", "0.3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("meet=[0.700000000,0.300000000]") != std::string::npos);
    CHECK(r.out.find("qstar=[0.700000000,0.200000000,0.100000000]") != std::string::npos);
  }
  SUBCASE("binary example at p = 0 drops the empty atom") {
    auto r = invoke({"example", "2", "--p-grid", "0"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("qstar=[0.900000000,0.100000000] ") != std::string::npos);
  }
  SUBCASE("default grid has qstar equal to the greedy upper bound") {
    auto r = invoke({"example", "2"});
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 52);
    CHECK(rows[0] == std::vector<std::string>{"p", "qstar", "k_alpha", "meet", "sup", "greedy_upper"});
    for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k][1] == rows[k][5]);
  }
  SUBCASE("errors") {
    CHECK(invoke({"example", "3"}).code == 2);
    CHECK(invoke({"example", "2", "--p-grid", "0.6"}).code == 2);
    CHECK(invoke({"example", "2", "--alpha", "0:1:0.5"}).code == 2);
  }
}

TEST_CASE("spectrum subcommand") {
  SUBCASE("point mass") {
    auto r = invoke({"spectrum", "--input", fixture("point_mass.json")});
    REQUIRE(r.code == 0);
    CHECK(r.out == "t,C,G\n0.000000000,1.000000000,0.000000000\n");
  }
  SUBCASE("binary family at p = 0.05") {
    auto r = invoke({"spectrum", "--input", fixture("example2_p005.json")});
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[2] == std::vector<std::string>{"0.152003093", "0.900000000", "0.100000000"});
    CHECK(rows[3] == std::vector<std::string>{"3.321928095", "0.950000000", "0.050000000"});
    CHECK(rows[4] == std::vector<std::string>{"4.321928095", "1.000000000", "0.000000000"});
  }
  SUBCASE("identical members") {
    auto r = invoke({"spectrum", "--input", fixture("identical_members.json")});
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    auto p = make_pmf({0.6, 0.3, 0.1});
    auto s = info_spectrum(p);
    REQUIRE(rows.size() == s.pieces() + 1);
    for (std::size_t j = 0; j < s.pieces(); ++j) {
      CHECK(rows[j + 1][0] == cli::format_fixed(s.breakpoints()[j]));
      CHECK(rows[j + 1][1] == cli::format_fixed(s.values()[j]));
    }
  }
}

TEST_CASE("frl subcommand") {
  auto value_of = [](const std::string& text, const std::string& key) {
    auto pos = text.find(key + "=");
    REQUIRE(pos != std::string::npos);
    auto end = text.find('\n', pos);
    return text.substr(pos + key.size() + 1, end - pos - key.size() - 1);
  };
  SUBCASE("product joint") {
    auto r = invoke({"frl", "--input", fixture("product_joint.json")});
    REQUIRE(r.code == 0);
    // P_X = [0.5, 0.3, 0.2].
    const double hx = -(0.5 * std::log2(0.5) + 0.3 * std::log2(0.3) + 0.2 * std::log2(0.2));
    CHECK(value_of(r.out, "H(Z)") == cli::format_fixed(hx));
    CHECK(value_of(r.out, "H(X|Y,Z)") == "0.000000000");
    CHECK(value_of(r.out, "I(Y;Z)") == "0.000000000");
    CHECK(value_of(r.out, "max_marginal_deviation") == "0.000000000");
  }
  SUBCASE("three-member joint") {
    auto r = invoke({"frl", "--input", fixture("example1_joint.json"), "--oracle"});
    REQUIRE(r.code == 2);  // three members are beyond the oracle
    r = invoke({"frl", "--input", fixture("example1_joint.json")});
    REQUIRE(r.code == 0);
    CHECK(value_of(r.out, "H(X|Y,Z)") == "0.000000000");
    CHECK(value_of(r.out, "I(Y;Z)") == "0.000000000");
    CHECK(value_of(r.out, "qstar") == "2.617223878");
    CHECK(value_of(r.out, "sup") == "2.000000000");
  }
  SUBCASE("errors") {
    auto r = invoke({"frl", "--input", fixture("zero_row_joint.json")});
    CHECK(r.code == 2);
    CHECK(r.err.find("EmptyRow") != std::string::npos);
    CHECK(invoke({"frl", "--input", fixture("example1_marginals.json")}).code == 2);
  }
}
