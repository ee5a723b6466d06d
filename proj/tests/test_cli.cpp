#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "csf/cli.hpp"

using csf::cli::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "csf_cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = csf::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::string cur;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') {
        quoted = !quoted;
      } else if (c == ',' && !quoted) {
        row.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    row.push_back(cur);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST(Cli, Coeff) {
  auto r = run({"coeff", "--family", "half:6", "--mu", "4,4,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["mu"], Json::array({4, 4, 4}));
  EXPECT_EQ(j["coeff"], -10);
  EXPECT_EQ(j["budget"], csf::kDefaultBudget);
}

TEST(Cli, StcBoth) {
  auto r = run({"stc", "--family", "hgraph:5x3", "--type", "5,5,3", "--both"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["closedForm"], 6);
  EXPECT_EQ(j["brute"], 6);
  EXPECT_EQ(j["match"], true);

  auto closed = Json::parse(run({"stc", "--family", "hgraph:8x3", "--type", "8,6,4,4", "--closed-form"}).out);
  EXPECT_EQ(closed["closedForm"], 1760);
  EXPECT_TRUE(closed["brute"].is_null());
  EXPECT_EQ(run({"stc", "--family", "hgraph:8x3", "--type", "7,7,7,1", "--closed-form"}).code, 3);
  EXPECT_EQ(run({"stc", "--family", "hgraph:8x3", "--type", "8,6,4", "--brute"}).code, 3);
}

TEST(Cli, Tabloids) {
  auto r = run({"tabloids", "--shape", "2,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["sign"], 1);
  EXPECT_EQ(j[1]["sign"], -1);
  EXPECT_EQ(j[0]["shape"], Json::array({2, 1}));
  EXPECT_EQ(j[1]["content"], Json::array({3}));
  EXPECT_EQ(j[1]["ribbons"][0]["startRow"], 1);
  EXPECT_EQ(j[1]["ribbons"][0]["height"], 1);
  EXPECT_EQ(run({"tabloids", "--shape", "1,2"}).code, 2);
}

TEST(Cli, Expand) {
  auto r = run({"expand", "--family", "half:3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["degree"], 6);
  EXPECT_EQ(j["basis"], "schur");
  auto expected = csf::schur_expansion(csf::half_graph(3));
  ASSERT_EQ(j["coeffs"].size(), expected.coeffs.size());
  std::size_t i = 0;
  for (const auto& [p, c] : expected.coeffs) {
    EXPECT_EQ(j["coeffs"][i]["partition"], Json(p.vec()));
    EXPECT_EQ(j["coeffs"][i]["coeff"].get<long long>(), c.convert_to<long long>());
    ++i;
  }
  auto csv = run({"expand", "--family", "half:3", "--basis", "monomial", "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  auto rows = csv_rows(csv.out);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"partition", "coeff"}));
  EXPECT_EQ(rows.size(), csf::monomial_expansion(csf::half_graph(3)).coeffs.size() + 1);
}

TEST(Cli, GraphFileRoundTrip) {
  auto path = std::filesystem::temp_directory_path() / "csf_cli_test_graph.txt";
  {
    std::ofstream f(path);
    csf::write_edge_list(f, csf::half_graph(4));
  }
  auto from_file = run({"expand", "--graph", path.string()});
  auto from_family = run({"expand", "--family", "half:4"});
  ASSERT_EQ(from_file.code, 0) << from_file.err;
  EXPECT_EQ(from_file.out, from_family.out);
  {
    std::ofstream f(path);
    f << "p 3\ne 0 9\n";
  }
  auto bad = run({"expand", "--graph", path.string()});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"expand", "--graph", "/nonexistent/graph.txt"}).code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"coeff", "--mu", "4,4,4"}).code, 2);
  EXPECT_EQ(run({"coeff", "--family", "half:6", "--graph", "x", "--mu", "4,4,4"}).code, 2);
  EXPECT_EQ(run({"coeff", "--family", "wheel:6", "--mu", "4,4,4"}).code, 2);
  EXPECT_EQ(run({"coeff", "--family", "half:6", "--mu", "4,4"}).code, 3);
  EXPECT_EQ(run({"--budget", "10", "coeff", "--family", "hgraph:7x3", "--mu", "7,6,4,2", "--stc", "brute"}).code, 3);
  EXPECT_EQ(run({"--budget", "ten", "coeff", "--family", "half:6", "--mu", "4,4,4"}).code, 2);
  EXPECT_EQ(run({"positivity", "--family", "hgraph:6x3"}).code, 3);
}

TEST(Cli, BudgetFromEnvironment) {
  ::setenv(csf::cli::kBudgetEnv, "10", 1);
  auto r = run({"coeff", "--family", "hgraph:7x3", "--mu", "7,6,4,2", "--stc", "brute"});
  ::unsetenv(csf::cli::kBudgetEnv);
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(Cli, Positivity) {
  auto r = run({"positivity", "--family", "half:3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_TRUE(j.contains("schurPositive"));
  EXPECT_TRUE(j.contains("stronglyNice"));

  auto neg = Json::parse(run({"positivity", "--family", "half:6", "--mode", "schur"}).out);
  EXPECT_EQ(neg["schurPositive"], false);

  auto pair = run({"positivity", "--family", "hgraph:44x3", "--lambda", "44,42,40,4", "--mu", "44,41,41,4"});
  ASSERT_EQ(pair.code, 0) << pair.err;
  auto pj = Json::parse(pair.out);
  EXPECT_EQ(pj["stronglyNiceViolation"], true);
  EXPECT_EQ(pj["niceViolation"], false);
}

TEST(Cli, Verify) {
  auto r = run({"verify", "--suite", "ns-m2", "--m", "8..12", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["rows"].size(), 5u);
  EXPECT_EQ(run({"verify", "--suite", "ns-m2", "--m", "7..9"}).code, 3);
  EXPECT_EQ(run({"verify", "--suite", "ns-m2", "--m", "9..x"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "sn-m3", "--m", "8..60", "--brute-max-m", "0"}).code, 0);
}

TEST(Cli, Scan) {
  auto r = run({"scan", "--family", "lattice:mx2", "--m", "8..12", "--mu", "m-2,m-2,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"family", "m", "mu", "coeff", "verdict", "error"}));
  for (int m = 8; m <= 12; ++m) {
    const auto& row = rows[static_cast<std::size_t>(m - 7)];
    EXPECT_EQ(row[1], std::to_string(m));
    EXPECT_EQ(row[3], std::to_string(-m * (m - 2) * (m - 7) / 3));
  }

  auto half = csv_rows(run({"scan", "--family", "half:m", "--m", "6..10", "--mu", "m-2,m-2,4"}).out);
  for (int m = 6; m <= 10; ++m) EXPECT_EQ(half[static_cast<std::size_t>(m - 5)][3], std::to_string(-m * (m - 1) * (m - 5) / 3));

  auto three = csv_rows(run({"scan", "--family", "lattice:mx3", "--m", "8..12", "--mu", "m+2,m-3,m-3,4"}).out);
  for (int m = 8; m <= 12; ++m)
    EXPECT_EQ(three[static_cast<std::size_t>(m - 7)][3], std::to_string((-4 * m * m * m + 48 * m * m - 176 * m + 288) / 3));

  // A row that fails is recorded and the scan continues.
  auto mixed = csv_rows(run({"scan", "--family", "half:m", "--m", "2..3", "--mu", "m,m,m"}).out);
  ASSERT_EQ(mixed.size(), 3u);
  EXPECT_EQ(mixed[1][4], "error");
  EXPECT_EQ(mixed[2][4], "error");
  EXPECT_EQ(run({"scan", "--family", "half:6", "--m", "1..2", "--mu", "m"}).code, 2);
  EXPECT_EQ(run({"scan", "--family", "half:m", "--m", "1..2", "--mu", "m-"}).code, 2);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"expand", "--family", "hgraph:4x3"},
           {"verify", "--suite", "half", "--m", "6..7", "--json"},
           {"scan", "--family", "hgraph:mx3", "--m", "8..9", "--mu", "m,m-3,m-3,4"}}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(Cli, ShapePatterns) {
  auto p = csf::cli::parse_shape_pattern("2m+1, m-3,4,m");
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p[0].at(5), 11);
  EXPECT_EQ(p[1].at(5), 2);
  EXPECT_EQ(p[2].at(5), 4);
  EXPECT_EQ(p[3].at(5), 5);
  EXPECT_THROW(csf::cli::parse_shape_pattern("m*2"), csf::ParseError);
  EXPECT_THROW(csf::cli::parse_shape_pattern(""), csf::ParseError);
  EXPECT_EQ(csf::cli::parse_range("8..12"), (std::pair{8, 12}));
  EXPECT_THROW(csf::cli::parse_range("12..8"), csf::ParseError);
}

TEST(Cli, LargeCoefficientsAreStrings) {
  csf::Integer big = csf::factorial(30);
  EXPECT_EQ(csf::cli::to_json(big), Json(big.str()));
  EXPECT_EQ(csf::cli::to_json(csf::Integer(-5)), Json(-5));
}
