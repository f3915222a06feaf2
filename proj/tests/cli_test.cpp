// Copyright 2026 The tropcheck Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "tropcheck/cli.hpp"
#include "tropcheck/oracles.hpp"

namespace tropcheck {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_tool(std::vector<std::string> args) {
  args.insert(args.begin(), "tropcheck");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return (fs::path(TROPCHECK_DATA_DIR) / name).string(); }

Json run_json(const std::vector<std::string>& args) {
  std::vector<std::string> full = args;
  full.push_back("--format");
  full.push_back("json");
  Outcome o = run_tool(full);
  EXPECT_EQ(o.code, 0) << o.err;
  return Json::parse(o.out);
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("tropcheck_cli_" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& contents) const {
    fs::path p = path_ / name;
    std::ofstream(p) << contents;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

TEST(CliAnalyzeTest, EcReport) {
  Json r = run_json({"analyze", "--input", data("ec.json")});
  EXPECT_EQ(r["idempotent"], true);
  EXPECT_EQ(r["regular"], true);
  EXPECT_EQ(r["ranks"]["row"], 3);
  EXPECT_EQ(r["ranks"]["col"], 3);
  EXPECT_EQ(r["ranks"]["tropical"], 3);
  EXPECT_EQ(r["ranks"]["factor_rank_bounds"], Json::parse("[3, 3]"));
  EXPECT_EQ(r["column_space"]["gendim"], 3);
  EXPECT_EQ(r["row_space"]["tropical_dim"], 3);
  EXPECT_TRUE(r.contains("witness"));
}

TEST(CliAnalyzeTest, AllZeroTwoByTwo) {
  Json r = run_json({"analyze", "--input", data("zero_2x2.json")});
  EXPECT_EQ(r["idempotent"], true);
  EXPECT_EQ(r["regular"], true);
  EXPECT_EQ(r["ranks"]["row"], 1);
  EXPECT_EQ(r["ranks"]["col"], 1);
  EXPECT_EQ(r["ranks"]["tropical"], 1);
}

TEST(CliAnalyzeTest, RectangularMatrix) {
  EXPECT_EQ(run_tool({"analyze", "--input", data("rect_2x3.json"), "--regularity"}).code, 3);
  Json r = run_json({"analyze", "--input", data("rect_2x3.json")});
  EXPECT_FALSE(r.contains("idempotent"));
  EXPECT_FALSE(r.contains("regular"));
  EXPECT_EQ(r["cols"], 3);
}

TEST(CliAnalyzeTest, ProjectionOntoColumnSpace) {
  Json r = run_json({"analyze", "--input", data("ec.json"), "--project", data("ec_project.json")});
  Matrix e{{0, -3, -3}, {0, 0, -3}, {0, 0, 0}};
  Matrix x = matrix_document_from_json(Json::parse(cli::read_file(data("ec_project.json")))).matrix;
  Matrix expected = mat_mul(e, x);
  EXPECT_EQ(r["projection"], to_json(expected));
  EXPECT_EQ(run_tool({"analyze", "--input", data("zero_2x2.json"), "--project",
                      data("ec_project.json")})
                .code,
            2);
}

TEST(CliPolytopeTest, EcColumnSpace) {
  Json r = run_json({"polytope", "--input", data("ec_columns.json")});
  EXPECT_EQ(r["gendim"], 3);
  EXPECT_EQ(r["dualdim"], 3);
  EXPECT_EQ(r["tropical_dim"], 3);
  EXPECT_EQ(r["pure"], true);
  EXPECT_EQ(r["min_plus_convex"], true);
  EXPECT_EQ(r["projective"], true);
  EXPECT_EQ(r["idempotent"], to_json(Matrix{{0, -3, -3}, {0, 0, -3}, {0, 0, 0}}));
}

TEST(CliPolytopeTest, OtherVerdicts) {
  EXPECT_EQ(run_json({"polytope", "--input", data("two_points.json")})["projective"], true);
  Json h = run_json({"polytope", "--input", data("dim_mismatch.json")});
  EXPECT_EQ(h["gendim"], 4);
  EXPECT_EQ(h["dualdim"], 3);
  EXPECT_EQ(h["projective"], false);
  EXPECT_FALSE(h.contains("idempotent"));
  Json f = run_json({"polytope", "--input", data("impure.json")});
  EXPECT_EQ(f["pure"], false);
  EXPECT_EQ(f["min_plus_convex"], false);
}

TEST(CliPolytopeTest, TupleBudget) {
  Outcome o = run_tool({"polytope", "--input", data("ec_columns.json"), "--max-tuples", "10"});
  EXPECT_EQ(o.code, 4);
  EXPECT_NE(o.err.find("ScaleLimitExceeded"), std::string::npos);
}

TEST(CliFacesTest, EcColumnSpace) {
  Json faces = run_json({"faces", "--input", data("ec_columns.json")});
  ASSERT_TRUE(faces.is_array());
  EXPECT_EQ(faces.size(), 19u);
  std::size_t full = 0;
  for (const auto& f : faces) {
    EXPECT_EQ(f["type"].size(), 3u);
    EXPECT_EQ(f["witness"].size(), 3u);
    full += f["covering"] == true && f["dim"] == 3;
  }
  EXPECT_EQ(full, 1u);
}

std::vector<std::string> generator_points(const std::string& svg) {
  std::regex dot(R"re(<circle class="generator"[^>]*data-point="([^"]*)")re");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), dot); it != std::sregex_iterator();
       ++it) {
    out.push_back((*it)[1]);
  }
  return out;
}

TEST(CliPlotTest, EcRowSpace) {
  Outcome first = run_tool({"plot", "--input", data("ec_rows.json")});
  Outcome second = run_tool({"plot", "--input", data("ec_rows.json")});
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.out.rfind("<?xml", 0), 0u);
  EXPECT_NE(first.out.find("<polygon"), std::string::npos);
  auto points = generator_points(first.out);
  EXPECT_EQ(std::set<std::string>(points.begin(), points.end()),
            (std::set<std::string>{"0,0", "3,0", "3,3"}));
  EXPECT_EQ(points.size(), 3u);
}

TEST(CliPlotTest, SinglePointAndWrongAmbient) {
  Outcome one = run_tool({"plot", "--input", data("single_point.json")});
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(generator_points(one.out), std::vector<std::string>{"1,-1/2"});
  EXPECT_EQ(run_tool({"plot", "--input", data("ambient4.json")}).code, 3);
  EXPECT_EQ(run_tool({"plot", "--input", data("two_points.json")}).code, 3);
}

TEST(CliPlotTest, WritesOutputFile) {
  TempDir dir;
  std::string target = dir.path("ec.svg");
  Outcome o = run_tool({"plot", "--input", data("ec_rows.json"), "--output", target});
  ASSERT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
  EXPECT_EQ(cli::read_file(target), run_tool({"plot", "--input", data("ec_rows.json")}).out);
}

TEST(CliErrorTest, MalformedInputs) {
  for (const char* name : {"ragged.json", "float_entry.json", "truncated.json"}) {
    EXPECT_EQ(run_tool({"analyze", "--input", data(name)}).code, 2) << name;
  }
  EXPECT_EQ(run_tool({"polytope", "--input", data("infinite_generator.json")}).code, 2);
  EXPECT_EQ(run_tool({"analyze", "--input", data("ec_project.json")}).code, 2);
  EXPECT_EQ(run_tool({"polytope", "--input", data("no_such_file.json")}).code, 2);
  EXPECT_EQ(run_tool({"frobnicate"}).code, 2);
  EXPECT_EQ(run_tool({"analyze"}).code, 2);
  EXPECT_EQ(run_tool({"analyze", "--input", data("ec.json"), "--format", "xml"}).code, 2);
  EXPECT_EQ(run_tool({"oracle", "no-such-suite"}).code, 2);
}

std::set<std::string> text_keys(const std::string& text, int indent) {
  std::set<std::string> keys;
  std::istringstream in(text);
  std::string line;
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  while (std::getline(in, line)) {
    if (line.rfind(pad, 0) != 0 || line.size() <= pad.size() || line[pad.size()] == ' ') continue;
    keys.insert(line.substr(pad.size(), line.find(':') - pad.size()));
  }
  return keys;
}

TEST(CliFormatTest, TextMirrorsJson) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", "--input", data("ec.json")},
           {"polytope", "--input", data("ec_columns.json")},
           {"oracle", "descent", "--count", "5"}}) {
    Json j = run_json(args);
    std::set<std::string> json_keys;
    for (const auto& [key, value] : j.items()) json_keys.insert(key);
    Outcome text = run_tool(args);
    ASSERT_EQ(text.code, 0);
    EXPECT_EQ(text_keys(text.out, 0), json_keys) << args[0];
  }
  Outcome faces = run_tool({"faces", "--input", data("ec_columns.json")});
  std::size_t items = 0;
  std::istringstream in(faces.out);
  for (std::string line; std::getline(in, line);) items += line == "-";
  EXPECT_EQ(items, 19u);
  EXPECT_EQ(cli::to_text(Json::parse(R"({"a": [[0, "1/2"], ["-inf"]], "b": {"c": true}})")),
            "a: [[0, 1/2], [-inf]]\nb:\n  c: true\n");
}

TEST(CliOracleTest, ReportsSuiteSummary) {
  Json r = run_json({"oracle", "triangulation", "--count", "25", "--seed", "3", "--n", "3"});
  EXPECT_EQ(r["suite"], "triangulation");
  EXPECT_EQ(r["instances"], 25);
  EXPECT_EQ(r["failures"], Json::array());
}

// The command line reports exactly what the library computes.
TEST(CliConsistencyTest, PolytopeVerdictsMatchLibrary) {
  TempDir dir;
  CorpusRng rng(71);
  for (int k = 0; k < 40; ++k) {
    PolytopeDocument doc{rng.index(1, 4), {}};
    for (std::size_t t = 0, m = rng.index(1, 4); t < m; ++t) {
      doc.generators.push_back(random_vector(rng, doc.ambient, 5, 2));
    }
    std::string path = dir.file("p" + std::to_string(k) + ".json", to_json(doc).dump());
    Json r = run_json({"polytope", "--input", path});
    Polytope p = doc.polytope();
    ProjectivityReport proj = is_projective(p);
    PurityReport purity = pure_dimension_check(p);
    EXPECT_EQ(r["projective"], proj.projective);
    EXPECT_EQ(r["gendim"], proj.gendim);
    EXPECT_EQ(r["dualdim"], proj.dualdim);
    EXPECT_EQ(r["pure"], purity.pure);
    EXPECT_EQ(r["tropical_dim"], purity.dim);
    EXPECT_EQ(r["min_plus_convex"], min_plus_convex(p));
  }
}

TEST(CliConsistencyTest, AnalyzeVerdictsMatchLibrary) {
  TempDir dir;
  CorpusRng rng(72);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = rng.index(1, 4);
    Matrix a = random_matrix(rng, n, n, 5, 2);
    std::string path = dir.file("a" + std::to_string(k) + ".json", to_json(a).dump());
    Json r = run_json({"analyze", "--input", path, "--regularity"});
    RankReport ranks = rank_report(a);
    EXPECT_EQ(r["idempotent"], is_idempotent(a));
    EXPECT_EQ(r["regular"], regularity_witness(a).regular);
    EXPECT_EQ(r["ranks"]["row"], ranks.row_gen_rank);
    EXPECT_EQ(r["ranks"]["col"], ranks.col_gen_rank);
    EXPECT_EQ(r["ranks"]["tropical"], ranks.tropical_rank);
  }
}

TEST(CliBinaryTest, ExitCodesFromTheInstalledTool) {
  const std::string tool = TROPCHECK_CLI;
  auto status = [&](const std::string& args) {
    int raw = std::system((tool + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("analyze --input " + data("ec.json")), 0);
  EXPECT_EQ(status("analyze --input " + data("ragged.json")), 2);
  EXPECT_EQ(status("analyze --regularity --input " + data("rect_2x3.json")), 3);
  EXPECT_EQ(status("polytope --max-tuples 5 --input " + data("ec_columns.json")), 4);
}

}  // namespace
}  // namespace tropcheck
