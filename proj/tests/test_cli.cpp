// Copyright 2026 The biclose Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include <gtest/gtest.h>

#include "biclose/cli.hpp"
#include "json.hpp"

namespace biclose {
namespace {

namespace fs = std::filesystem;

const fs::path kData = BICLOSE_DATA_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliRun : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("biclose_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  RunConfig example_config(const fs::path& out) {
    RunConfig cfg;
    cfg.input = kData / "uniform10x3.csv";
    cfg.schema = kData / "uniform10x3.schema.json";
    cfg.min_rows = 2;
    cfg.min_cols = 2;
    cfg.stages = std::set<Stage>{Stage::Enumerate};
    cfg.out_dir = out;
    return cfg;
  }

  // Small labeled table: two clean groups.
  RunConfig labeled_config() {
    RunConfig cfg;
    cfg.input = write("lab.csv", "x,color,cls\n1.0,red,a\n1.1,red,a\n1.2,red,a\n5.0,blue,b\n5.1,blue,b\n5.2,blue,b\n");
    cfg.schema = write("lab.json", R"({"label": "cls", "columns": [
        {"name": "x", "kind": "real", "epsilon": 0.5},
        {"name": "color", "kind": "nominal", "categories": ["red", "blue"]}]})");
    cfg.min_rows = 2;
    cfg.out_dir = dir_ / "lab_out";
    return cfg;
  }

  std::ostringstream log_;
  fs::path dir_;
};

TEST_F(CliRun, WorkedExampleWritesTwelveBiclusters) {
  const auto rep = run(example_config(dir_ / "out"), log_);
  ASSERT_EQ(rep.exit_code, kExitOk) << rep.message;
  const auto doc = nlohmann::json::parse(slurp(dir_ / "out" / "biclusters.json"));
  EXPECT_EQ(doc["biclusters"].size(), 12u);
  EXPECT_EQ(doc["biclusters"][0]["extent"], nlohmann::json({1, 5, 10}));
  EXPECT_EQ(doc["biclusters"][0]["intent"], nlohmann::json({1, 3}));
  const auto summary = nlohmann::json::parse(slurp(dir_ / "out" / "summary.json"));
  EXPECT_EQ(summary["original"]["count"], 12);
  EXPECT_FALSE(fs::exists(dir_ / "out" / "rules.txt"));
}

TEST_F(CliRun, RoundTripPassesDirectChecks) {
  ASSERT_EQ(run(example_config(dir_ / "out"), log_).exit_code, kExitOk);
  const MixedMatrix m = load_dataset(kData / "uniform10x3.csv", load_schema(kData / "uniform10x3.schema.json"));
  const auto loaded = load_biclusters_json(dir_ / "out" / "biclusters.json");
  ASSERT_EQ(loaded.size(), 12u);
  for (const auto& b : loaded) {
    EXPECT_TRUE(is_cvc(m, b, m.epsilons()));
    EXPECT_TRUE(is_maximal(m, b, m.epsilons()));
  }
}

TEST_F(CliRun, OutputIsByteIdentical) {
  auto a = labeled_config();
  auto b = labeled_config();
  b.out_dir = dir_ / "again";
  a.formats = b.formats = {OutputFormat::Json, OutputFormat::Csv, OutputFormat::Text};
  ASSERT_EQ(run(a, log_).exit_code, kExitOk);
  ASSERT_EQ(run(b, log_).exit_code, kExitOk);
  for (const char* f : {"biclusters.json", "summary.json", "rules.txt", "biclusters.csv"}) {
    EXPECT_EQ(slurp(a.out_dir / f), slurp(b.out_dir / f)) << f;
    EXPECT_FALSE(slurp(a.out_dir / f).empty()) << f;
  }
}

TEST_F(CliRun, LabeledRunWritesRulesAndSummary) {
  const auto cfg = labeled_config();
  const auto rep = run(cfg, log_);
  ASSERT_EQ(rep.exit_code, kExitOk) << rep.message;
  const auto summary = nlohmann::json::parse(slurp(cfg.out_dir / "summary.json"));
  EXPECT_EQ(summary["filter2"]["count"], 2);
  EXPECT_EQ(summary["filter2"]["row_coverage_pct"], 100.0);
  const std::string rules = slurp(cfg.out_dir / "rules.txt");
  EXPECT_NE(rules.find("x[1,1.2], color{red} ⇒ a  comp=1.00 conf=1.00 lift=2.00 lev=0.25"), std::string::npos) << rules;
  const auto doc = nlohmann::json::parse(slurp(cfg.out_dir / "biclusters.json"));
  for (const auto& e : doc["biclusters"]) {
    EXPECT_TRUE(e.contains("qcar"));
    EXPECT_TRUE(e.contains("metrics"));
    EXPECT_TRUE(e.contains("filter2"));
  }
}

TEST_F(CliRun, EmptyStageSetIsADryParse) {
  auto cfg = example_config(dir_ / "dry");
  cfg.stages = std::set<Stage>{};
  const auto rep = run(cfg, log_);
  EXPECT_EQ(rep.exit_code, kExitOk);
  EXPECT_FALSE(fs::exists(dir_ / "dry"));
}

TEST_F(CliRun, FiltersOnUnlabeledData) {
  auto cfg = example_config(dir_ / "out");
  cfg.stages = parse_stages("enumerate,filter1");
  EXPECT_EQ(run(cfg, log_).exit_code, kExitUnlabeled);
}

TEST_F(CliRun, SchemaMismatchIsConfigError) {
  auto cfg = example_config(dir_ / "out");
  cfg.schema = write("s.json", R"({"columns": [{"name": "a1"}, {"name": "a2"}]})");
  const auto rep = run(cfg, log_);
  EXPECT_EQ(rep.exit_code, kExitConfig);
  EXPECT_NE(rep.message.find("a3"), std::string::npos);
}

TEST_F(CliRun, UnreadableInputIsDataError) {
  auto cfg = example_config(dir_ / "out");
  cfg.input = dir_ / "missing.csv";
  EXPECT_EQ(run(cfg, log_).exit_code, kExitData);
  cfg.input = write("bad.csv", "a1,a2,a3\n1,2,x\n");
  EXPECT_EQ(run(cfg, log_).exit_code, kExitData);
}

TEST_F(CliRun, ValidateOnly) {
  auto cfg = example_config(dir_ / "out");
  cfg.validate_only = true;
  EXPECT_EQ(run(cfg, log_).exit_code, kExitOk);
  EXPECT_NE(log_.str().find("bound a1 (real, epsilon=0.2)"), std::string::npos) << log_.str();
  cfg.schema = write("s.json", R"({"columns": [{"name": "a1"}, {"name": "a2"}, {"name": "a3", "kind": "nominal", "epsilon": 1}]})");
  EXPECT_EQ(run(cfg, log_).exit_code, kExitConfig);
}

TEST_F(CliRun, OracleMatchesEnumerator) {
  auto a = example_config(dir_ / "a");
  auto b = example_config(dir_ / "b");
  b.use_oracle = true;
  ASSERT_EQ(run(a, log_).exit_code, kExitOk);
  ASSERT_EQ(run(b, log_).exit_code, kExitOk);
  const auto ea = load_biclusters_json(a.out_dir / "biclusters.json");
  const auto eb = load_biclusters_json(b.out_dir / "biclusters.json");
  EXPECT_EQ(std::set<Bicluster>(ea.begin(), ea.end()), std::set<Bicluster>(eb.begin(), eb.end()));
}

TEST(StageParsing, PrefixChain) {
  EXPECT_EQ(parse_stages("enumerate,filter1,filter2").size(), 3u);
  EXPECT_EQ(parse_stages("all").size(), 3u);
  EXPECT_TRUE(parse_stages("none").empty());
  EXPECT_TRUE(parse_stages("").empty());
  EXPECT_THROW(parse_stages("filter1"), ConfigError);
  EXPECT_THROW(parse_stages("enumerate,filter2"), ConfigError);
  EXPECT_THROW(parse_stages("enumerate,plot"), ConfigError);
  EXPECT_THROW(parse_formats("json,xml"), ConfigError);
}

#ifdef BICLOSE_CLI_PATH
int run_binary(const std::string& args) {
  const std::string cmd = std::string("\"") + BICLOSE_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_F(CliRun, BinaryExitCodes) {
  const std::string in = (kData / "uniform10x3.csv").string();
  const std::string schema = (kData / "uniform10x3.schema.json").string();
  const std::string out = (dir_ / "bin").string();
  EXPECT_EQ(run_binary("--input " + in + " --schema " + schema + " --mr 2 --mc 2 --out " + out), 0);
  EXPECT_TRUE(fs::exists(dir_ / "bin" / "biclusters.json"));
  EXPECT_EQ(run_binary("--input " + in + " --schema " + schema + " --stages enumerate,filter1 --out " + out), 4);
  EXPECT_EQ(run_binary("--input " + in + " --schema " + schema + " --stages filter2 --out " + out), 2);
  EXPECT_EQ(run_binary("--input /nonexistent.csv --schema " + schema), 3);
  EXPECT_EQ(run_binary("--input " + in + " --schema /nonexistent.json"), 2);
  EXPECT_EQ(run_binary("--input " + in), 2);
  EXPECT_EQ(run_binary("--help"), 0);
}
#endif

}  // namespace
}  // namespace biclose
