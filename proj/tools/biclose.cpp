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

// biclose: mine maximal CVC biclusters from a CSV file and turn them into
// class association rules.

#include <cstdlib>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "biclose/cli.hpp"

int main(int argc, char** argv) {
  if (const char* level = std::getenv("BICLOSE_LOG")) {
    spdlog::set_level(spdlog::level::from_str(level));
  }

  biclose::RunConfig cfg;
  std::string stages;
  std::string formats = "json,text";

  CLI::App app{"Enumerate maximal CVC biclusters and select class association rules"};
  app.add_option("--input,-i", cfg.input, "CSV/TSV data file with a header row")->required();
  app.add_option("--schema,-s", cfg.schema, "JSON schema describing each column")->required();
  app.add_option("--mr", cfg.min_rows, "minimum number of rows per bicluster")->check(CLI::PositiveNumber);
  app.add_option("--mc", cfg.min_cols, "minimum number of columns per bicluster")->check(CLI::PositiveNumber);
  app.add_option("--min-conf", cfg.min_conf, "1st filter: minimum confidence")->check(CLI::Range(0.0, 1.0));
  app.add_option("--min-lift-dist", cfg.min_lift_distance, "1st filter: minimum |lift - 1|")
      ->check(CLI::NonNegativeNumber);
  auto* stages_opt = app.add_option("--stages", stages,
                                    "comma list from enumerate,filter1,filter2; 'none' parses only "
                                    "(default: every stage the data supports)");
  app.add_option("--out,-o", cfg.out_dir, "output directory");
  app.add_option("--format", formats, "comma list from json,csv,text")->capture_default_str();
  app.add_flag("--validate", cfg.validate_only, "check the schema against the header and exit");
  app.add_flag("--oracle", cfg.use_oracle, "use the exhaustive reference miner (small inputs only)")->group("");

  try {
    app.parse(argc, argv);
    if (stages_opt->count()) cfg.stages = biclose::parse_stages(stages);
    cfg.formats = biclose::parse_formats(formats);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : biclose::kExitConfig;
  } catch (const biclose::ConfigError& e) {
    spdlog::error("{}", e.what());
    return biclose::kExitConfig;
  }

  std::ostringstream log;
  const biclose::RunReport rep = biclose::run(cfg, log);
  std::istringstream lines(log.str());
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("error:", 0) == 0) {
      spdlog::error("{}", line.substr(7));
    } else {
      spdlog::info("{}", line);
    }
  }
  for (const auto& path : rep.written) spdlog::debug("wrote {}", path.string());
  if (rep.exit_code != biclose::kExitOk) spdlog::error("{}", rep.message);
  return rep.exit_code;
}
