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

#pragma once

// Run configuration and driver behind the biclose command-line tool.

#include <filesystem>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "biclose/error.hpp"
#include "biclose/pipeline.hpp"
#include "biclose/report.hpp"
#include "biclose/schema.hpp"

namespace biclose {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitData = 3,
  kExitUnlabeled = 4,
};

enum class OutputFormat { Json, Csv, Text };

struct RunConfig {
  std::filesystem::path input;
  std::filesystem::path schema;
  std::size_t min_rows = 1;
  std::size_t min_cols = 1;
  double min_conf = 0.95;
  double min_lift_distance = 0.2;
  // Empty: dry parse. Otherwise a prefix of enumerate, filter1, filter2.
  // std::nullopt picks every stage the data supports.
  std::optional<std::set<Stage>> stages;
  std::filesystem::path out_dir = ".";
  std::set<OutputFormat> formats = {OutputFormat::Json, OutputFormat::Text};
  bool validate_only = false;
  bool use_oracle = false;
};

inline std::set<Stage> parse_stages(const std::string& text) {
  std::set<Stage> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item == "none") continue;
    if (item == "enumerate") {
      out.insert(Stage::Enumerate);
    } else if (item == "filter1") {
      out.insert(Stage::Filter1);
    } else if (item == "filter2") {
      out.insert(Stage::Filter2);
    } else if (item == "all") {
      out = {Stage::Enumerate, Stage::Filter1, Stage::Filter2};
    } else {
      throw ConfigError("unknown stage '" + item + "' (expected enumerate, filter1, filter2)");
    }
  }
  if (out.count(Stage::Filter2) && !out.count(Stage::Filter1)) throw ConfigError("stage filter2 requires filter1");
  if (out.count(Stage::Filter1) && !out.count(Stage::Enumerate)) throw ConfigError("stage filter1 requires enumerate");
  return out;
}

inline std::set<OutputFormat> parse_formats(const std::string& text) {
  std::set<OutputFormat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "json") {
      out.insert(OutputFormat::Json);
    } else if (item == "csv") {
      out.insert(OutputFormat::Csv);
    } else if (item == "text" || item == "txt") {
      out.insert(OutputFormat::Text);
    } else if (!item.empty()) {
      throw ConfigError("unknown format '" + item + "' (expected json, csv, text)");
    }
  }
  return out;
}

struct RunReport {
  int exit_code = kExitOk;
  std::string message;
  std::vector<std::filesystem::path> written;
  PipelineResult result;
};

inline RunReport run(const RunConfig& cfg, std::ostream& log) {
  RunReport rep;
  try {
    const DatasetSchema schema = load_schema(cfg.schema);
    if (cfg.validate_only) {
      const RawTable table = read_table(cfg.input, schema.delimiter);
      const SchemaDiagnostics diag = validate_schema(schema, table.header);
      log << diag.summary();
      if (!diag.ok()) {
        rep.exit_code = kExitConfig;
        rep.message = "schema does not match the data header";
      }
      return rep;
    }
    const MixedMatrix matrix = load_dataset(cfg.input, schema);
    log << "loaded " << matrix.rows() << " rows x " << matrix.cols() << " columns, " << matrix.missing_count()
        << " missing cells\n";

    std::set<Stage> stages;
    if (cfg.stages) {
      stages = *cfg.stages;
    } else {
      stages = {Stage::Enumerate};
      if (matrix.has_labels()) stages.insert({Stage::Filter1, Stage::Filter2});
    }
    if (stages.empty()) return rep;
    if (!matrix.has_labels() && stages.count(Stage::Filter1)) {
      rep.exit_code = kExitUnlabeled;
      rep.message = "filter stages need class labels; declare a \"label\" column in the schema";
      return rep;
    }

    const EnumParams params{cfg.min_rows, cfg.min_cols, matrix.epsilons()};
    PipelineOptions options;
    options.last_stage = *stages.rbegin();
    options.min_conf = cfg.min_conf;
    options.min_lift_distance = cfg.min_lift_distance;
    options.use_oracle = cfg.use_oracle;
    if (cfg.min_conf < 0.0 || cfg.min_conf > 1.0) throw ConfigError("min-conf must lie in [0, 1]");
    if (cfg.min_lift_distance < 0.0) throw ConfigError("min-lift-dist must be non-negative");

    rep.result = run_pipeline(matrix, params, options);
    log << "biclusters: " << rep.result.original.count;
    if (options.last_stage >= Stage::Filter1) log << ", filter1: " << rep.result.filter1.count;
    if (options.last_stage >= Stage::Filter2) log << ", filter2: " << rep.result.filter2.count;
    log << "\n";

    std::filesystem::create_directories(cfg.out_dir);
    auto emit = [&](const std::string& name, const auto& write) {
      const auto path = cfg.out_dir / name;
      write(path);
      rep.written.push_back(path);
    };
    if (cfg.formats.count(OutputFormat::Json)) {
      emit("biclusters.json", [&](const auto& p) { write_json(p, biclusters_document(rep.result, matrix, options.last_stage)); });
    }
    if (cfg.formats.count(OutputFormat::Csv)) {
      emit("biclusters.csv", [&](const auto& p) { write_text(p, biclusters_csv(rep.result, matrix)); });
    }
    if (cfg.formats.count(OutputFormat::Text) && matrix.has_labels()) {
      emit("rules.txt", [&](const auto& p) { write_text(p, rules_text(rep.result, matrix, options.last_stage)); });
    }
    emit("summary.json", [&](const auto& p) { write_json(p, summary_document(rep.result, matrix, params, options)); });
  } catch (const ConfigError& e) {
    rep.exit_code = kExitConfig;
    rep.message = e.what();
  } catch (const DataError& e) {
    rep.exit_code = kExitData;
    rep.message = e.what();
  } catch (const std::filesystem::filesystem_error& e) {
    rep.exit_code = kExitData;
    rep.message = e.what();
  }
  return rep;
}

}  // namespace biclose
