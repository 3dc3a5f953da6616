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

// Serialization of pipeline results: biclusters.json, rules.txt,
// summary.json and biclusters.csv. Indices are written 1-based; metric
// values are rounded to 6 decimals. Objects are std::map backed, so keys
// come out sorted and identical inputs produce identical bytes.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "biclose/bicluster.hpp"
#include "biclose/datamodel.hpp"
#include "biclose/error.hpp"
#include "biclose/pipeline.hpp"
#include "biclose/rules.hpp"

namespace biclose {

inline double round6(double v) {
  const double r = std::round(v * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;
}

inline nlohmann::json metrics_json(const MetricBundle& mb) {
  return {
      {"support", mb.support},
      {"antecedent_support", mb.antecedent_support},
      {"class_support", mb.class_support},
      {"rsup", round6(mb.rsup)},
      {"confidence", round6(mb.confidence)},
      {"completeness", round6(mb.completeness)},
      {"lift", round6(mb.lift)},
      {"leverage", round6(mb.leverage)},
  };
}

inline nlohmann::json qcar_json(const Qcar& q, const MixedMatrix& matrix) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& item : q.antecedent) {
    items.push_back({{"column", matrix.attribute(item.column).name},
                     {"lo", item.lo},
                     {"hi", item.hi},
                     {"text", decode_interval(matrix, item.column, item.lo, item.hi)}});
  }
  return {{"antecedent", items}, {"consequent", q.consequent}};
}

inline nlohmann::json bicluster_json(const Bicluster& b) {
  nlohmann::json extent = nlohmann::json::array();
  nlohmann::json intent = nlohmann::json::array();
  for (RowIndex i : b.extent) extent.push_back(i + 1);
  for (ColIndex j : b.intent) intent.push_back(j + 1);
  return {{"extent", extent}, {"intent", intent}};
}

inline nlohmann::json coverage_json(const StageSummary& s, bool labeled) {
  nlohmann::json out = {{"count", s.count}};
  if (labeled) {
    out["row_coverage_pct"] = std::round(s.coverage.rows * 1e4) / 100.0;
    out["column_coverage_pct"] = std::round(s.coverage.columns * 1e4) / 100.0;
  }
  return out;
}

// Every enumerated bicluster; when labels exist each entry carries its QCAR,
// metrics and stage membership flags.
inline nlohmann::json biclusters_document(const PipelineResult& res, const MixedMatrix& matrix, Stage last_stage) {
  std::vector<std::uint8_t> in_f1(res.biclusters.size(), 0);
  std::vector<std::uint8_t> in_f2(res.biclusters.size(), 0);
  for (std::size_t k : res.filtered_index) in_f1[k] = 1;
  for (std::size_t k : res.selected_index) in_f2[k] = 1;

  nlohmann::json list = nlohmann::json::array();
  for (std::size_t k = 0; k < res.biclusters.size(); ++k) {
    nlohmann::json entry = bicluster_json(res.biclusters[k]);
    entry["id"] = k + 1;
    if (!res.scored.empty()) {
      entry["qcar"] = qcar_json(res.scored[k].rule, matrix);
      entry["metrics"] = metrics_json(res.scored[k].metrics);
      entry["rule"] = render_rule(res.scored[k], matrix);
      if (last_stage >= Stage::Filter1) entry["filter1"] = in_f1[k] != 0;
      if (last_stage >= Stage::Filter2) entry["filter2"] = in_f2[k] != 0;
    }
    list.push_back(std::move(entry));
  }
  return {{"biclusters", list}};
}

inline nlohmann::json summary_document(const PipelineResult& res, const MixedMatrix& matrix, const EnumParams& params,
                                       const PipelineOptions& options) {
  const bool labeled = matrix.has_labels();
  nlohmann::json eps = nlohmann::json::object();
  for (ColIndex j = 0; j < matrix.cols(); ++j) eps[matrix.attribute(j).name] = params.epsilons[j];
  nlohmann::json doc = {
      {"rows", matrix.rows()},
      {"columns", matrix.cols()},
      {"missing_cells", matrix.missing_count()},
      {"parameters",
       {{"min_rows", params.min_rows}, {"min_cols", params.min_cols}, {"epsilon", eps}}},
      {"original", coverage_json(res.original, labeled)},
  };
  if (options.last_stage >= Stage::Filter1) {
    doc["parameters"]["min_conf"] = options.min_conf;
    doc["parameters"]["min_lift_distance"] = options.min_lift_distance;
    doc["filter1"] = coverage_json(res.filter1, labeled);
  }
  if (options.last_stage >= Stage::Filter2) doc["filter2"] = coverage_json(res.filter2, labeled);
  if (!options.use_oracle) {
    doc["search"] = {{"node_expansions", res.stats.node_expansions},
                     {"candidates", res.stats.candidates},
                     {"registry_size", res.stats.registry_size}};
  }
  return doc;
}

// The rules of the last stage that ran, one per line.
inline std::string rules_text(const PipelineResult& res, const MixedMatrix& matrix, Stage last_stage) {
  const std::vector<ScoredRule>* rules = &res.scored;
  if (last_stage == Stage::Filter1) rules = &res.filtered;
  if (last_stage == Stage::Filter2) rules = &res.selected;
  std::string out;
  for (const auto& r : *rules) out += render_rule(r, matrix) + "\n";
  return out;
}

namespace report_detail {

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string join_one_based(const std::vector<std::uint32_t>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(xs[k] + 1);
  }
  return out;
}

}  // namespace report_detail

inline std::string biclusters_csv(const PipelineResult& res, const MixedMatrix& matrix) {
  using report_detail::csv_quote;
  std::string out = "id,rows,columns,extent,intent";
  const bool labeled = !res.scored.empty();
  if (labeled) out += ",antecedent,consequent,support,confidence,completeness,lift,leverage";
  out += "\n";
  for (std::size_t k = 0; k < res.biclusters.size(); ++k) {
    const Bicluster& b = res.biclusters[k];
    out += std::to_string(k + 1) + "," + std::to_string(b.extent.size()) + "," + std::to_string(b.intent.size()) + "," +
           report_detail::join_one_based(b.extent) + "," + report_detail::join_one_based(b.intent);
    if (labeled) {
      const auto& r = res.scored[k];
      out += "," + csv_quote(render_antecedent(r.rule, matrix)) + "," + csv_quote(r.rule.consequent) + "," +
             std::to_string(r.metrics.support) + "," + format_fixed(r.metrics.confidence, 6) + "," +
             format_fixed(r.metrics.completeness, 6) + "," + format_fixed(r.metrics.lift, 6) + "," +
             format_fixed(r.metrics.leverage, 6);
    }
    out += "\n";
  }
  return out;
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw DataError("write failed for '" + path.string() + "'");
}

inline void write_json(const std::filesystem::path& path, const nlohmann::json& doc) {
  write_text(path, doc.dump(2) + "\n");
}

// Reads biclusters.json back into 0-based biclusters.
inline std::vector<Bicluster> load_biclusters_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::vector<Bicluster> out;
  try {
    const auto doc = nlohmann::json::parse(in);
    for (const auto& e : doc.at("biclusters")) {
      Bicluster b;
      for (const auto& i : e.at("extent")) b.extent.push_back(i.get<RowIndex>() - 1);
      for (const auto& j : e.at("intent")) b.intent.push_back(j.get<ColIndex>() - 1);
      out.push_back(std::move(b));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError("malformed biclusters file '" + path.string() + "': " + e.what());
  }
  return out;
}

}  // namespace biclose
