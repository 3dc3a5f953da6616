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

// Mining pipeline: enumerate, score, relevance filter, greedy selection.

#include <cstddef>
#include <vector>

#include "biclose/bicluster.hpp"
#include "biclose/datamodel.hpp"
#include "biclose/enumerator.hpp"
#include "biclose/oracle.hpp"
#include "biclose/rules.hpp"

namespace biclose {

enum class Stage { Enumerate = 1, Filter1 = 2, Filter2 = 3 };

struct PipelineOptions {
  Stage last_stage = Stage::Filter2;
  double min_conf = 0.95;
  double min_lift_distance = 0.2;
  Threshold threshold = Threshold::Inclusive;
  bool use_oracle = false;
};

// One row of the results table: count plus class-restricted coverage.
struct StageSummary {
  std::size_t count = 0;
  Coverage coverage;
};

struct PipelineResult {
  std::vector<Bicluster> biclusters;
  std::vector<ScoredRule> scored;     // empty for unlabeled data
  std::vector<ScoredRule> filtered;   // 1st stage
  std::vector<ScoredRule> selected;   // 2nd stage
  std::vector<std::size_t> filtered_index;  // positions into `scored`
  std::vector<std::size_t> selected_index;
  EnumStats stats;
  StageSummary original;
  StageSummary filter1;
  StageSummary filter2;
};

namespace pipeline_detail {

// Positions of `subset` members inside `all`, both in enumeration order.
inline std::vector<std::size_t> positions(const std::vector<ScoredRule>& all, const std::vector<ScoredRule>& subset) {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < all.size() && k < subset.size(); ++i) {
    if (all[i].rule.source == subset[k].rule.source) {
      out.push_back(i);
      ++k;
    }
  }
  return out;
}

}  // namespace pipeline_detail

inline PipelineResult run_pipeline(const MixedMatrix& matrix, const EnumParams& params,
                                   const PipelineOptions& options = {}) {
  PipelineResult res;
  if (options.use_oracle) {
    res.biclusters = brute_force_enumerate(matrix, params);
  } else {
    res.biclusters = enumerate(matrix, params, {}, &res.stats);
  }
  res.original.count = res.biclusters.size();
  if (!matrix.has_labels()) {
    if (options.last_stage != Stage::Enumerate) {
      throw DataError("filter stages need class labels; declare a label column in the schema");
    }
    return res;
  }
  res.scored = score_biclusters(res.biclusters, matrix);
  res.original.coverage = row_coverage(res.scored, matrix);
  if (options.last_stage == Stage::Enumerate) return res;

  res.filtered = filter_relevance(res.scored, options.min_conf, options.min_lift_distance, options.threshold);
  res.filtered_index = pipeline_detail::positions(res.scored, res.filtered);
  res.filter1 = {res.filtered.size(), row_coverage(res.filtered, matrix)};
  if (options.last_stage == Stage::Filter1) return res;

  res.selected = greedy_select(res.filtered, matrix);
  for (const auto& s : res.selected) {
    for (std::size_t k = 0; k < res.filtered.size(); ++k) {
      if (res.filtered[k].rule.source == s.rule.source) {
        res.selected_index.push_back(res.filtered_index[k]);
        break;
      }
    }
  }
  res.filter2 = {res.selected.size(), row_coverage(res.selected, matrix)};
  return res;
}

}  // namespace biclose
