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

// Exhaustive reference miner for small matrices. For every non-empty column
// subset it computes the inclusion-maximal row sets homogeneous on all of
// those columns, closes each one over the remaining columns and keeps one
// bicluster per extent. Exponential in the column count; used as ground
// truth by the tests and behind the CLI's --oracle flag.

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "biclose/bicluster.hpp"
#include "biclose/datamodel.hpp"
#include "biclose/error.hpp"

namespace biclose {

inline constexpr std::size_t kOracleMaxCols = 20;

namespace oracle_detail {

inline bool is_subset(const RowSet& a, const RowSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Drops duplicates and every set strictly contained in another one.
inline std::vector<RowSet> keep_maximal(std::vector<RowSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const RowSet& a, const RowSet& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<RowSet> kept;
  for (auto& s : sets) {
    const bool covered =
        std::any_of(kept.begin(), kept.end(), [&](const RowSet& big) { return is_subset(s, big); });
    if (!covered) kept.push_back(std::move(s));
  }
  return kept;
}

// Maximal row sets on a single column: for every present value v, the rows
// whose values lie in [v, v + eps], then maximality filtering.
inline std::vector<RowSet> column_blocks(const MixedMatrix& matrix, ColIndex j, double epsilon) {
  std::vector<RowSet> blocks;
  for (RowIndex r = 0; r < matrix.rows(); ++r) {
    if (matrix.is_missing(r, j)) continue;
    const double base = matrix.value(r, j);
    RowSet block;
    for (RowIndex i = 0; i < matrix.rows(); ++i) {
      if (matrix.is_missing(i, j)) continue;
      const double v = matrix.value(i, j);
      if (v >= base && v - base <= epsilon) block.push_back(i);
    }
    blocks.push_back(std::move(block));
  }
  return keep_maximal(std::move(blocks));
}

}  // namespace oracle_detail

inline std::vector<Bicluster> brute_force_enumerate(const MixedMatrix& matrix, const EnumParams& params) {
  using namespace oracle_detail;
  params.validate(matrix);
  const std::size_t m = matrix.cols();
  if (m > kOracleMaxCols) {
    throw ConfigError("oracle refuses matrices with more than " + std::to_string(kOracleMaxCols) + " columns");
  }
  std::vector<std::vector<RowSet>> blocks(m);
  for (ColIndex j = 0; j < m; ++j) blocks[j] = column_blocks(matrix, j, params.epsilons[j]);

  std::map<RowSet, ColSet> by_extent;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<RowSet> family;
    bool first = true;
    for (ColIndex j = 0; j < m; ++j) {
      if (!(mask & (1u << j))) continue;
      if (first) {
        family = blocks[j];
        first = false;
        continue;
      }
      std::vector<RowSet> next;
      for (const auto& a : family) {
        for (const auto& b : blocks[j]) {
          RowSet both;
          std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
          if (!both.empty()) next.push_back(std::move(both));
        }
      }
      family = keep_maximal(std::move(next));
    }
    for (auto& rows : family) {
      if (rows.size() < params.min_rows) continue;
      ColSet closed;
      for (ColIndex j = 0; j < m; ++j) {
        if (column_fits(matrix, rows, j, params.epsilons[j])) closed.push_back(j);
      }
      by_extent.emplace(std::move(rows), std::move(closed));
    }
  }

  std::vector<Bicluster> out;
  for (auto& [extent, intent] : by_extent) {
    if (intent.size() >= params.min_cols) out.push_back(Bicluster{extent, intent});
  }
  return out;
}

}  // namespace biclose
