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

// Enumeration of all maximal CVC biclusters of a mixed-attribute matrix.
//
// The search starts from the supremum (all rows, no columns). Each node
// closes its intent over the columns from its start attribute on; a column
// that does not fit the extent splits it into the maximal windows of width
// epsilon along that column. A window seeds a child node only if it is large
// enough, has never been seeded before, is canonical (no earlier column
// outside the intent fits it) and is row-maximal with respect to the node's
// check rows. Missing cells never enter an extent on an intent column.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "biclose/bicluster.hpp"
#include "biclose/datamodel.hpp"

namespace biclose {

struct RowSetHash {
  std::size_t operator()(const RowSet& rows) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ rows.size();
    for (RowIndex r : rows) {
      h ^= r + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Every extent that ever seeded a search node. Membership is exact: the hash
// only selects a bucket, equality compares the full row sequence.
class ExtentRegistry {
 public:
  bool contains(const RowSet& extent) const { return seen_.find(extent) != seen_.end(); }
  bool insert(const RowSet& extent) { return seen_.insert(extent).second; }
  std::size_t size() const { return seen_.size(); }
  void clear() { seen_.clear(); }

 private:
  std::unordered_set<RowSet, RowSetHash> seen_;
};

struct SearchNode {
  RowSet extent;          // I
  ColSet intent;          // J, inherited part on entry
  ColIndex first_col = 0; // y, 0-based; first column to close over
  RowSet check_rows;      // Gamma, disjoint from extent
};

// A window waiting in a node's queue: extent G spawned at column j with
// check rows Omega.
struct PendingChild {
  RowSet extent;
  ColIndex spawn_col = 0;
  RowSet check_rows;
};

// Inclusion-maximal subsets G of `rows` whose values in column j span at
// most epsilon, skipping rows missing in j. Windows come out in ascending
// value order, each with its rows in ascending index order.
inline std::vector<RowSet> compute_new_extents(const MixedMatrix& matrix, std::span<const RowIndex> rows, ColIndex j,
                                               double epsilon) {
  const auto col = matrix.column(j);
  std::vector<std::pair<double, RowIndex>> sorted;
  sorted.reserve(rows.size());
  for (RowIndex i : rows) {
    if (!matrix.is_missing(i, j)) sorted.emplace_back(col[i], i);
  }
  std::sort(sorted.begin(), sorted.end());

  std::vector<RowSet> windows;
  const std::size_t k = sorted.size();
  std::size_t end = 0;        // inclusive end of the current window
  std::size_t last_end = 0;   // inclusive end of the last emitted window
  bool emitted = false;
  for (std::size_t start = 0; start < k; ++start) {
    if (end < start) end = start;
    while (end + 1 < k && sorted[end + 1].first - sorted[start].first <= epsilon) ++end;
    if (emitted && end <= last_end) continue;
    RowSet window;
    window.reserve(end - start + 1);
    for (std::size_t p = start; p <= end; ++p) window.push_back(sorted[p].second);
    std::sort(window.begin(), window.end());
    windows.push_back(std::move(window));
    last_end = end;
    emitted = true;
  }
  return windows;
}

// G spawned at column j is canonical iff no column k < j outside the
// current intent fits G.
inline bool is_canonical(const MixedMatrix& matrix, std::span<const RowIndex> extent, std::span<const ColIndex> intent,
                         ColIndex j, std::span<const double> epsilons) {
  auto it = intent.begin();
  for (ColIndex k = 0; k < j; ++k) {
    while (it != intent.end() && *it < k) ++it;
    if (it != intent.end() && *it == k) continue;
    if (column_fits(matrix, extent, k, epsilons[k])) return false;
  }
  return true;
}

// True iff no row of `check_rows` can join (extent, columns) as a valid CVC
// bicluster. `columns` must fit `extent`.
inline bool is_row_maximal(const MixedMatrix& matrix, std::span<const RowIndex> extent,
                           std::span<const ColIndex> columns, std::span<const RowIndex> check_rows,
                           std::span<const double> epsilons) {
  if (check_rows.empty() || extent.empty()) return true;
  std::vector<double> lo(columns.size());
  std::vector<double> hi(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const auto col = matrix.column(columns[c]);
    lo[c] = hi[c] = col[extent.front()];
    for (RowIndex i : extent) {
      lo[c] = std::min(lo[c], col[i]);
      hi[c] = std::max(hi[c], col[i]);
    }
  }
  for (RowIndex g : check_rows) {
    bool fits = true;
    for (std::size_t c = 0; c < columns.size() && fits; ++c) {
      const ColIndex k = columns[c];
      if (matrix.is_missing(g, k)) {
        fits = false;
        break;
      }
      const double v = matrix.value(g, k);
      fits = std::max(hi[c], v) - std::min(lo[c], v) <= epsilons[k];
    }
    if (fits) return false;
  }
  return true;
}

// Check rows handed to the child seeded by G at column j: the parent's
// check rows plus every row outside G whose value in column j lies within
// epsilon of a window holding at least `min_rows` rows of G, i.e. in
// [v(mR) - eps, v(|G|-mR+1) + eps] over the ascending values v of G.
inline RowSet compute_rm(const MixedMatrix& matrix, std::span<const RowIndex> extent, ColIndex j,
                         std::span<const RowIndex> check_rows, double epsilon, std::size_t min_rows) {
  const auto col = matrix.column(j);
  std::vector<double> v;
  v.reserve(extent.size());
  for (RowIndex i : extent) v.push_back(col[i]);
  std::sort(v.begin(), v.end());
  const std::size_t r = std::clamp<std::size_t>(min_rows, 1, v.size());
  const double pivot_low = v[r - 1];
  const double pivot_high = v[v.size() - r];

  RowSet added;
  auto in_extent = extent.begin();
  for (RowIndex i = 0; i < matrix.rows(); ++i) {
    while (in_extent != extent.end() && *in_extent < i) ++in_extent;
    if (in_extent != extent.end() && *in_extent == i) continue;
    if (matrix.is_missing(i, j)) continue;
    const double a = col[i];
    if (pivot_low - a <= epsilon && a - pivot_high <= epsilon) added.push_back(i);
  }
  RowSet out;
  out.reserve(check_rows.size() + added.size());
  std::set_union(check_rows.begin(), check_rows.end(), added.begin(), added.end(), std::back_inserter(out));
  return out;
}

// True iff a node with `intent_size` columns starting at 0-based column
// `first_col` cannot reach `min_cols` columns even by adding every column
// from first_col on.
inline constexpr bool abort_on_mc(std::size_t intent_size, std::size_t first_col, std::size_t cols,
                                  std::size_t min_cols) {
  const std::size_t remaining = first_col < cols ? cols - first_col : 0;
  return intent_size + remaining < min_cols;
}

struct EnumOptions {
  bool prune_min_cols = true;
};

struct EnumStats {
  std::size_t node_expansions = 0;  // closures performed
  std::size_t candidates = 0;       // windows produced by compute_new_extents
  std::size_t rejected_size = 0;
  std::size_t rejected_registry = 0;
  std::size_t rejected_canonical = 0;
  std::size_t rejected_row_maximal = 0;
  std::size_t pruned_min_cols = 0;
  std::size_t registry_size = 0;
  std::size_t biclusters = 0;
};

// Closes node.intent over columns node.first_col.. and returns the children
// spawned by non-fitting columns, in ascending column order. The closed
// intent is written back into node.intent.
inline std::vector<PendingChild> close_intent(SearchNode& node, const MixedMatrix& matrix, const EnumParams& params,
                                              ExtentRegistry& registry, EnumStats* stats = nullptr) {
  std::vector<PendingChild> queue;
  const std::size_t m = matrix.cols();
  std::vector<std::uint8_t> in_intent(m, 0);
  for (ColIndex c : node.intent) in_intent[c] = 1;

  for (ColIndex j = node.first_col; j < m; ++j) {
    if (in_intent[j]) continue;
    if (column_fits(matrix, node.extent, j, params.epsilons[j])) {
      node.intent.insert(std::lower_bound(node.intent.begin(), node.intent.end(), j), j);
      in_intent[j] = 1;
      continue;
    }
    for (RowSet& g : compute_new_extents(matrix, node.extent, j, params.epsilons[j])) {
      if (stats) ++stats->candidates;
      if (g.size() < params.min_rows) {
        if (stats) ++stats->rejected_size;
        continue;
      }
      if (registry.contains(g)) {
        if (stats) ++stats->rejected_registry;
        continue;
      }
      if (!is_canonical(matrix, g, node.intent, j, params.epsilons)) {
        if (stats) ++stats->rejected_canonical;
        continue;
      }
      ColSet h = node.intent;
      h.insert(std::lower_bound(h.begin(), h.end(), j), j);
      if (!is_row_maximal(matrix, g, h, node.check_rows, params.epsilons)) {
        if (stats) ++stats->rejected_row_maximal;
        continue;
      }
      registry.insert(g);
      RowSet omega = compute_rm(matrix, g, j, node.check_rows, params.epsilons[j], params.min_rows);
      queue.push_back(PendingChild{std::move(g), j, std::move(omega)});
    }
  }
  return queue;
}

// Depth-first enumeration with an explicit stack of per-node child queues.
// `visit` receives every maximal bicluster with at least min_rows rows and
// min_cols columns, parents before their descendants.
template <typename Visitor>
EnumStats enumerate_each(const MixedMatrix& matrix, const EnumParams& params, Visitor&& visit,
                         EnumOptions options = {}) {
  params.validate(matrix);
  EnumStats stats;
  if (matrix.rows() == 0 || matrix.cols() == 0) return stats;

  ExtentRegistry registry;
  struct Frame {
    ColSet intent;
    std::vector<PendingChild> queue;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;

  auto expand = [&](SearchNode node) {
    if (options.prune_min_cols &&
        abort_on_mc(node.intent.size(), node.first_col, matrix.cols(), params.min_cols)) {
      ++stats.pruned_min_cols;
      return;
    }
    ++stats.node_expansions;
    auto queue = close_intent(node, matrix, params, registry, &stats);
    if (node.intent.size() >= params.min_cols && node.extent.size() >= params.min_rows) {
      ++stats.biclusters;
      visit(Bicluster{node.extent, node.intent});
    }
    if (!queue.empty()) stack.push_back(Frame{std::move(node.intent), std::move(queue), 0});
  };

  SearchNode root;
  root.extent.resize(matrix.rows());
  for (RowIndex i = 0; i < matrix.rows(); ++i) root.extent[i] = i;
  expand(std::move(root));

  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.queue.size()) {
      stack.pop_back();
      continue;
    }
    PendingChild child = std::move(top.queue[top.next++]);
    SearchNode node;
    node.intent = top.intent;
    node.intent.insert(std::lower_bound(node.intent.begin(), node.intent.end(), child.spawn_col), child.spawn_col);
    node.extent = std::move(child.extent);
    node.first_col = child.spawn_col + 1;
    node.check_rows = std::move(child.check_rows);
    expand(std::move(node));  // may reallocate `stack`; `top` is not used afterwards
  }
  stats.registry_size = registry.size();
  return stats;
}

inline std::vector<Bicluster> enumerate(const MixedMatrix& matrix, const EnumParams& params,
                                        EnumOptions options = {}, EnumStats* stats = nullptr) {
  std::vector<Bicluster> out;
  auto s = enumerate_each(matrix, params, [&](Bicluster b) { out.push_back(std::move(b)); }, options);
  if (stats) *stats = s;
  return out;
}

}  // namespace biclose
