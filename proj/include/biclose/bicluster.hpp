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

#include <algorithm>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "biclose/datamodel.hpp"

namespace biclose {

struct Bicluster {
  RowSet extent;  // I
  ColSet intent;  // J

  friend bool operator==(const Bicluster&, const Bicluster&) = default;
  friend auto operator<=>(const Bicluster&, const Bicluster&) = default;
};

// True iff column j has no missing cell over `rows` and its value range
// over `rows` is at most epsilon. Vacuously true for an empty row set.
inline bool column_fits(const MixedMatrix& matrix, std::span<const RowIndex> rows, ColIndex j, double epsilon) {
  const auto col = matrix.column(j);
  double lo = 0.0;
  double hi = 0.0;
  bool first = true;
  for (RowIndex i : rows) {
    if (matrix.is_missing(i, j)) return false;
    const double v = col[i];
    if (first) {
      lo = hi = v;
      first = false;
    } else {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      if (hi - lo > epsilon) return false;
    }
  }
  return true;
}

// CVC homogeneity: every intent column fits over the extent.
inline bool is_cvc(const MixedMatrix& matrix, const Bicluster& b, std::span<const double> epsilons) {
  for (ColIndex j : b.intent) {
    if (!column_fits(matrix, b.extent, j, epsilons[j])) return false;
  }
  return true;
}

// One-step maximality: no single row and no single column can be added
// while keeping the bicluster a valid CVC bicluster.
inline bool is_maximal(const MixedMatrix& matrix, const Bicluster& b, std::span<const double> epsilons) {
  std::vector<RowIndex> grown = b.extent;
  for (RowIndex g = 0; g < matrix.rows(); ++g) {
    if (std::binary_search(b.extent.begin(), b.extent.end(), g)) continue;
    grown.assign(b.extent.begin(), b.extent.end());
    grown.push_back(g);
    if (is_cvc(matrix, Bicluster{grown, b.intent}, epsilons)) return false;
  }
  for (ColIndex j = 0; j < matrix.cols(); ++j) {
    if (std::binary_search(b.intent.begin(), b.intent.end(), j)) continue;
    if (column_fits(matrix, b.extent, j, epsilons[j])) return false;
  }
  return true;
}

inline bool is_strictly_ascending(std::span<const std::uint32_t> xs) {
  return std::adjacent_find(xs.begin(), xs.end(), [](auto a, auto b) { return a >= b; }) == xs.end();
}

// 1-based "1, 5, 10 / 1, 3" rendering used in logs and test failure output.
inline std::string to_string(const Bicluster& b) {
  std::string out;
  for (std::size_t k = 0; k < b.extent.size(); ++k) {
    out += (k ? ", " : "") + std::to_string(b.extent[k] + 1);
  }
  out += " / ";
  for (std::size_t k = 0; k < b.intent.size(); ++k) {
    out += (k ? ", " : "") + std::to_string(b.intent[k] + 1);
  }
  return out;
}

}  // namespace biclose
