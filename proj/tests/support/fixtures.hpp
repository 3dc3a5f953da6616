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

// Shared matrices and generators for the test binaries.

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "biclose/bicluster.hpp"
#include "biclose/datamodel.hpp"

namespace biclose::testing {

// 10 x 3 uniform random matrix used as the worked real-valued example.
inline MixedMatrix real_example_matrix() {
  return MixedMatrix::from_rows({{0.278, 0.422, 0.743},
                                 {0.547, 0.916, 0.392},
                                 {0.958, 0.792, 0.655},
                                 {0.965, 0.959, 0.171},
                                 {0.158, 0.656, 0.706},
                                 {0.971, 0.036, 0.032},
                                 {0.957, 0.849, 0.277},
                                 {0.485, 0.934, 0.046},
                                 {0.800, 0.679, 0.097},
                                 {0.142, 0.758, 0.823}},
                                0.2);
}

// The twelve maximal biclusters of real_example_matrix() at mR = mC = 2,
// eps = 0.2, written 1-based as published.
inline std::vector<Bicluster> real_example_expected() {
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> rows = {
      {{1, 5, 10}, {1, 3}}, {{5, 10}, {1, 2, 3}}, {{2, 8}, {1, 2}},    {{3, 7, 9}, {1, 2}},
      {{7, 9}, {1, 2, 3}},  {{3, 4, 7}, {1, 2}},  {{4, 7}, {1, 2, 3}}, {{4, 6, 9}, {1, 3}},
      {{4, 7, 9}, {1, 3}},  {{3, 5, 10}, {2, 3}}, {{2, 7}, {2, 3}},    {{4, 8}, {2, 3}},
  };
  std::vector<Bicluster> out;
  for (const auto& [ext, in] : rows) {
    Bicluster b;
    for (int r : ext) b.extent.push_back(static_cast<RowIndex>(r - 1));
    for (int c : in) b.intent.push_back(static_cast<ColIndex>(c - 1));
    out.push_back(std::move(b));
  }
  return out;
}

// The 20-person mixed-attribute table: Sex, Age, Weight, Height, Smoker,
// Religion, SocialClass.
inline RawTable people_table() {
  RawTable t;
  t.header = {"Sex", "Age", "Weight", "Height", "Smoker", "Religion", "SocialClass"};
  t.rows = {
      {"F", "32", "94.87", "1.72", "Y", "Christian", "C"}, {"F", "34", "99.39", "1.63", "N", "Christian", "D"},
      {"F", "33", "124.15", "1.66", "N", "Hindu", "C"},    {"M", "52", "49.77", "1.71", "Y", "Christian", "E"},
      {"F", "57", "65.13", "1.80", "N", "Hindu", "C"},     {"F", "39", "58.71", "1.74", "N", "Buddhist", "E"},
      {"F", "39", "67.41", "1.56", "N", "Christian", "C"}, {"F", "47", "67.19", "1.79", "Y", "Christian", "B"},
      {"M", "58", "42.95", "1.48", "N", "Christian", "A"}, {"M", "17", "109.52", "1.62", "N", "Christian", "C"},
      {"F", "42", "91.12", "1.76", "N", "Buddhist", "D"},  {"F", "48", "58.07", "1.50", "N", "Islamist", "D"},
      {"M", "43", "46.69", "1.61", "N", "Hindu", "B"},     {"M", "55", "85.38", "1.54", "N", "Islamist", "C"},
      {"M", "34", "39.77", "1.70", "N", "Christian", "B"}, {"M", "34", "83.90", "1.74", "N", "Islamist", "D"},
      {"M", "51", "55.72", "1.93", "Y", "Islamist", "B"},  {"F", "47", "57.10", "1.51", "N", "Christian", "C"},
      {"M", "38", "54.01", "1.85", "Y", "Islamist", "C"},  {"M", "45", "73.10", "1.59", "N", "Islamist", "C"},
  };
  return t;
}

// Schema for people_table(); category order follows the published integer
// codes (M first so that M encodes to 1).
inline std::vector<AttributeSchema> people_schema(double age_eps = 8, double weight_eps = 15,
                                                  double height_eps = 0.08, double social_eps = 1) {
  return {
      {"Sex", AttributeKind::Nominal, {"M", "F"}, 0.0},
      {"Age", AttributeKind::Integer, {}, age_eps},
      {"Weight", AttributeKind::Real, {}, weight_eps},
      {"Height", AttributeKind::Real, {}, height_eps},
      {"Smoker", AttributeKind::Nominal, {"N", "Y"}, 0.0},
      {"Religion", AttributeKind::Nominal, {"Christian", "Islamist", "Hindu", "Buddhist"}, 0.0},
      {"SocialClass", AttributeKind::Ordinal, {"A", "B", "C", "D", "E"}, social_eps},
  };
}

struct RandomInstance {
  MixedMatrix matrix;
  EnumParams params;
};

// Random mixed matrix: kinds drawn from all four, values on coarse grids so
// that ties and exact-epsilon gaps occur, 0-20% of cells missing.
inline RandomInstance random_instance(std::mt19937& rng, std::size_t max_rows = 10, std::size_t max_cols = 6) {
  std::uniform_int_distribution<std::size_t> nd(1, max_rows);
  std::uniform_int_distribution<std::size_t> md(1, max_cols);
  const std::size_t n = nd(rng);
  const std::size_t m = md(rng);
  std::uniform_int_distribution<int> kind_d(0, 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double missing_rate = 0.2 * unit(rng);

  std::vector<AttributeSchema> schema(m);
  for (std::size_t j = 0; j < m; ++j) {
    auto& a = schema[j];
    a.name = "c" + std::to_string(j + 1);
    a.kind = static_cast<AttributeKind>(kind_d(rng));
    switch (a.kind) {
      case AttributeKind::Real: a.epsilon = std::round(unit(rng) * 40.0) / 100.0; break;
      case AttributeKind::Integer: a.epsilon = std::uniform_int_distribution<int>(0, 4)(rng) * 0.5; break;
      case AttributeKind::Ordinal:
        a.categories = {"a", "b", "c", "d"};
        a.epsilon = std::uniform_int_distribution<int>(0, 1)(rng);
        break;
      case AttributeKind::Nominal:
        a.categories = {"x", "y", "z"};
        a.epsilon = 0.0;
        break;
    }
  }
  MixedMatrix matrix(schema, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto r = static_cast<RowIndex>(i);
      const auto c = static_cast<ColIndex>(j);
      if (unit(rng) < missing_rate) {
        matrix.set_missing(r, c);
        continue;
      }
      switch (schema[j].kind) {
        case AttributeKind::Real: matrix.set(r, c, std::round(unit(rng) * 10.0) / 10.0); break;
        case AttributeKind::Integer: matrix.set(r, c, std::uniform_int_distribution<int>(0, 3)(rng)); break;
        case AttributeKind::Ordinal: matrix.set(r, c, std::uniform_int_distribution<int>(1, 4)(rng)); break;
        case AttributeKind::Nominal: matrix.set(r, c, std::uniform_int_distribution<int>(1, 3)(rng)); break;
      }
    }
  }
  const std::size_t mr = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(n, 3))(rng);
  const std::size_t mc = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(m, 3))(rng);
  EnumParams params = EnumParams::for_matrix(matrix, mr, mc);
  return {std::move(matrix), std::move(params)};
}

inline std::set<Bicluster> as_set(const std::vector<Bicluster>& v) { return {v.begin(), v.end()}; }

}  // namespace biclose::testing
