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

// Mines a small labeled table in memory and prints the selected rules.

#include <iostream>

#include "biclose/biclose.hpp"

int main() {
  biclose::RawTable raw;
  raw.header = {"size", "color", "weight"};
  raw.rows = {{"1.0", "red", "10"}, {"1.1", "red", "11"}, {"1.2", "red", "10"}, {"3.0", "blue", "30"},
              {"3.1", "blue", "31"}, {"2.9", "blue", "29"}, {"1.1", "blue", "30"}, {"3.0", "red", "11"}};
  std::vector<biclose::AttributeSchema> schema = {
      {"size", biclose::AttributeKind::Real, {}, 0.2},
      {"color", biclose::AttributeKind::Nominal, {"red", "blue"}, 0.0},
      {"weight", biclose::AttributeKind::Integer, {}, 1.0},
  };
  biclose::MixedMatrix matrix = biclose::encode_dataset(raw, schema);
  matrix.set_labels({"small", "small", "small", "large", "large", "large", "large", "small"});

  const auto params = biclose::EnumParams::for_matrix(matrix, 2, 1);
  biclose::PipelineOptions options;
  options.min_conf = 0.9;
  const auto result = biclose::run_pipeline(matrix, params, options);

  std::cout << result.original.count << " biclusters, " << result.filter1.count << " relevant, "
            << result.filter2.count << " selected\n";
  for (const auto& rule : result.selected) std::cout << biclose::render_rule(rule, matrix) << "\n";
  return 0;
}
