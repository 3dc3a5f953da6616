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

// JSON sidecar schema for delimited datasets.
//
//   {
//     "missing": "?",                 // missing-value token, default ""
//     "label": "class",               // optional class-label column
//     "id": "name",                   // optional row identifier column
//     "ignore": ["other_target"],     // columns read but neither mined nor used
//     "delimiter": ",",               // optional; guessed when absent
//     "columns": [
//       {"name": "temperature", "kind": "real", "epsilon": 2.4},
//       {"name": "nausea", "kind": "nominal", "categories": ["no", "yes"]},
//       {"name": "buying", "kind": "ordinal", "categories": ["low", "med", "high", "v-high"], "epsilon": 0}
//     ]
//   }
//
// Mined columns keep the order of the data file's header.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "biclose/csv.hpp"
#include "biclose/datamodel.hpp"
#include "biclose/error.hpp"

namespace biclose {

struct DatasetSchema {
  std::vector<AttributeSchema> columns;
  std::optional<std::string> label;
  std::optional<std::string> id;
  std::vector<std::string> ignore;
  std::string missing;
  char delimiter = '\0';

  const AttributeSchema* find(const std::string& name) const {
    for (const auto& c : columns) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
  bool is_ignored(const std::string& name) const {
    return std::find(ignore.begin(), ignore.end(), name) != ignore.end();
  }
};

inline DatasetSchema parse_schema(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("schema must be a JSON object");
  DatasetSchema schema;
  try {
    schema.missing = doc.value("missing", std::string{});
    if (doc.contains("label") && !doc["label"].is_null()) schema.label = doc["label"].get<std::string>();
    if (doc.contains("id") && !doc["id"].is_null()) schema.id = doc["id"].get<std::string>();
    if (doc.contains("ignore")) schema.ignore = doc["ignore"].get<std::vector<std::string>>();
    if (doc.contains("delimiter")) {
      const auto d = doc["delimiter"].get<std::string>();
      if (d == "\\t" || d == "tab") {
        schema.delimiter = '\t';
      } else if (d.size() == 1) {
        schema.delimiter = d.front();
      } else {
        throw ConfigError("delimiter must be a single character");
      }
    }
    if (!doc.contains("columns") || !doc["columns"].is_array()) throw ConfigError("schema needs a 'columns' array");
    std::set<std::string> seen;
    for (const auto& c : doc["columns"]) {
      AttributeSchema a;
      a.name = c.at("name").get<std::string>();
      a.kind = parse_attribute_kind(c.value("kind", std::string{"real"}));
      a.epsilon = c.value("epsilon", 0.0);
      if (c.contains("categories")) a.categories = c["categories"].get<std::vector<std::string>>();
      if (!seen.insert(a.name).second) throw ConfigError("duplicate column name '" + a.name + "' in schema");
      schema.columns.push_back(std::move(a));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed schema: ") + e.what());
  }
  return schema;
}

inline DatasetSchema load_schema(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open schema '" + path.string() + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed JSON in '" + path.string() + "': " + e.what());
  }
  return parse_schema(doc);
}

struct ColumnBinding {
  std::string name;
  AttributeKind kind = AttributeKind::Real;
  double epsilon = 0.0;
  std::size_t header_index = 0;
};

struct SchemaDiagnostics {
  std::vector<ColumnBinding> bound;           // mined columns, header order
  std::vector<std::string> unbound_header;    // header columns the schema does not mention
  std::vector<std::string> unknown_columns;   // schema columns absent from the header
  std::vector<std::string> duplicate_header;  // repeated header names
  std::vector<std::string> violations;        // invalid declarations
  std::optional<std::size_t> label_index;
  std::optional<std::size_t> id_index;

  bool ok() const {
    return unbound_header.empty() && unknown_columns.empty() && duplicate_header.empty() && violations.empty();
  }

  std::string summary() const {
    std::string out;
    for (const auto& b : bound) {
      out += "bound " + b.name + " (" + std::string(to_string(b.kind)) + ", epsilon=" + format_number(b.epsilon) + ")\n";
    }
    for (const auto& c : unbound_header) out += "error: header column '" + c + "' is not declared in the schema\n";
    for (const auto& c : unknown_columns) out += "error: schema column '" + c + "' does not appear in the header\n";
    for (const auto& c : duplicate_header) out += "error: duplicate header column '" + c + "'\n";
    for (const auto& v : violations) out += "error: " + v + "\n";
    return out;
  }
};

inline SchemaDiagnostics validate_schema(const DatasetSchema& schema, const std::vector<std::string>& header) {
  SchemaDiagnostics diag;
  std::set<std::string> header_names;
  for (std::size_t h = 0; h < header.size(); ++h) {
    const std::string& name = header[h];
    if (!header_names.insert(name).second) {
      diag.duplicate_header.push_back(name);
      continue;
    }
    if (schema.label && name == *schema.label) {
      diag.label_index = h;
    } else if (schema.id && name == *schema.id) {
      diag.id_index = h;
    } else if (schema.is_ignored(name)) {
      continue;
    } else if (const AttributeSchema* a = schema.find(name)) {
      diag.bound.push_back({a->name, a->kind, a->epsilon, h});
    } else {
      diag.unbound_header.push_back(name);
    }
  }
  for (const auto& c : schema.columns) {
    if (!header_names.count(c.name)) diag.unknown_columns.push_back(c.name);
    try {
      c.validate();
    } catch (const ConfigError& e) {
      diag.violations.push_back(e.what());
    }
    if ((schema.label && c.name == *schema.label) || (schema.id && c.name == *schema.id)) {
      diag.violations.push_back("column '" + c.name + "' is both mined and used as label/id");
    }
  }
  if (schema.label && !header_names.count(*schema.label)) {
    diag.unknown_columns.push_back(*schema.label);
  }
  if (schema.id && !header_names.count(*schema.id)) diag.unknown_columns.push_back(*schema.id);
  return diag;
}

// Reads and encodes a dataset. ConfigError for schema/header mismatches,
// DataError for unreadable files or cells that do not parse.
inline MixedMatrix load_dataset(const std::filesystem::path& data_path, const DatasetSchema& schema) {
  const RawTable table = read_table(data_path, schema.delimiter);
  const SchemaDiagnostics diag = validate_schema(schema, table.header);
  if (!diag.ok()) throw ConfigError("schema does not match '" + data_path.string() + "':\n" + diag.summary());

  RawTable mined;
  std::vector<AttributeSchema> attrs;
  for (const auto& b : diag.bound) {
    mined.header.push_back(b.name);
    attrs.push_back(*schema.find(b.name));
  }
  std::vector<std::string> labels;
  std::vector<std::string> ids;
  for (const auto& row : table.rows) {
    std::vector<std::string> cells;
    cells.reserve(diag.bound.size());
    for (const auto& b : diag.bound) cells.push_back(row[b.header_index]);
    mined.rows.push_back(std::move(cells));
    if (diag.label_index) {
      const std::string& label = row[*diag.label_index];
      if (label == schema.missing) {
        throw DataError("row " + std::to_string(mined.rows.size()) + " has a missing class label");
      }
      labels.push_back(label);
    }
    if (diag.id_index) ids.push_back(row[*diag.id_index]);
  }
  MixedMatrix matrix = encode_dataset(mined, std::move(attrs), schema.missing);
  matrix.set_labels(std::move(labels));
  matrix.set_row_ids(std::move(ids));
  return matrix;
}

}  // namespace biclose
