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

// Mixed-attribute data matrices: attribute schema, categorical encoding and
// the missing-value mask shared by the miner and the rule builder.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "biclose/error.hpp"

namespace biclose {

using RowIndex = std::uint32_t;
using ColIndex = std::uint32_t;
using RowSet = std::vector<RowIndex>;  // strictly ascending
using ColSet = std::vector<ColIndex>;  // strictly ascending

enum class AttributeKind { Real, Integer, Ordinal, Nominal };

inline constexpr std::string_view to_string(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::Real: return "real";
    case AttributeKind::Integer: return "integer";
    case AttributeKind::Ordinal: return "ordinal";
    case AttributeKind::Nominal: return "nominal";
  }
  return "?";
}

// Accepts the full kind name or its initial, in any case.
inline AttributeKind parse_attribute_kind(std::string_view text) {
  std::string lower(text);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "real" || lower == "r") return AttributeKind::Real;
  if (lower == "integer" || lower == "i") return AttributeKind::Integer;
  if (lower == "ordinal" || lower == "o") return AttributeKind::Ordinal;
  if (lower == "nominal" || lower == "n") return AttributeKind::Nominal;
  throw ConfigError("unknown attribute kind '" + std::string(text) + "'");
}

inline constexpr bool is_categorical(AttributeKind kind) {
  return kind == AttributeKind::Ordinal || kind == AttributeKind::Nominal;
}

struct AttributeSchema {
  std::string name;
  AttributeKind kind = AttributeKind::Real;
  // Ordered category strings; the i-th entry encodes to i + 1. Empty for
  // numeric kinds. A nominal column may be declared without categories, in
  // which case encode_dataset() fills them in first-appearance order.
  std::vector<std::string> categories;
  double epsilon = 0.0;

  // Throws ConfigError when the declaration is inconsistent.
  void validate() const {
    if (name.empty()) throw ConfigError("attribute with empty name");
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
      throw ConfigError("attribute '" + name + "': epsilon must be a finite non-negative number");
    }
    if (kind == AttributeKind::Nominal && epsilon != 0.0) {
      throw ConfigError("attribute '" + name + "': nominal attributes require epsilon = 0");
    }
    if (!is_categorical(kind) && !categories.empty()) {
      throw ConfigError("attribute '" + name + "': categories given for a numeric attribute");
    }
    if (kind == AttributeKind::Ordinal && categories.empty()) {
      throw ConfigError("attribute '" + name + "': ordinal attributes need an ordered category list");
    }
    std::vector<std::string> sorted = categories;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ConfigError("attribute '" + name + "': duplicate category strings");
    }
  }

  // 1-based code of `category`, or nullopt if undeclared.
  std::optional<int> code_of(std::string_view category) const {
    for (std::size_t i = 0; i < categories.size(); ++i) {
      if (categories[i] == category) return static_cast<int>(i + 1);
    }
    return std::nullopt;
  }
};

// Encoded n x m matrix. Values are stored column-major because every hot
// loop of the miner walks one column over a row subset.
class MixedMatrix {
 public:
  MixedMatrix() = default;

  MixedMatrix(std::vector<AttributeSchema> schema, std::size_t rows)
      : n_(rows),
        m_(schema.size()),
        schema_(std::move(schema)),
        values_(n_ * m_, 0.0),
        missing_(n_ * m_, 0) {}

  std::size_t rows() const { return n_; }
  std::size_t cols() const { return m_; }

  double value(RowIndex i, ColIndex j) const { return values_[j * n_ + i]; }
  bool is_missing(RowIndex i, ColIndex j) const { return missing_[j * n_ + i] != 0; }

  std::span<const double> column(ColIndex j) const {
    return {values_.data() + static_cast<std::size_t>(j) * n_, n_};
  }

  void set(RowIndex i, ColIndex j, double v) {
    values_[j * n_ + i] = v;
    missing_[j * n_ + i] = 0;
  }
  void set_missing(RowIndex i, ColIndex j) {
    values_[j * n_ + i] = 0.0;
    missing_[j * n_ + i] = 1;
  }

  const std::vector<AttributeSchema>& schema() const { return schema_; }
  const AttributeSchema& attribute(ColIndex j) const { return schema_[j]; }
  AttributeSchema& mutable_attribute(ColIndex j) { return schema_[j]; }

  std::vector<double> epsilons() const {
    std::vector<double> eps;
    eps.reserve(m_);
    for (const auto& a : schema_) eps.push_back(a.epsilon);
    return eps;
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_) {
      throw DataError("label count " + std::to_string(labels.size()) + " does not match row count " +
                      std::to_string(n_));
    }
    labels_ = std::move(labels);
  }

  const std::vector<std::string>& row_ids() const { return row_ids_; }
  void set_row_ids(std::vector<std::string> ids) {
    if (!ids.empty() && ids.size() != n_) throw DataError("row id count does not match row count");
    row_ids_ = std::move(ids);
  }

  std::size_t missing_count() const {
    return static_cast<std::size_t>(std::count(missing_.begin(), missing_.end(), 1));
  }

  // Builds an all-real matrix from row-major values; handy for tests and
  // small examples. NaN marks a missing cell.
  static MixedMatrix from_rows(const std::vector<std::vector<double>>& rows, double epsilon) {
    const std::size_t m = rows.empty() ? 0 : rows.front().size();
    std::vector<AttributeSchema> schema(m);
    for (std::size_t j = 0; j < m; ++j) {
      schema[j].name = std::to_string(j + 1);
      schema[j].epsilon = epsilon;
    }
    MixedMatrix out(std::move(schema), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m) throw DataError("ragged row " + std::to_string(i + 1));
      for (std::size_t j = 0; j < m; ++j) {
        const double v = rows[i][j];
        if (std::isnan(v)) {
          out.set_missing(static_cast<RowIndex>(i), static_cast<ColIndex>(j));
        } else {
          out.set(static_cast<RowIndex>(i), static_cast<ColIndex>(j), v);
        }
      }
    }
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<AttributeSchema> schema_;
  std::vector<double> values_;
  std::vector<std::uint8_t> missing_;
  std::vector<std::string> labels_;
  std::vector<std::string> row_ids_;
};

struct EnumParams {
  std::size_t min_rows = 1;  // mR
  std::size_t min_cols = 1;  // mC
  std::vector<double> epsilons;

  static EnumParams for_matrix(const MixedMatrix& matrix, std::size_t min_rows, std::size_t min_cols) {
    return {min_rows, min_cols, matrix.epsilons()};
  }

  void validate(const MixedMatrix& matrix) const {
    if (min_rows < 1 || min_rows > std::max<std::size_t>(matrix.rows(), 1)) {
      throw ConfigError("minimum rows must lie in [1, " + std::to_string(matrix.rows()) + "]");
    }
    if (min_cols < 1 || min_cols > std::max<std::size_t>(matrix.cols(), 1)) {
      throw ConfigError("minimum columns must lie in [1, " + std::to_string(matrix.cols()) + "]");
    }
    if (epsilons.size() != matrix.cols()) throw ConfigError("epsilon vector length differs from column count");
    for (std::size_t j = 0; j < epsilons.size(); ++j) {
      if (!(epsilons[j] >= 0.0)) throw ConfigError("negative epsilon for column " + std::to_string(j + 1));
      if (matrix.attribute(static_cast<ColIndex>(j)).kind == AttributeKind::Nominal && epsilons[j] != 0.0) {
        throw ConfigError("nominal column '" + matrix.attribute(static_cast<ColIndex>(j)).name +
                          "' requires epsilon = 0");
      }
    }
  }
};

// Raw string cells, one inner vector per data row, columns aligned with the
// schema list handed to encode_dataset().
struct RawTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

namespace detail {

inline std::optional<double> parse_number(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace detail

// Encodes string cells into a MixedMatrix. Nominal columns declared without
// categories are numbered in order of first appearance; the discovered
// categories are written back into the returned matrix's schema.
inline MixedMatrix encode_dataset(const RawTable& raw, std::vector<AttributeSchema> schemas,
                                  std::string_view missing_token = "") {
  for (const auto& s : schemas) s.validate();
  const std::size_t m = schemas.size();
  for (std::size_t j = 0; j < m; ++j) {
    if (schemas[j].kind == AttributeKind::Nominal && schemas[j].categories.empty()) {
      for (const auto& row : raw.rows) {
        if (j < row.size() && row[j] != missing_token && !schemas[j].code_of(row[j])) {
          schemas[j].categories.push_back(row[j]);
        }
      }
    }
  }

  MixedMatrix out(std::move(schemas), raw.rows.size());
  for (std::size_t i = 0; i < raw.rows.size(); ++i) {
    const auto& row = raw.rows[i];
    if (row.size() != m) {
      throw DataError("row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) + " cells, expected " +
                      std::to_string(m));
    }
    for (std::size_t j = 0; j < m; ++j) {
      const auto r = static_cast<RowIndex>(i);
      const auto c = static_cast<ColIndex>(j);
      const AttributeSchema& attr = out.attribute(c);
      const std::string& cell = row[j];
      if (cell == missing_token) {
        out.set_missing(r, c);
        continue;
      }
      if (is_categorical(attr.kind)) {
        const auto code = attr.code_of(cell);
        if (!code) {
          throw DataError("row " + std::to_string(i + 1) + ", column '" + attr.name + "': unknown category '" +
                          cell + "'");
        }
        out.set(r, c, static_cast<double>(*code));
        continue;
      }
      const auto number = detail::parse_number(cell);
      if (!number) {
        throw DataError("row " + std::to_string(i + 1) + ", column '" + attr.name + "': '" + cell +
                        "' is not a number");
      }
      if (attr.kind == AttributeKind::Integer && std::floor(*number) != *number) {
        throw DataError("row " + std::to_string(i + 1) + ", column '" + attr.name + "': '" + cell +
                        "' is not an integer");
      }
      out.set(r, c, *number);
    }
  }
  return out;
}

// Shortest round-trip decimal rendering ("1.54", "37.9", "120").
inline std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::to_string(v);
}

// Renders the domain of interest of column j for the observed range
// [lo, hi]: "Height[1.54,1.62]", "SocialClass{B,C}", "Smoker{N}",
// "age[42,46]", "legs{2}".
inline std::string decode_interval(const MixedMatrix& matrix, ColIndex j, double lo, double hi) {
  if (lo > hi) throw std::invalid_argument("decode_interval: lo > hi");
  const AttributeSchema& attr = matrix.attribute(j);
  switch (attr.kind) {
    case AttributeKind::Real:
      return attr.name + "[" + format_number(lo) + "," + format_number(hi) + "]";
    case AttributeKind::Integer:
      if (lo == hi) return attr.name + "{" + format_number(lo) + "}";
      return attr.name + "[" + format_number(lo) + "," + format_number(hi) + "]";
    case AttributeKind::Ordinal:
    case AttributeKind::Nominal: {
      std::string out = attr.name + "{";
      bool first = true;
      for (std::size_t c = 0; c < attr.categories.size(); ++c) {
        const double code = static_cast<double>(c + 1);
        if (code < lo || code > hi) continue;
        if (!first) out += ",";
        out += attr.categories[c];
        first = false;
      }
      return out + "}";
    }
  }
  return attr.name;
}

}  // namespace biclose
