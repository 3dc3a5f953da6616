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

// Minimal RFC 4180 reader: quoted fields, doubled quotes, CRLF endings.
// Fields are returned verbatim apart from quote removal.

#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "biclose/datamodel.hpp"
#include "biclose/error.hpp"

namespace biclose {

inline std::vector<std::vector<std::string>> parse_delimited(std::istream& in, char delimiter) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  bool any = false;
  char c = 0;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    // Skip blank lines.
    if (!(record.size() == 1 && record.front().empty())) records.push_back(std::move(record));
    record.clear();
  };

  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
    } else if (c == delimiter) {
      end_field();
    } else if (c == '\n') {
      end_record();
    } else if (c == '\r') {
      if (in.peek() == '\n') in.get(c);
      end_record();
    } else {
      field += c;
      field_started = true;
    }
  }
  if (quoted) throw DataError("unterminated quoted field");
  if (any && (!field.empty() || !record.empty())) end_record();
  return records;
}

inline char guess_delimiter(const std::filesystem::path& path, const std::string& first_line) {
  if (path.extension() == ".tsv" || path.extension() == ".tab") return '\t';
  if (first_line.find('\t') != std::string::npos && first_line.find(',') == std::string::npos) return '\t';
  return ',';
}

// Reads a delimited file whose first record is the header. A delimiter of
// '\0' selects one from the extension or the header line.
inline RawTable read_table(const std::filesystem::path& path, char delimiter = '\0') {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (delimiter == '\0') delimiter = guess_delimiter(path, text.substr(0, text.find('\n')));
  std::istringstream stream(text);
  auto records = parse_delimited(stream, delimiter);
  if (records.empty()) throw DataError("'" + path.string() + "' is empty");
  RawTable table;
  table.header = std::move(records.front());
  if (!table.header.empty() && table.header.front().rfind("\xEF\xBB\xBF", 0) == 0) table.header.front().erase(0, 3);
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != table.header.size()) {
      throw DataError("'" + path.string() + "' record " + std::to_string(r + 1) + " has " +
                      std::to_string(records[r].size()) + " fields, header has " +
                      std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(records[r]));
  }
  return table;
}

}  // namespace biclose
