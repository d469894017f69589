// Copyright 2026 The CTI-MHE Authors.
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


#include "cti/pipeline/csv.h"

#include <algorithm>
#include <boost/tokenizer.hpp>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <optional>
#include <unordered_set>

#include "cti/common/error.h"

namespace cti::pipeline {
namespace {

using Tokenizer = boost::tokenizer<boost::escaped_list_separator<char>>;

std::string Trim(const std::string& s) {
  const size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string Lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<std::string> SplitLine(const std::string& line, size_t line_no) {
  try {
    Tokenizer tok(line);
    std::vector<std::string> out;
    for (const auto& f : tok) out.push_back(Trim(f));
    return out;
  } catch (const boost::escaped_list_error& e) {
    throw Error(ErrorCode::kParse, "CSV line " + std::to_string(line_no) + ": " + e.what());
  }
}

bool IsNullToken(const std::string& s) {
  if (s.empty()) return true;
  const std::string l = Lower(s);
  return l == "nan" || l == "null" || l == "na" || l == "none" || l == "inf" || l == "-inf" ||
         l == "+inf" || l == "infinity" || l == "-infinity" || l == "+infinity";
}

std::optional<double> ParseNumber(const std::string& s) {
  double v = 0;
  const char* b = s.data();
  if (!s.empty() && s[0] == '+') ++b;
  auto [p, ec] = std::from_chars(b, s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

// Row identity including missing markers.
std::string RowKey(const std::vector<std::optional<double>>& cells, int label) {
  std::string key(reinterpret_cast<const char*>(&label), sizeof(label));
  for (const auto& c : cells) {
    key.push_back(c ? 'v' : 'n');
    if (c) {
      double v = *c == 0.0 ? 0.0 : *c;  // -0 and +0 are one value
      key.append(reinterpret_cast<const char*>(&v), sizeof(v));
    }
  }
  return key;
}

}  // namespace

Dataset ParseDdosCsv(std::istream& in, const CsvSchema& schema) {
  std::string line;
  size_t line_no = 1;
  if (!std::getline(in, line)) throw Error(ErrorCode::kParse, "CSV has no header row");
  if (line.size() >= 3 && std::memcmp(line.data(), "\xEF\xBB\xBF", 3) == 0) line.erase(0, 3);
  const std::vector<std::string> header = SplitLine(line, line_no);
  const size_t width = header.size();

  size_t label_idx = width;
  for (size_t j = 0; j < width; ++j) {
    if (header[j] == schema.label_column) label_idx = j;
  }
  if (label_idx == width) {
    throw Error(ErrorCode::kInvalidArgument, "label column '" + schema.label_column + "' not found");
  }
  std::vector<bool> keep(width, true);
  keep[label_idx] = false;
  for (const auto& d : schema.drop_columns) {
    for (size_t j = 0; j < width; ++j) {
      if (header[j] == d) keep[j] = false;
    }
  }
  std::vector<std::string> negatives;
  for (const auto& n : schema.negative_labels) negatives.push_back(Lower(n));

  std::vector<std::vector<std::string>> raw;
  std::vector<int> labels;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::vector<std::string> f = SplitLine(line, line_no);
    if (f.size() != width) {
      throw Error(ErrorCode::kParse, "CSV line " + std::to_string(line_no) + " has " +
                                         std::to_string(f.size()) + " fields, expected " +
                                         std::to_string(width));
    }
    const std::string lab = Lower(f[label_idx]);
    int label = 1;
    if (std::find(negatives.begin(), negatives.end(), lab) != negatives.end()) {
      label = 0;
    } else if (auto v = ParseNumber(f[label_idx]); v && std::floor(*v) == *v) {
      label = static_cast<int>(*v);
    }
    labels.push_back(label);
    raw.push_back(std::move(f));
  }

  // Columns with text that is neither a number nor a null token.
  for (size_t j = 0; j < width; ++j) {
    if (!keep[j]) continue;
    for (const auto& r : raw) {
      if (!IsNullToken(r[j]) && !ParseNumber(r[j])) {
        if (!schema.drop_non_numeric) {
          throw Error(ErrorCode::kInvalidArgument, "column '" + header[j] + "' is not numeric");
        }
        keep[j] = false;
        break;
      }
    }
  }
  std::vector<size_t> cols;
  Dataset d;
  for (size_t j = 0; j < width; ++j) {
    if (keep[j]) {
      cols.push_back(j);
      d.feature_names.push_back(header[j]);
    }
  }
  if (schema.expected_features != 0 && cols.size() != schema.expected_features) {
    throw Error(ErrorCode::kInvalidArgument,
                "schema mismatch: " + std::to_string(cols.size()) + " numeric columns, expected " +
                    std::to_string(schema.expected_features));
  }

  // Convert and drop duplicates (first occurrence wins).
  std::vector<std::vector<std::optional<double>>> cells;
  std::vector<int> kept_labels;
  std::unordered_set<std::string> seen;
  for (size_t i = 0; i < raw.size(); ++i) {
    std::vector<std::optional<double>> c;
    c.reserve(cols.size());
    for (size_t j : cols) {
      std::optional<double> v;
      if (!IsNullToken(raw[i][j])) v = ParseNumber(raw[i][j]);
      if (v && !std::isfinite(*v)) v.reset();
      c.push_back(v);
    }
    if (seen.insert(RowKey(c, labels[i])).second) {
      cells.push_back(std::move(c));
      kept_labels.push_back(labels[i]);
    }
  }

  // Mean imputation over the deduplicated rows.
  std::vector<double> sum(cols.size(), 0.0);
  std::vector<size_t> cnt(cols.size(), 0);
  for (const auto& c : cells) {
    for (size_t j = 0; j < cols.size(); ++j) {
      if (c[j]) {
        sum[j] += *c[j];
        ++cnt[j];
      }
    }
  }
  std::vector<double> row(cols.size());
  seen.clear();
  for (size_t i = 0; i < cells.size(); ++i) {
    std::vector<std::optional<double>> filled(cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      row[j] = cells[i][j] ? *cells[i][j] : (cnt[j] ? sum[j] / static_cast<double>(cnt[j]) : 0.0);
      filled[j] = row[j];
    }
    if (seen.insert(RowKey(filled, kept_labels[i])).second) d.AddRow(row, kept_labels[i]);
  }
  return d;
}

Dataset LoadDdosCsv(const std::string& path, const CsvSchema& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return ParseDdosCsv(in, schema);
}

void WriteCsv(const Dataset& d, std::ostream& out, const std::string& label_column) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\\") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  for (const auto& n : d.feature_names) out << quote(n) << ',';
  out << quote(label_column) << '\n';
  char buf[64];
  for (size_t i = 0; i < d.rows(); ++i) {
    for (double v : d.row(i)) {
      auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
      out.write(buf, p - buf);
      out << ',';
    }
    out << d.y[i] << '\n';
  }
}

void SaveCsv(const Dataset& d, const std::string& path, const std::string& label_column) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  WriteCsv(d, out, label_column);
}

}  // namespace cti::pipeline
