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


#ifndef CTI_PIPELINE_CSV_H_
#define CTI_PIPELINE_CSV_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "cti/pipeline/dataset.h"

namespace cti::pipeline {

struct CsvSchema {
  std::string label_column = "Label";
  // Label values mapped to class 0 (case-insensitive). Integer labels are
  // taken as-is; any other string is class 1.
  std::vector<std::string> negative_labels = {"BENIGN"};
  // Identifier-like columns removed before conversion.
  std::vector<std::string> drop_columns;
  // Columns holding non-numeric text are dropped, or rejected when false.
  bool drop_non_numeric = true;
  // Required feature count after cleaning; 0 disables the check.
  size_t expected_features = 0;
};

// Header row, comma separator, "." decimals. Cleaning: numeric
// conversion; empty, NaN, null and infinite cells become missing;
// duplicate rows removed; missing cells replaced by the column mean;
// duplicates removed again (imputation can create them), which makes the
// loader a fixed point on its own output. Standardization is left to the
// federated step.
Dataset LoadDdosCsv(const std::string& path, const CsvSchema& schema);
Dataset ParseDdosCsv(std::istream& in, const CsvSchema& schema);

// Features then the label column; values printed round-trip exact.
void WriteCsv(const Dataset& d, std::ostream& out, const std::string& label_column = "Label");
void SaveCsv(const Dataset& d, const std::string& path, const std::string& label_column = "Label");

}  // namespace cti::pipeline

#endif  // CTI_PIPELINE_CSV_H_
