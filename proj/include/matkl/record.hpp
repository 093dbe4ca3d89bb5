// Copyright 2026 The Authors.
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

// One computed polynomial with its provenance, serializable as a JSON line
// or a CSV row. Coefficients are ascending decimal strings.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "matkl/poly.hpp"

namespace matkl {

enum class Kind { kl, z, chromatic, characteristic };

std::string_view to_string(Kind k);
Kind parse_kind(std::string_view s);

struct RecordFlags {
  bool real_rooted = false;
  bool all_negative = false;
  int degree = -1;  // -1 for the zero polynomial
  int rank = 0;
  friend bool operator==(const RecordFlags&, const RecordFlags&) = default;
};

struct OutputRecord {
  std::string family;
  int n = 0;
  Kind kind = Kind::kl;
  std::string method;
  std::vector<std::string> coeffs;
  RecordFlags flags;
  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

// Fills coeffs and the root flags from p.
OutputRecord make_record(std::string family, int n, Kind kind, std::string method,
                         const IntPoly& p, int rank);

IntPoly record_poly(const OutputRecord& r);

std::string to_json_line(const OutputRecord& r);
// std::invalid_argument on malformed input.
OutputRecord parse_json_line(std::string_view line);

std::string csv_header();
std::string to_csv_row(const OutputRecord& r);

}  // namespace matkl
