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

// Computation front end and verification checks shared by the command-line
// tool and the acceptance runner.

#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "matkl/kl.hpp"
#include "matkl/record.hpp"

namespace matkl {

// Raised for unsupported family/kind/method combinations and bad ranges.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Largest n accepted by the brute-force method.
int brute_max_n(Family family);

// Human-readable table of supported (family, kind, method) combinations.
std::string supported_matrix();

// Throws UsageError when the combination or n is unsupported.
OutputRecord compute_record(Family family, int n, Kind kind, Method method,
                            Execution exec = Execution::parallel);

struct Check {
  std::string name;
  // Returns true on success; may write a detail message.
  std::function<bool(std::string& detail)> run;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

// Runs checks on `jobs` worker threads; results keep the input order.
// Exceptions count as failures with the message as detail.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, int jobs);

// Execution mode for kernels inside a check run with `jobs` workers.
Execution execution_for_jobs(int jobs);

// Check groups. Bounds are inclusive upper limits on n.
std::vector<Check> kl_oracle_checks(int fan_max, int wheel_max, Execution exec);
std::vector<Check> z_oracle_checks(int fan_max, int wheel_max, Execution exec);
std::vector<Check> whirl_flat_checks(int max_n, Execution exec);
std::vector<Check> recurrence_checks(int max_n);
std::vector<Check> gf_checks(int order, int wheel_kl_order);
std::vector<Check> root_checks(int max_n);
std::vector<Check> interlacing_checks(int max_n);
std::vector<Check> identity_checks(int narayana_max, int hadamard_max, int quadratic_max,
                                   int lucas_max, int n_sequence_max);
std::vector<Check> spot_checks(int motzkin_max);

enum class Suite { oracle, gf, recurrence, roots, identities, all };
Suite parse_suite(std::string_view s);

struct SuiteOptions {
  std::optional<int> max_n;
  std::optional<int> order;
  int jobs = 1;
};

std::vector<Check> suite_checks(Suite suite, const SuiteOptions& options);

}  // namespace matkl
