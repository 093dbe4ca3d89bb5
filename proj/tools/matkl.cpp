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

// matkl: compute Kazhdan-Lusztig, Z, chromatic and characteristic polynomials
// for fans, squares of paths, wheels and whirls, and run verification suites.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matkl/kl.hpp"
#include "matkl/parallel.hpp"
#include "matkl/record.hpp"
#include "matkl/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::optional<int> max_n;
  std::optional<int> jobs;
};

Config load_config(const std::string& path) {
  Config c;
  if (path.empty()) return c;
  std::ifstream in(path);
  if (!in) throw matkl::UsageError("cannot read config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw matkl::UsageError("config file " + path + " is not valid JSON: " + e.what());
  }
  if (j.contains("max_n")) c.max_n = j["max_n"].get<int>();
  if (j.contains("jobs")) c.jobs = j["jobs"].get<int>();
  return c;
}

int resolve_jobs(std::optional<int> flag, const Config& config) {
  int jobs = 0;
  if (flag) {
    jobs = *flag;
  } else if (config.jobs) {
    jobs = *config.jobs;
  } else if (const char* env = std::getenv("MATKL_JOBS"); env != nullptr && *env != '\0') {
    try {
      jobs = std::stoi(env);
    } catch (const std::exception&) {
      throw matkl::UsageError(std::string("MATKL_JOBS is not an integer: ") + env);
    }
  } else {
    jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  if (jobs < 1) throw matkl::UsageError("job count must be positive");
  return jobs;
}

matkl::Method default_method(matkl::Kind kind) {
  return kind == matkl::Kind::kl || kind == matkl::Kind::z ? matkl::Method::closed
                                                           : matkl::Method::brute;
}

// Computes records for every n in [lo, hi] on `jobs` threads, in n order.
std::vector<matkl::OutputRecord> compute_range(matkl::Family family, int lo, int hi,
                                               matkl::Kind kind, matkl::Method method, int jobs) {
  const int count = std::max(0, hi - lo + 1);
  std::vector<matkl::OutputRecord> records(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errors(records.size());
  std::atomic<int> next{0};
  const matkl::Execution exec = matkl::execution_for_jobs(jobs);
  auto worker = [&]() {
    for (int i = next++; i < count; i = next++) {
      try {
        records[i] = matkl::compute_record(family, lo + i, kind, method, exec);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const int threads = std::min(jobs, std::max(count, 1));
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

void write_records(std::ostream& out, const std::vector<matkl::OutputRecord>& records,
                   const std::string& format) {
  if (format == "csv") {
    out << matkl::csv_header() << '\n';
    for (const auto& r : records) out << matkl::to_csv_row(r) << '\n';
  } else {
    for (const auto& r : records) out << matkl::to_json_line(r) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig and Z-polynomials of fan, square-of-path, wheel and whirl matroids"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<int> jobs_flag;
  app.add_option("--config", config_path, "JSON file with default max_n and jobs")
      ->check(CLI::ExistingFile);
  app.add_option("--jobs", jobs_flag, "worker threads (default: MATKL_JOBS or all cores)")
      ->check(CLI::PositiveNumber);

  const std::vector<std::string> families{"fan", "square", "wheel", "whirl"};
  const std::vector<std::string> kinds{"kl", "z", "chromatic", "characteristic"};
  const std::vector<std::string> methods{"brute", "closed", "recurrence"};
  const std::vector<std::string> formats{"json", "csv"};

  auto* compute = app.add_subcommand("compute", "compute one polynomial");
  std::string family_s, kind_s = "kl", method_s, format_s = "json";
  int n = 0;
  compute->add_option("--family", family_s)->required()->check(CLI::IsMember(families));
  compute->add_option("--n", n, "family index")->required();
  compute->add_option("--kind", kind_s)->check(CLI::IsMember(kinds));
  compute->add_option("--method", method_s, "default: closed for kl/z, brute otherwise")
      ->check(CLI::IsMember(methods));
  compute->add_option("--format", format_s)->check(CLI::IsMember(formats));

  auto* table = app.add_subcommand("table", "tabulate a family over a range of n");
  std::string t_family, t_kind = "kl", t_method, t_format = "csv", t_output;
  std::optional<int> t_max_n, t_min_n;
  table->add_option("--family", t_family)->required()->check(CLI::IsMember(families));
  table->add_option("--kind", t_kind)->check(CLI::IsMember(kinds));
  table->add_option("--method", t_method)->check(CLI::IsMember(methods));
  table->add_option("--format", t_format)->check(CLI::IsMember(formats));
  table->add_option("--max-n", t_max_n, "last n (default 10 or config max_n)");
  table->add_option("--min-n", t_min_n, "first n (default: smallest valid n)");
  table->add_option("--output", t_output, "write to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite_s = "all";
  std::optional<int> v_max_n, v_order;
  verify->add_option("--suite", suite_s)
      ->check(CLI::IsMember({"oracle", "gf", "recurrence", "roots", "identities", "all"}));
  verify->add_option("--max-n", v_max_n, "override the suite's upper bound on n");
  verify->add_option("--order", v_order, "series truncation order for the gf suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const Config config = load_config(config_path);
    const int jobs = resolve_jobs(jobs_flag, config);
    matkl::set_worker_count(jobs);

    if (compute->parsed()) {
      const matkl::Kind kind = matkl::parse_kind(kind_s);
      const matkl::Method method =
          method_s.empty() ? default_method(kind) : matkl::parse_method(method_s);
      const auto record =
          matkl::compute_record(matkl::parse_family(family_s), n, kind, method,
                                matkl::execution_for_jobs(1));
      write_records(std::cout, {record}, format_s);
      return kExitPass;
    }

    if (table->parsed()) {
      const matkl::Family family = matkl::parse_family(t_family);
      const matkl::Kind kind = matkl::parse_kind(t_kind);
      const matkl::Method method =
          t_method.empty() ? default_method(kind) : matkl::parse_method(t_method);
      const int lo = t_min_n.value_or(matkl::family_min_n(family));
      const int hi = t_max_n.value_or(config.max_n.value_or(10));
      const auto records = compute_range(family, lo, hi, kind, method, jobs);
      if (t_output.empty()) {
        write_records(std::cout, records, t_format);
      } else {
        std::ofstream out(t_output);
        if (!out) throw matkl::UsageError("cannot write " + t_output);
        write_records(out, records, t_format);
        if (!out) throw matkl::UsageError("failed while writing " + t_output);
      }
      return kExitPass;
    }

    matkl::SuiteOptions options;
    options.max_n = v_max_n ? v_max_n : config.max_n;
    options.order = v_order;
    options.jobs = jobs;
    const auto checks = matkl::suite_checks(matkl::parse_suite(suite_s), options);
    const auto results = matkl::run_checks(checks, jobs);
    int failed = 0;
    double total = 0;
    for (const auto& r : results) {
      total += r.seconds;
      if (!r.pass) ++failed;
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "  (" << std::fixed
                << std::setprecision(3) << r.seconds << " s)";
      if (!r.detail.empty()) std::cout << "  " << r.detail;
      std::cout << '\n';
    }
    std::cout << results.size() << " checks, " << failed << " failed, " << std::fixed
              << std::setprecision(2) << total << " s of work\n";
    return failed == 0 ? kExitPass : kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n' << matkl::supported_matrix();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
