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

#include <atomic>

#include "doctest.h"
#include "matkl/record.hpp"
#include "matkl/suites.hpp"

using namespace matkl;

TEST_CASE("JSON lines round trip") {
  const OutputRecord r = make_record("fan", 5, Kind::kl, "closed", IntPoly{1, 6, 2}, 5);
  const std::string line = to_json_line(r);
  CHECK(line ==
        R"({"family":"fan","n":5,"kind":"kl","method":"closed","coeffs":["1","6","2"],)"
        R"("flags":{"real_rooted":true,"all_negative":true,"degree":2,"rank":5}})");
  CHECK(parse_json_line(line) == r);
  CHECK(record_poly(parse_json_line(line)) == IntPoly{1, 6, 2});

  const OutputRecord zero = make_record("wheel", 3, Kind::characteristic, "brute", IntPoly{}, 3);
  CHECK(zero.flags.degree == -1);
  CHECK(parse_json_line(to_json_line(zero)) == zero);

  const OutputRecord complex = make_record("x", 1, Kind::z, "brute", IntPoly{1, 0, 1}, 2);
  CHECK_FALSE(complex.flags.real_rooted);
  CHECK_FALSE(complex.flags.all_negative);

  CHECK_THROWS_AS(parse_json_line("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json_line(R"({"family":"fan"})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json_line(R"({"family":"fan","n":5,"kind":"q","method":"closed",)"
                                  R"("coeffs":[],"flags":{"real_rooted":true,"all_negative":true,)"
                                  R"("degree":0,"rank":0}})"),
                  std::invalid_argument);
}

TEST_CASE("large coefficients survive serialization") {
  const IntPoly p{Integer("123456789012345678901234567890"), -7};
  const OutputRecord r = make_record("fan", 40, Kind::kl, "closed", p, 40);
  CHECK(record_poly(parse_json_line(to_json_line(r))) == p);
}

TEST_CASE("CSV rows") {
  CHECK(csv_header() == "n,degree,coeffs,real_rooted");
  CHECK(to_csv_row(make_record("fan", 5, Kind::kl, "closed", IntPoly{1, 6, 2}, 5)) ==
        "5,2,1 6 2,true");
  CHECK(to_csv_row(make_record("fan", 1, Kind::kl, "closed", IntPoly{1}, 1)) == "1,0,1,true");
}

TEST_CASE("kind names") {
  CHECK(parse_kind("z") == Kind::z);
  CHECK(to_string(Kind::characteristic) == "characteristic");
  CHECK_THROWS_AS(parse_kind("q"), std::invalid_argument);
}

TEST_CASE("compute_record") {
  CHECK(compute_record(Family::fan, 5, Kind::kl, Method::closed).coeffs ==
        std::vector<std::string>{"1", "6", "2"});
  CHECK(compute_record(Family::whirl, 3, Kind::z, Method::closed).coeffs ==
        std::vector<std::string>{"1", "9", "9", "1"});
  CHECK(compute_record(Family::wheel, 4, Kind::kl, Method::brute).coeffs ==
        std::vector<std::string>{"1", "5"});
  CHECK(compute_record(Family::wheel, 9, Kind::kl, Method::recurrence).coeffs ==
        compute_record(Family::wheel, 9, Kind::kl, Method::closed).coeffs);
  CHECK(record_poly(compute_record(Family::fan, 4, Kind::chromatic, Method::brute)) ==
        IntPoly{0, 1} * IntPoly{-1, 1} * pow(IntPoly{-2, 1}, 3));
  CHECK(record_poly(compute_record(Family::whirl, 4, Kind::characteristic, Method::brute)) ==
        pow(IntPoly{-2, 1}, 4) - IntPoly{1});
  const auto r = compute_record(Family::square_of_path, 6, Kind::z, Method::brute);
  CHECK(r.family == "square");
  CHECK(r.flags.rank == 6);

  CHECK_THROWS_AS(compute_record(Family::square_of_path, 3, Kind::z, Method::closed), UsageError);
  CHECK_THROWS_AS(compute_record(Family::square_of_path, 3, Kind::kl, Method::recurrence),
                  UsageError);
  CHECK_THROWS_AS(compute_record(Family::whirl, 3, Kind::chromatic, Method::brute), UsageError);
  CHECK_THROWS_AS(compute_record(Family::fan, 3, Kind::chromatic, Method::closed), UsageError);
  CHECK_THROWS_AS(compute_record(Family::wheel, 2, Kind::kl, Method::closed), UsageError);
  CHECK_THROWS_AS(compute_record(Family::fan, 9, Kind::kl, Method::brute), UsageError);
  CHECK_THROWS_AS(compute_record(Family::generic, 3, Kind::kl, Method::closed), UsageError);
  CHECK(supported_matrix().find("square") != std::string::npos);
}

TEST_CASE("run_checks keeps order and captures failures") {
  std::vector<Check> checks;
  std::atomic<int> calls{0};
  for (int i = 0; i < 12; ++i) {
    checks.push_back({"check " + std::to_string(i), [i, &calls](std::string& detail) {
                        ++calls;
                        if (i == 7) throw std::runtime_error("boom");
                        detail = std::to_string(i);
                        return i % 5 != 4;
                      }});
  }
  for (int jobs : {1, 3}) {
    calls = 0;
    const auto results = run_checks(checks, jobs);
    CHECK(calls == 12);
    REQUIRE(results.size() == 12);
    for (int i = 0; i < 12; ++i) {
      CHECK(results[i].name == "check " + std::to_string(i));
      CHECK(results[i].pass == (i % 5 != 4 && i != 7));
    }
    CHECK(results[7].detail.find("boom") != std::string::npos);
  }
  CHECK(execution_for_jobs(1) == Execution::parallel);
  CHECK(execution_for_jobs(4) == Execution::serial);
}

TEST_CASE("suite selection") {
  CHECK(parse_suite("oracle") == Suite::oracle);
  CHECK_THROWS_AS(parse_suite("everything"), std::invalid_argument);
  SuiteOptions small;
  small.max_n = 5;
  small.order = 6;
  const auto checks = suite_checks(Suite::all, small);
  CHECK(checks.size() > 20);
  for (const auto& r : run_checks(checks, 2)) {
    CHECK_MESSAGE(r.pass, r.name << ": " << r.detail);
  }
}
