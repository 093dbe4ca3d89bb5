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

#include "matkl/record.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "matkl/realroot.hpp"

namespace matkl {

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::kl:
      return "kl";
    case Kind::z:
      return "z";
    case Kind::chromatic:
      return "chromatic";
    case Kind::characteristic:
      return "characteristic";
  }
  return "kl";
}

Kind parse_kind(std::string_view s) {
  if (s == "kl") return Kind::kl;
  if (s == "z") return Kind::z;
  if (s == "chromatic") return Kind::chromatic;
  if (s == "characteristic") return Kind::characteristic;
  throw std::invalid_argument("unknown kind '" + std::string(s) + "'");
}

OutputRecord make_record(std::string family, int n, Kind kind, std::string method,
                         const IntPoly& p, int rank) {
  OutputRecord r;
  r.family = std::move(family);
  r.n = n;
  r.kind = kind;
  r.method = std::move(method);
  for (const auto& c : p.coeffs()) r.coeffs.push_back(c.get_str());
  r.flags.rank = rank;
  if (!p.is_zero()) {
    r.flags.degree = static_cast<int>(p.degree().value());
    r.flags.real_rooted = real_rooted(p);
    r.flags.all_negative = all_zeros_negative(p).holds;
  }
  return r;
}

IntPoly record_poly(const OutputRecord& r) {
  std::vector<Integer> cs;
  for (const auto& s : r.coeffs) {
    Integer v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad coefficient '" + s + "'");
    cs.push_back(v);
  }
  return IntPoly(std::move(cs));
}

std::string to_json_line(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["family"] = r.family;
  j["n"] = r.n;
  j["kind"] = std::string(to_string(r.kind));
  j["method"] = r.method;
  j["coeffs"] = r.coeffs;
  j["flags"] = {{"real_rooted", r.flags.real_rooted},
                {"all_negative", r.flags.all_negative},
                {"degree", r.flags.degree},
                {"rank", r.flags.rank}};
  return j.dump();
}

OutputRecord parse_json_line(std::string_view line) {
  try {
    const auto j = nlohmann::json::parse(line);
    OutputRecord r;
    r.family = j.at("family").get<std::string>();
    r.n = j.at("n").get<int>();
    r.kind = parse_kind(j.at("kind").get<std::string>());
    r.method = j.at("method").get<std::string>();
    r.coeffs = j.at("coeffs").get<std::vector<std::string>>();
    const auto& f = j.at("flags");
    r.flags.real_rooted = f.at("real_rooted").get<bool>();
    r.flags.all_negative = f.at("all_negative").get<bool>();
    r.flags.degree = f.at("degree").get<int>();
    r.flags.rank = f.at("rank").get<int>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
}

std::string csv_header() { return "n,degree,coeffs,real_rooted"; }

std::string to_csv_row(const OutputRecord& r) {
  std::ostringstream out;
  out << r.n << ',' << r.flags.degree << ',';
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) out << (i ? " " : "") << r.coeffs[i];
  out << ',' << (r.flags.real_rooted ? "true" : "false");
  return out.str();
}

}  // namespace matkl
