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

#include "matkl/recurrence.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace matkl {
namespace {

using Key = std::pair<int, int>;  // (n power, t power)
using Terms = std::map<Key, Integer>;

Terms multiply(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      out[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    }
  }
  return out;
}

void accumulate(Terms& into, const Terms& x, int sign) {
  for (const auto& [k, c] : x) into[k] += sign > 0 ? c : Integer(-c);
}

Bivariate to_bivariate(const Terms& t) {
  Bivariate out;
  for (const auto& [k, c] : t) {
    if (sgn(c) != 0) out.push_back({c, k.first, k.second});
  }
  return out;
}

// Recursive-descent parser for sums of products of n, t, integers,
// parenthesized sums, powers and (optionally) one a[shift + n] per product.
class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  // Parses a full side: a map from shift to coefficient (shift -1 marks
  // products without an a[...] factor).
  std::map<int, Terms> side() {
    std::map<int, Terms> out;
    int sign = leading_sign();
    while (true) {
      auto [terms, shift] = product();
      accumulate(out[shift.value_or(-1)], terms, sign);
      skip();
      if (peek() == '+' || peek() == '-') {
        sign = get() == '+' ? 1 : -1;
        continue;
      }
      break;
    }
    return out;
  }

  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char get() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    return s_[pos_++];
  }
  void expect(char c) {
    if (get() != c) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("recurrence text: " + what + " at offset " +
                                std::to_string(pos_));
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  int leading_sign() {
    if (peek() == '-') {
      get();
      return -1;
    }
    if (peek() == '+') get();
    return 1;
  }

  Terms sum() {
    Terms out;
    int sign = leading_sign();
    while (true) {
      auto [terms, shift] = product();
      if (shift) fail("a[...] inside parentheses");
      accumulate(out, terms, sign);
      if (peek() == '+' || peek() == '-') {
        sign = get() == '+' ? 1 : -1;
        continue;
      }
      return out;
    }
  }

  std::pair<Terms, std::optional<int>> product() {
    Terms acc{{{0, 0}, Integer(1)}};
    std::optional<int> shift;
    bool any = false;
    while (true) {
      char c = peek();
      if (c == '*') {
        get();
        continue;
      }
      if (c == 'a') {
        if (shift) fail("two a[...] factors in one product");
        shift = index();
      } else if (c == '(' || c == 'n' || c == 't' || std::isdigit(static_cast<unsigned char>(c))) {
        acc = multiply(acc, power());
      } else {
        break;
      }
      any = true;
    }
    if (!any) fail("empty product");
    return {acc, shift};
  }

  Terms power() {
    Terms base = primary();
    if (peek() == '^') {
      get();
      long e = integer();
      Terms r{{{0, 0}, Integer(1)}};
      for (long i = 0; i < e; ++i) r = multiply(r, base);
      return r;
    }
    return base;
  }

  Terms primary() {
    char c = get();
    if (c == '(') {
      Terms inner = sum();
      expect(')');
      return inner;
    }
    if (c == 'n') return {{{1, 0}, Integer(1)}};
    if (c == 't') return {{{0, 1}, Integer(1)}};
    --pos_;
    return {{{0, 0}, Integer(integer())}};
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  int index() {
    expect('a');
    expect('[');
    Terms inner = sum();
    expect(']');
    Integer shift = 0;
    bool has_n = false;
    for (const auto& [k, c] : inner) {
      if (sgn(c) == 0) continue;
      if (k == Key{1, 0} && c == 1) {
        has_n = true;
      } else if (k == Key{0, 0}) {
        shift = c;
      } else {
        fail("index must have the form k + n");
      }
    }
    if (!has_n || sgn(shift) < 0) fail("index must have the form k + n");
    return static_cast<int>(shift.get_si());
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::vector<RecurrenceTerm> to_terms(const std::map<int, Terms>& side, Parser& p) {
  std::vector<RecurrenceTerm> out;
  for (const auto& [shift, terms] : side) {
    if (shift < 0) p.fail("term without a[...]");
    Bivariate b = to_bivariate(terms);
    if (!b.empty()) out.push_back({shift, std::move(b)});
  }
  return out;
}

Recurrence parse_recurrence(Family family, int offset, const std::string& equation,
                            std::vector<IntPoly> seeds) {
  const auto split = equation.find("==");
  if (split == std::string::npos) throw std::invalid_argument("recurrence needs '=='");
  Parser lhs(equation.substr(0, split));
  Parser rhs(equation.substr(split + 2));
  Recurrence rec;
  rec.family = family;
  rec.offset = offset;
  rec.lhs = to_terms(lhs.side(), lhs);
  rec.rhs = to_terms(rhs.side(), rhs);
  if (!lhs.at_end() || !rhs.at_end()) throw std::invalid_argument("trailing recurrence text");
  rec.seeds = std::move(seeds);
  return rec;
}

const char* const kFanEquation = "n (-1+4 t) a[n]+(3+2 n) a[1+n]==(3+n) a[2+n]";

const char* const kWheelEquation =
    "(-60-12 n+1758 t+1372 n t+446 n^2 t+68 n^3 t+4 n^4 t-738 t^2-881 n t^2-426 n^2 t^2"
    "-85 n^3 t^2-6 n^4 t^2+84 t^3+166 n t^3+106 n^2 t^3+26 n^3 t^3+2 n^4 t^3) a[2+n]"
    "+(7+n) (6-150 t-85 n t-21 n^2 t-2 n^3 t+12 t^2+22 n t^2+12 n^2 t^2+2 n^3 t^2) a[3+n]"
    "==(3+n) t (-1+4 t) (6-258 t-133 n t-27 n^2 t-2 n^3 t+48 t^2+52 n t^2+18 n^2 t^2"
    "+2 n^3 t^2) a[n]+(-18-6 n+906 t+693 n t+214 n^2 t+33 n^3 t+2 n^4 t-4956 t^2"
    "-4198 n t^2-1408 n^2 t^2-224 n^3 t^2-14 n^4 t^2+264 t^3+952 n t^3+618 n^2 t^3"
    "+146 n^3 t^3+12 n^4 t^3) a[1+n]";

const char* const kWhirlEquation =
    "(34 + 24 n + 4 n^2 - 46 t - 35 n t - 6 n^2 t + 16 t^2 + 12 n t^2 + 2 n^2 t^2) a[2 + n]"
    " + (4 + n) (-5 - 2 n + 4 t + 2 n t) a[3 + n]"
    " == (2 + n) t (-1 + 4 t) (-7 - 2 n + 6 t + 2 n t) a[n]"
    " + (14 + 11 n + 2 n^2 - 102 t - 78 n t - 14 n^2 t + 74 t^2 + 62 n t^2 + 12 n^2 t^2) a[1 + n]";

}  // namespace

Bivariate parse_bivariate(const std::string& text) {
  Parser p(text);
  auto side = p.side();
  if (!p.at_end()) p.fail("trailing text");
  if (side.size() > 1 || (side.size() == 1 && side.begin()->first != -1)) {
    p.fail("unexpected a[...]");
  }
  return side.empty() ? Bivariate{} : to_bivariate(side.begin()->second);
}

IntPoly evaluate_at_n(const Bivariate& p, long n) {
  std::vector<Integer> cs;
  for (const auto& m : p) {
    Integer v = m.coeff;
    for (int i = 0; i < m.n_power; ++i) v *= n;
    if (static_cast<std::size_t>(m.t_power) >= cs.size()) cs.resize(m.t_power + 1);
    cs[m.t_power] += v;
  }
  return IntPoly(std::move(cs));
}

Integer bivariate_checksum(const Bivariate& p) {
  Integer sum = 0;
  for (const auto& m : p) sum += abs(m.coeff) * (1 + m.n_power + m.t_power);
  return sum;
}

const Recurrence& family_recurrence(Family family) {
  static const Recurrence fan =
      parse_recurrence(Family::fan, 0, kFanEquation, {IntPoly{1}, IntPoly{1}});
  static const Recurrence wheel = parse_recurrence(Family::wheel, 2, kWheelEquation,
                                                   {IntPoly{1}, IntPoly{1, 1}, IntPoly{1, 5}});
  static const Recurrence whirl = parse_recurrence(Family::whirl, 1, kWhirlEquation,
                                                   {IntPoly{1}, IntPoly{1}, IntPoly{1, 3}});
  switch (family) {
    case Family::fan:
      return fan;
    case Family::wheel:
      return wheel;
    case Family::whirl:
      return whirl;
    default:
      throw std::invalid_argument("no recurrence for this family");
  }
}

std::vector<IntPoly> run_recurrence(const Recurrence& rec, int count) {
  if (count < 0) throw std::invalid_argument("negative term count");
  std::vector<IntPoly> a(rec.seeds.begin(), rec.seeds.end());
  // Move everything to the left: sum_i sign_i c_i(m) a[m + shift_i] = 0.
  std::vector<std::pair<int, RecurrenceTerm>> all;
  for (const auto& t : rec.lhs) all.push_back({1, t});
  for (const auto& t : rec.rhs) all.push_back({-1, t});
  int top = 0;
  for (const auto& [sign, t] : all) top = std::max(top, t.shift);
  if (top != rec.order()) throw std::invalid_argument("recurrence order does not match seeds");
  for (long m = 0; static_cast<long>(a.size()) < count; ++m) {
    IntPoly rest;
    IntPoly lead;
    for (const auto& [sign, t] : all) {
      IntPoly c = evaluate_at_n(t.coefficient, m);
      if (sign < 0) c = -c;
      if (t.shift == top) {
        lead += c;
      } else {
        rest += c * a[static_cast<std::size_t>(m + t.shift)];
      }
    }
    if (lead.is_zero()) {
      throw Error("leading recurrence coefficient vanishes at n = " + std::to_string(m));
    }
    try {
      a.push_back(divide_exact(-rest, lead));
    } catch (const Error&) {
      throw Error("recurrence step " + std::to_string(m) + " does not divide exactly");
    }
  }
  a.resize(static_cast<std::size_t>(count));
  return a;
}

}  // namespace matkl
