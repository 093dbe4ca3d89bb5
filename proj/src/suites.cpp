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

#include "matkl/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

#include "matkl/graph.hpp"
#include "matkl/matroid.hpp"
#include "matkl/realroot.hpp"
#include "matkl/recurrence.hpp"
#include "matkl/series.hpp"

namespace matkl {
namespace {

constexpr int kFormulaMaxN = 500;

std::string family_name(Family f) { return std::string(to_string(f)); }

std::string describe(const IntPoly& p) { return p.to_string(); }

GraphFamily graph_family(Family f) {
  switch (f) {
    case Family::fan:
      return GraphFamily::fan;
    case Family::square_of_path:
      return GraphFamily::square_of_path;
    case Family::wheel:
      return GraphFamily::wheel;
    default:
      throw UsageError("family has no underlying graph");
  }
}

bool satisfies_kl_shape(const IntPoly& p, int rank) {
  if (p.coeff(0) != 1) return false;
  if (rank == 0) return p == IntPoly{1};
  return 2 * p.degree().value() < static_cast<std::size_t>(rank);
}

bool palindromic(const IntPoly& p) {
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

// Motzkin numbers from their three-term recursion.
std::vector<Integer> motzkin_numbers(int count) {
  std::vector<Integer> m{1, 1};
  for (int n = 2; n < count; ++n) {
    m.push_back(((2 * n + 1) * m[n - 1] + (3 * n - 3) * m[n - 2]) / (n + 2));
  }
  m.resize(static_cast<std::size_t>(std::max(count, 0)));
  return m;
}

Integer catalan(int n) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  return b / (n + 1);
}

// Sweeps n over [lo, hi]; reports the first failing n.
Check sweep(std::string name, int lo, int hi, std::function<bool(int, std::string&)> body) {
  return {std::move(name), [lo, hi, body](std::string& detail) {
            for (int n = lo; n <= hi; ++n) {
              std::string why;
              if (!body(n, why)) {
                detail = "fails at n=" + std::to_string(n) + (why.empty() ? "" : ": " + why);
                return false;
              }
            }
            detail = "n=" + std::to_string(lo) + ".." + std::to_string(hi);
            return true;
          }};
}

}  // namespace

int brute_max_n(Family family) {
  switch (family) {
    case Family::fan:
    case Family::square_of_path:
      return 8;
    case Family::wheel:
    case Family::whirl:
      return 7;
    case Family::generic:
      break;
  }
  throw UsageError("generic family");
}

std::string supported_matrix() {
  return "supported combinations (kind, method: families and n range)\n"
         "  kl  brute:              fan, square n=1..8; wheel, whirl n=3..7\n"
         "  kl  closed:             fan, square n=1..500; wheel, whirl n=3..500\n"
         "  kl  recurrence:         fan n=1..500; wheel, whirl n=3..500\n"
         "  z   brute:              fan, square n=1..8; wheel, whirl n=3..7\n"
         "  z   closed:             fan n=1..500; wheel, whirl n=3..500\n"
         "  chromatic brute:        fan, square n=1..8; wheel n=3..7\n"
         "  characteristic brute:   fan, square n=1..8; wheel, whirl n=3..7\n";
}

OutputRecord compute_record(Family family, int n, Kind kind, Method method, Execution exec) {
  if (family == Family::generic) throw UsageError("a family is required");
  const int lo = family_min_n(family);
  const std::string label = family_name(family) + " n=" + std::to_string(n);
  if (n < lo) throw UsageError(label + ": n must be at least " + std::to_string(lo));
  const int hi = method == Method::brute ? brute_max_n(family) : kFormulaMaxN;
  if (n > hi) {
    throw UsageError(label + ": method " + std::string(to_string(method)) + " supports n <= " +
                     std::to_string(hi));
  }
  auto unsupported = [&]() {
    return UsageError("unsupported combination: kind " + std::string(to_string(kind)) +
                      ", method " + std::string(to_string(method)) + ", family " +
                      family_name(family));
  };

  IntPoly p;
  switch (kind) {
    case Kind::kl:
      if (method == Method::brute) {
        p = kl_poly(family_matroid(family, n), exec);
      } else if (method == Method::closed) {
        p = kl_closed(family, n);
      } else {
        if (family == Family::square_of_path) throw unsupported();
        p = kl_recurrence(family, n);
      }
      break;
    case Kind::z:
      if (method == Method::brute) {
        p = z_poly(family_matroid(family, n), exec);
      } else if (method == Method::closed && family != Family::square_of_path) {
        p = z_closed(family, n);
      } else {
        throw unsupported();
      }
      break;
    case Kind::chromatic:
      if (method != Method::brute || family == Family::whirl) throw unsupported();
      p = chromatic_polynomial(make_family(graph_family(family), n));
      break;
    case Kind::characteristic:
      if (method != Method::brute) throw unsupported();
      p = characteristic_polynomial(family_matroid(family, n), exec);
      break;
  }
  return make_record(family_name(family), n, kind, std::string(to_string(method)), p, n);
}

Execution execution_for_jobs(int jobs) {
  return jobs > 1 ? Execution::serial : Execution::parallel;
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, int jobs) {
  std::vector<CheckResult> results(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= checks.size()) return;
      CheckResult& r = results[i];
      r.name = checks[i].name;
      const auto start = std::chrono::steady_clock::now();
      try {
        r.pass = checks[i].run(r.detail);
      } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), checks.size());
  if (threads <= 1) {
    worker();
    return results;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

std::vector<Check> kl_oracle_checks(int fan_max, int wheel_max, Execution exec) {
  std::vector<Check> out;
  auto add = [&](Family f, int n) {
    out.push_back({"kl brute == closed: " + family_name(f) + " n=" + std::to_string(n),
                   [f, n, exec](std::string& detail) {
                     const RankOracleMatroid m = family_matroid(f, n);
                     const IntPoly brute = kl_poly(m, exec);
                     const IntPoly closed = kl_closed(f, n);
                     detail = describe(brute);
                     if (brute != closed) {
                       detail = "brute " + describe(brute) + " vs closed " + describe(closed);
                       return false;
                     }
                     if (!satisfies_kl_shape(brute, m.rank())) {
                       detail = "degree bound or constant term violated";
                       return false;
                     }
                     if (!defining_identity_holds(m, brute, exec)) {
                       detail = "defining identity fails on recomputation";
                       return false;
                     }
                     return true;
                   }});
  };
  for (int n = 1; n <= fan_max; ++n) add(Family::fan, n);
  for (int n = 1; n <= fan_max; ++n) add(Family::square_of_path, n);
  for (int n = 3; n <= wheel_max; ++n) add(Family::wheel, n);
  for (int n = 3; n <= wheel_max; ++n) add(Family::whirl, n);
  return out;
}

std::vector<Check> z_oracle_checks(int fan_max, int wheel_max, Execution exec) {
  std::vector<Check> out;
  auto add = [&](Family f, Family closed_family, int n) {
    out.push_back({"z brute == closed: " + family_name(f) + " n=" + std::to_string(n),
                   [f, closed_family, n, exec](std::string& detail) {
                     const RankOracleMatroid m = family_matroid(f, n);
                     const IntPoly brute = z_poly(m, exec);
                     const IntPoly closed = z_closed(closed_family, n);
                     detail = describe(brute);
                     if (brute != closed) {
                       detail = "brute " + describe(brute) + " vs closed " + describe(closed);
                       return false;
                     }
                     if (brute.degree() != Degree(static_cast<std::size_t>(m.rank())) ||
                         !palindromic(brute)) {
                       detail = "degree or palindromicity violated";
                       return false;
                     }
                     return true;
                   }});
  };
  for (int n = 1; n <= fan_max; ++n) add(Family::fan, Family::fan, n);
  for (int n = 3; n <= wheel_max; ++n) add(Family::wheel, Family::wheel, n);
  for (int n = 3; n <= wheel_max; ++n) add(Family::whirl, Family::whirl, n);
  for (int n = 1; n <= fan_max; ++n) add(Family::square_of_path, Family::fan, n);
  return out;
}

std::vector<Check> whirl_flat_checks(int max_n, Execution exec) {
  std::vector<Check> out;
  for (int n = 3; n <= max_n; ++n) {
    out.push_back({"whirl flats = L1 + L2: n=" + std::to_string(n), [n, exec](std::string& detail) {
                     const ElementSet rim = rim_elements(n);
                     const RankOracleMatroid graphic =
                         graphic_matroid(make_family(GraphFamily::wheel, n));
                     std::set<ElementSet> l1;
                     for (ElementSet x = rim; x != 0; x &= x - 1) l1.insert(rim & ~(x & -x));
                     std::set<ElementSet> l2{graphic.ground()};
                     for (const Flat& f : flats(graphic, exec)) {
                       if ((rim & ~f.elements) != 0) l2.insert(f.elements);
                     }
                     std::set<ElementSet> whirl;
                     for (const Flat& f : flats(whirl_matroid(n), exec)) whirl.insert(f.elements);
                     std::set<ElementSet> both;
                     for (ElementSet x : l1) {
                       if (l2.count(x)) both.insert(x);
                     }
                     std::set<ElementSet> joined = l1;
                     joined.insert(l2.begin(), l2.end());
                     detail = std::to_string(whirl.size()) + " flats, |L1|=" +
                              std::to_string(l1.size()) + ", |L2|=" + std::to_string(l2.size());
                     return both.empty() && joined == whirl;
                   }});
  }
  return out;
}

std::vector<Check> recurrence_checks(int max_n) {
  std::vector<Check> out;
  for (Family f : {Family::fan, Family::wheel, Family::whirl}) {
    out.push_back({"recurrence == closed: " + family_name(f) + " up to n=" + std::to_string(max_n),
                   [f, max_n](std::string& detail) {
                     const int offset = family_recurrence(f).offset;
                     const std::vector<IntPoly> table = kl_recurrence_table(f, max_n);
                     for (int n = family_min_n(f); n <= max_n; ++n) {
                       if (table.at(static_cast<std::size_t>(n - offset)) != kl_closed(f, n)) {
                         detail = "mismatch at n=" + std::to_string(n);
                         return false;
                       }
                     }
                     detail = std::to_string(table.size()) + " terms, every division exact";
                     return true;
                   }});
  }
  out.push_back({"wheel recurrence a[0] equals P of the triangle", [](std::string& detail) {
                   const IntPoly brute = kl_poly(graphic_matroid(make_family(GraphFamily::cycle, 3)));
                   detail = describe(brute);
                   return kl_recurrence(Family::wheel, 2) == brute;
                 }});
  out.push_back({"whirl recurrence a[0] equals P of a single edge", [](std::string& detail) {
                   const IntPoly brute = kl_poly(graphic_matroid(make_family(GraphFamily::path, 2)));
                   detail = describe(brute);
                   return kl_recurrence(Family::whirl, 1) == brute;
                 }});
  return out;
}

std::vector<Check> gf_checks(int order, int wheel_kl_order) {
  struct GfCase {
    GeneratingFunction gf;
    int order;
    std::vector<IntPoly> pinned;  // coefficients below the first closed-form index
    int first;
    std::function<IntPoly(int)> closed;
  };
  const std::vector<GfCase> cases{
      {GeneratingFunction::kl_fan, order, {IntPoly{1}}, 1,
       [](int n) { return kl_closed(Family::fan, n); }},
      {GeneratingFunction::kl_wheel, wheel_kl_order, {IntPoly{}, IntPoly{}, IntPoly{1}}, 3,
       [](int n) { return kl_closed(Family::wheel, n); }},
      {GeneratingFunction::kl_whirl, order, {IntPoly{}, IntPoly{1}, IntPoly{1}}, 3,
       [](int n) { return kl_closed(Family::whirl, n); }},
      {GeneratingFunction::z_fan, order, {IntPoly{1}}, 1,
       [](int n) { return z_closed(Family::fan, n); }},
      {GeneratingFunction::z_wheel, order, {IntPoly{}, IntPoly{}, IntPoly{1, 3, 1}}, 3,
       [](int n) { return z_closed(Family::wheel, n); }},
      {GeneratingFunction::z_whirl, order, {IntPoly{}, IntPoly{1, 1}, IntPoly{1, 4, 1}}, 3,
       [](int n) { return z_closed(Family::whirl, n); }},
  };
  std::vector<Check> out;
  for (const GfCase& s : cases) {
    out.push_back({"generating function " + std::string(to_string(s.gf)) + " to order " +
                       std::to_string(s.order),
                   [s](std::string& detail) {
                     const TruncSeries series = gf_expand(s.gf, s.order);
                     for (std::size_t k = 0; k < s.pinned.size(); ++k) {
                       if (integer_coefficient(series, static_cast<int>(k)) != s.pinned[k]) {
                         detail = "unexpected coefficient of u^" + std::to_string(k);
                         return false;
                       }
                     }
                     for (int n = s.first; n <= s.order; ++n) {
                       if (integer_coefficient(series, n) != s.closed(n)) {
                         detail = "mismatch at u^" + std::to_string(n);
                         return false;
                       }
                     }
                     detail = "u^0..u^" + std::to_string(s.order);
                     return true;
                   }});
  }
  return out;
}

std::vector<Check> root_checks(int max_n) {
  std::vector<Check> out;
  auto negative = [](const IntPoly& p, std::string& why) {
    if (!all_zeros_negative(p).holds) {
      why = describe(p) + " has a non-negative or non-real zero";
      return false;
    }
    if (!log_concave_no_internal_zeros(p)) {
      why = "coefficients not log-concave";
      return false;
    }
    return true;
  };
  for (Family f : {Family::fan, Family::square_of_path, Family::wheel, Family::whirl}) {
    out.push_back(sweep("kl only negative zeros: " + family_name(f), 3, max_n,
                        [f, negative](int n, std::string& why) {
                          return negative(kl_closed(f, n), why);
                        }));
  }
  out.push_back(sweep("z only negative zeros: fan", 3, max_n, [negative](int n, std::string& why) {
    return negative(z_closed(Family::fan, n), why);
  }));
  out.push_back(sweep("z only negative zeros: square (isomorphic to fan)", 3, max_n,
                      [negative](int n, std::string& why) {
                        return negative(z_closed(Family::fan, n), why);
                      }));
  out.push_back(sweep("z only negative zeros: whirl", 3, max_n, [negative](int n, std::string& why) {
    return negative(z_closed(Family::whirl, n), why);
  }));
  out.push_back(sweep("z real-rooted: wheel", 3, max_n, [](int n, std::string& why) {
    const IntPoly p = z_closed(Family::wheel, n);
    if (!real_rooted(p)) {
      why = describe(p) + " has a non-real zero";
      return false;
    }
    return true;
  }));
  return out;
}

std::vector<Check> interlacing_checks(int max_n) {
  std::vector<Check> out;
  for (int n = 3; n <= max_n; ++n) {
    out.push_back({"P(F_" + std::to_string(n) + ") interleaves P(F_" + std::to_string(n + 1) + ")",
                   [n](std::string&) {
                     return interleaves(kl_closed(Family::fan, n), kl_closed(Family::fan, n + 1));
                   }});
  }
  return out;
}

std::vector<Check> identity_checks(int narayana_max, int hadamard_max, int quadratic_max,
                                   int lucas_max, int n_sequence_max) {
  std::vector<Check> out;
  out.push_back(sweep("Narayana substitution and fan Z", 1, narayana_max,
                      [](int n, std::string&) { return verify_narayana_identity(n); }));
  out.push_back(sweep("wheel coefficients as a Hadamard product", 3, hadamard_max,
                      [](int n, std::string&) { return verify_hadamard_factorization(n); }));
  out.push_back(sweep("wheel Z quadratic factorization and discriminant", 3, quadratic_max,
                      [](int n, std::string&) { return verify_wheel_z_quadratic(n); }));
  out.push_back(sweep("Lucas and Fibonacci coefficient identities", 3, lucas_max,
                      [](int n, std::string&) { return verify_lucas_fibonacci(n); }));
  out.push_back(sweep("n-sequence criterion for the wheel a_k", 7, n_sequence_max,
                      [](int n, std::string&) { return verify_wheel_n_sequence(n); }));
  return out;
}

std::vector<Check> spot_checks(int motzkin_max) {
  std::vector<Check> out;
  struct Pin {
    Family family;
    int n;
    IntPoly value;
  };
  for (const Pin& pin : {Pin{Family::wheel, 3, IntPoly{1, 1}}, Pin{Family::wheel, 4, IntPoly{1, 5}},
                         Pin{Family::whirl, 3, IntPoly{1, 3}}}) {
    out.push_back({"pinned value " + family_name(pin.family) + " n=" + std::to_string(pin.n) +
                       ": " + describe(pin.value),
                   [pin](std::string& detail) {
                     const IntPoly brute = kl_poly(family_matroid(pin.family, pin.n));
                     const IntPoly closed = kl_closed(pin.family, pin.n);
                     const IntPoly rec = kl_recurrence(pin.family, pin.n);
                     detail = "brute, closed and recurrence agree";
                     return brute == pin.value && closed == pin.value && rec == pin.value;
                   }});
  }
  out.push_back(sweep("fan KL at t=1 is a Motzkin number", 1, motzkin_max,
                      [](int n, std::string& why) {
                        const Integer expect = motzkin_numbers(n).back();
                        const Integer got = kl_closed(Family::fan, n).eval(Integer(1));
                        why = got.get_str() + " vs " + expect.get_str();
                        return got == expect;
                      }));
  out.push_back(sweep("fan Z at t=1 is a Catalan number", 1, motzkin_max,
                      [](int n, std::string&) {
                        return z_closed(Family::fan, n).eval(Integer(1)) == catalan(n + 1);
                      }));
  return out;
}

Suite parse_suite(std::string_view s) {
  if (s == "oracle") return Suite::oracle;
  if (s == "gf") return Suite::gf;
  if (s == "recurrence") return Suite::recurrence;
  if (s == "roots") return Suite::roots;
  if (s == "identities") return Suite::identities;
  if (s == "all") return Suite::all;
  throw UsageError("unknown suite '" + std::string(s) + "'");
}

std::vector<Check> suite_checks(Suite suite, const SuiteOptions& o) {
  const Execution exec = execution_for_jobs(o.jobs);
  auto cap = [&](int fallback, int limit) { return std::min(o.max_n.value_or(fallback), limit); };
  auto bound = [&](int fallback) { return o.max_n.value_or(fallback); };
  std::vector<Check> out;
  auto append = [&](std::vector<Check> more) {
    for (auto& c : more) out.push_back(std::move(c));
  };
  if (o.order && (*o.order < 1 || *o.order > TruncSeries::kMaxOrder)) {
    throw UsageError("--order must lie in [1, 64]");
  }
  if (o.max_n && *o.max_n < 0) throw UsageError("--max-n must be non-negative");
  const bool all = suite == Suite::all;
  if (all || suite == Suite::oracle) {
    append(kl_oracle_checks(cap(8, 8), cap(7, 7), exec));
    append(z_oracle_checks(cap(8, 8), cap(7, 7), exec));
    append(whirl_flat_checks(cap(6, 6), exec));
  }
  if (all || suite == Suite::gf) {
    const int order = o.order.value_or(12);
    append(gf_checks(order, std::min(order, 10)));
  }
  if (all || suite == Suite::recurrence) append(recurrence_checks(bound(40)));
  if (all || suite == Suite::roots) {
    append(root_checks(bound(30)));
    append(interlacing_checks(o.max_n ? *o.max_n - 1 : 25));
  }
  if (all || suite == Suite::identities) {
    append(identity_checks(bound(20), bound(30), bound(30), bound(40), bound(30)));
    append(spot_checks(bound(15)));
  }
  return out;
}

}  // namespace matkl
