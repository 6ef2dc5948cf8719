// Copyright 2026 The Setfn Authors.
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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "setfn/set_function.hpp"

namespace setfn {

// Concrete evidence for a failed axiom check: the offending subsets plus the
// violated (in)equality rendered with both sides' values. Re-evaluating the
// subsets through the function reproduces the violation exactly.
struct Witness {
  std::vector<Mask> subsets;
  std::string inequality;
};

// Checks report the first violation in ascending mask order, so failures are
// deterministic and reproducible.
struct CheckReport {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }

  static CheckReport pass() { return {}; }
  static CheckReport fail(std::vector<Mask> subsets, std::string inequality) {
    return {false, Witness{std::move(subsets), std::move(inequality)}};
  }
};

// Raised by transforms whose guarantees hold only under a hypothesis the
// input fails; carries the failing check.
class precondition_error : public error {
 public:
  precondition_error(const std::string& message, CheckReport report)
      : error(report.witness
                  ? message + " (" + report.witness->inequality + ")"
                  : message),
        report_(std::move(report)) {}

  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

namespace detail {

inline std::string term(const SetFunction& f, Mask x) {
  return "f(" + f.ground().format_subset(x) + ")";
}

}  // namespace detail

// f({}) = 0.
inline CheckReport check_normalised(const SetFunction& f) {
  if (f.table()[0] == 0) return CheckReport::pass();
  return CheckReport::fail(
      {0}, detail::term(f, 0) + " = " + to_string(f.table()[0]) + " != 0");
}

// f(X) = f(E-X) for every X.
inline CheckReport check_symmetric(const SetFunction& f) {
  const Mask full = f.full_mask();
  const auto& t = f.table();
  for (Mask x = 0; x <= full; ++x) {
    const Mask co = full ^ x;
    if (t[x] != t[co])
      return CheckReport::fail(
          {x, co}, detail::term(f, x) + " = " + to_string(t[x]) + " != " +
                       to_string(t[co]) + " = " + detail::term(f, co));
  }
  return CheckReport::pass();
}

// f(X∩Y) + f(X∪Y) <= f(X) + f(Y), tested over all 4^n ordered pairs. The
// independent oracle for check_submodular_fast.
inline CheckReport check_submodular_naive(const SetFunction& f) {
  const Mask full = f.full_mask();
  const auto& t = f.table();
  for (Mask x = 0; x <= full; ++x)
    for (Mask y = 0; y <= full; ++y)
      if (t[x & y] + t[x | y] > t[x] + t[y])
        return CheckReport::fail(
            {x, y},
            detail::term(f, x & y) + " + " + detail::term(f, x | y) + " = " +
                to_string(t[x & y] + t[x | y]) + " > " +
                to_string(t[x] + t[y]) + " = " + detail::term(f, x) + " + " +
                detail::term(f, y));
  return CheckReport::pass();
}

// Local exchange form: f(X∪{a}) + f(X∪{b}) >= f(X∪{a,b}) + f(X) for all X
// and distinct a,b outside X. Equivalent verdict to the naive check in
// O(2^n n^2) evaluations.
inline CheckReport check_submodular_fast(const SetFunction& f) {
  const Mask full = f.full_mask();
  const std::size_t n = f.size();
  const auto& t = f.table();
  for (Mask x = 0; x <= full; ++x)
    for (std::size_t a = 0; a < n; ++a) {
      if (contains(x, a)) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (contains(x, b)) continue;
        const Mask xa = x | bit(a);
        const Mask xb = x | bit(b);
        const Mask xab = xa | bit(b);
        if (t[xa] + t[xb] < t[xab] + t[x])
          return CheckReport::fail(
              {x, xa, xb},
              detail::term(f, xa) + " + " + detail::term(f, xb) + " = " +
                  to_string(t[xa] + t[xb]) + " < " +
                  to_string(t[xab] + t[x]) + " = " + detail::term(f, xab) +
                  " + " + detail::term(f, x));
      }
    }
  return CheckReport::pass();
}

// f(X) <= f(X∪{a}); single-element steps suffice by transitivity.
inline CheckReport check_increasing(const SetFunction& f) {
  const Mask full = f.full_mask();
  const std::size_t n = f.size();
  const auto& t = f.table();
  for (Mask x = 0; x <= full; ++x)
    for (std::size_t a = 0; a < n; ++a) {
      if (contains(x, a)) continue;
      const Mask xa = x | bit(a);
      if (t[xa] < t[x])
        return CheckReport::fail(
            {x, xa}, detail::term(f, xa) + " = " + to_string(t[xa]) + " < " +
                         to_string(t[x]) + " = " + detail::term(f, x));
    }
  return CheckReport::pass();
}

// f(X) > 0 for every proper nonempty X; vacuous when |E| <= 1.
inline CheckReport check_connected(const SetFunction& f) {
  const Mask full = f.full_mask();
  const auto& t = f.table();
  for (Mask x = 1; x < full; ++x)
    if (t[x] <= 0)
      return CheckReport::fail({x}, detail::term(f, x) + " = " +
                                        to_string(t[x]) + " is not positive");
  return CheckReport::pass();
}

inline CheckReport check_integer_valued(const SetFunction& f) {
  const Mask full = f.full_mask();
  for (Mask x = 0; x <= full; ++x)
    if (!is_integer(f.table()[x]))
      return CheckReport::fail({x}, detail::term(f, x) + " = " +
                                        to_string(f.table()[x]) +
                                        " is not an integer");
  return CheckReport::pass();
}

inline CheckReport check_half_integral(const SetFunction& f) {
  const Mask full = f.full_mask();
  for (Mask x = 0; x <= full; ++x)
    if (!is_half_integer(f.table()[x]))
      return CheckReport::fail({x}, detail::term(f, x) + " = " +
                                        to_string(f.table()[x]) +
                                        " is not half-integral");
  return CheckReport::pass();
}

// Every singleton value <= 1.
inline CheckReport check_unitary(const SetFunction& f) {
  for (std::size_t e = 0; e < f.size(); ++e) {
    const Rat& v = f.table()[bit(e)];
    if (v > 1)
      return CheckReport::fail(
          {bit(e)}, detail::term(f, bit(e)) + " = " + to_string(v) + " > 1");
  }
  return CheckReport::pass();
}

// Normalised, submodular and increasing; reports the first failing axiom.
inline CheckReport check_polymatroid(const SetFunction& f) {
  if (auto r = check_normalised(f); !r.holds) return r;
  if (auto r = check_submodular_fast(f); !r.holds) return r;
  if (auto r = check_increasing(f); !r.holds) return r;
  return CheckReport::pass();
}

// Normalised, symmetric and submodular; reports the first failing axiom.
inline CheckReport check_connectivity_function(const SetFunction& f) {
  if (auto r = check_normalised(f); !r.holds) return r;
  if (auto r = check_symmetric(f); !r.holds) return r;
  if (auto r = check_submodular_fast(f); !r.holds) return r;
  return CheckReport::pass();
}

struct Classification {
  bool is_normalised = false;
  bool is_symmetric = false;
  bool is_submodular = false;
  bool is_increasing = false;
  bool is_connectivity_function = false;
  bool is_polymatroid = false;
  bool is_integer_valued = false;
  bool is_half_integral = false;
  bool is_unitary = false;
  bool is_connected = false;
  // Present only for polymatroids.
  std::optional<bool> is_compact;
  // Least k such that every singleton value is <= k, i.e. the least k for
  // which this is a k-polymatroid. Present only for polymatroids.
  std::optional<Rat> min_k;
};

inline Classification classify(const SetFunction& f) {
  Classification c;
  c.is_normalised = check_normalised(f).holds;
  c.is_symmetric = check_symmetric(f).holds;
  c.is_submodular = check_submodular_fast(f).holds;
  c.is_increasing = check_increasing(f).holds;
  c.is_connectivity_function =
      c.is_normalised && c.is_symmetric && c.is_submodular;
  c.is_polymatroid = c.is_normalised && c.is_submodular && c.is_increasing;
  c.is_integer_valued = check_integer_valued(f).holds;
  c.is_half_integral = check_half_integral(f).holds;
  c.is_unitary = check_unitary(f).holds;
  c.is_connected = check_connected(f).holds;
  if (c.is_polymatroid) {
    const Mask full = f.full_mask();
    const auto& t = f.table();
    bool compact = true;
    Rat k;
    for (std::size_t e = 0; e < f.size(); ++e) {
      // e is compact when r({e}) equals its connectivity value
      // r({e}) + r(E-{e}) - r(E).
      if (t[bit(e)] != t[bit(e)] + t[full ^ bit(e)] - t[full]) compact = false;
      if (t[bit(e)] > k) k = t[bit(e)];
    }
    c.is_compact = compact;
    c.min_k = std::move(k);
  }
  return c;
}

}  // namespace setfn
