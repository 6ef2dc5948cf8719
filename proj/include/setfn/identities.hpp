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

#include <string>
#include <utility>
#include <vector>

#include "setfn/construct.hpp"
#include "setfn/random.hpp"
#include "setfn/transform.hpp"

namespace setfn {

// Each identity below is a theorem about polymatroids or connectivity
// functions; running the battery against an input is a self-test of the
// whole transform stack, so it is exposed to users and not only to the test
// suite.

struct IdentityOptions {
  // Minor identities enumerate every subset A of the ground set when
  // n <= exhaustive_limit, otherwise `samples` seeded subsets plus {} and E.
  std::size_t exhaustive_limit = 8;
  std::size_t samples = 64;
  std::uint64_t seed = 1;
};

struct IdentityResult {
  std::string name;
  bool holds = true;
  std::string detail;
};

inline bool all_hold(const std::vector<IdentityResult>& results) {
  for (const auto& r : results)
    if (!r.holds) return false;
  return true;
}

namespace detail {

inline std::vector<Mask> minor_subsets(const GroundSet& g,
                                       const IdentityOptions& opt) {
  const Mask full = g.full_mask();
  std::vector<Mask> out;
  if (g.size() <= opt.exhaustive_limit) {
    out.reserve(g.table_size());
    for (Mask m = 0; m <= full; ++m) out.push_back(m);
    return out;
  }
  out.push_back(0);
  out.push_back(full);
  Rng rng(opt.seed);
  for (std::size_t i = 0; i < opt.samples; ++i)
    out.push_back(static_cast<Mask>(rng.next()) & full);
  return out;
}

inline IdentityResult from_report(std::string name, const CheckReport& report) {
  IdentityResult out{std::move(name), report.holds, ""};
  if (!report.holds && report.witness) out.detail = report.witness->inequality;
  return out;
}

inline IdentityResult tables_equal(std::string name, const SetFunction& lhs,
                                   const SetFunction& rhs,
                                   const std::string& lhs_text,
                                   const std::string& rhs_text) {
  IdentityResult out{std::move(name), true, ""};
  if (lhs == rhs) return out;
  out.holds = false;
  if (!(lhs.ground() == rhs.ground())) {
    out.detail = lhs_text + " and " + rhs_text + " have different ground sets";
    return out;
  }
  for (Mask m = 0; m <= lhs.full_mask(); ++m)
    if (lhs.table()[m] != rhs.table()[m]) {
      const std::string at = lhs.ground().format_subset(m);
      out.detail = lhs_text + "(" + at + ") = " + to_string(lhs.table()[m]) +
                   " != " + to_string(rhs.table()[m]) + " = " + rhs_text +
                   "(" + at + ")";
      return out;
    }
  return out;
}

}  // namespace detail

// Theorems about an arbitrary polymatroid: the norm difference bound, the
// dual (polymatroid, compact, connectivity-preserving, double dual equals
// compactification), the compactification, compactness under contraction,
// the minor/dual exchange, and for integer-valued inputs the two k-duality
// laws.
inline std::vector<IdentityResult> polymatroid_identities(
    const SetFunction& r, const IdentityOptions& opt = {}) {
  detail::require_polymatroid(r, "polymatroid_identities", Enforce::require);
  std::vector<IdentityResult> out;
  const Mask full = r.full_mask();
  const auto& t = r.table();
  const auto norms = detail::norm_table(r);

  {  // r(Y) - r(X) <= ||Y-X|| for all X subseteq Y
    IdentityResult res{"norm-difference-bound", true, ""};
    for (Mask y = 0; y <= full && res.holds; ++y)
      for (Mask x = y;; x = (x - 1) & y) {
        if (t[y] - t[x] > norms[y & ~x]) {
          res.holds = false;
          res.detail = "r(" + r.ground().format_subset(y) + ") - r(" +
                       r.ground().format_subset(x) + ") = " +
                       to_string(t[y] - t[x]) + " > " +
                       to_string(norms[y & ~x]) + " = ||" +
                       r.ground().format_subset(y & ~x) + "||";
          break;
        }
        if (x == 0) break;
      }
    out.push_back(std::move(res));
  }

  {  // the two characterizations of a compact element agree
    IdentityResult res{"compact-element-equivalence", true, ""};
    for (std::size_t e = 0; e < r.size(); ++e) {
      const bool by_rank = t[full ^ bit(e)] == t[full];
      const bool by_lambda =
          t[bit(e)] == t[bit(e)] + t[full ^ bit(e)] - t[full];
      if (by_rank != by_lambda) {
        res.holds = false;
        res.detail = "element " + r.ground().label(e) +
                     ": r(E-{e}) = r(E) and r({e}) = lambda({e}) disagree";
        break;
      }
    }
    out.push_back(std::move(res));
  }

  const SetFunction dl = dual(r, Enforce::force);
  out.push_back(detail::from_report("dual-is-polymatroid",
                                    check_polymatroid(dl)));
  out.push_back(detail::tables_equal(
      "dual-preserves-connectivity", connectivity_of(dl, Enforce::force),
      connectivity_of(r, Enforce::force), "lambda(dual(r))", "lambda(r)"));
  {
    IdentityResult res{"dual-is-compact", true, ""};
    const Mask compact = compact_elements(dl, Enforce::force);
    if (compact != full) {
      res.holds = false;
      res.detail = "non-compact elements " +
                   r.ground().format_subset(full & ~compact);
    }
    out.push_back(std::move(res));
  }

  const SetFunction flat = compactify(r, Enforce::force);
  out.push_back(detail::tables_equal("double-dual-is-compactification",
                                     dual(dl, Enforce::force), flat,
                                     "dual(dual(r))", "compactify(r)"));
  out.push_back(detail::from_report("compactification-is-polymatroid",
                                    check_polymatroid(flat)));
  out.push_back(detail::tables_equal(
      "compactification-preserves-connectivity",
      connectivity_of(flat, Enforce::force),
      connectivity_of(r, Enforce::force), "lambda(compactify(r))",
      "lambda(r)"));

  const auto subsets = detail::minor_subsets(r.ground(), opt);
  {  // contracting a compact polymatroid stays compact
    IdentityResult res{"contraction-preserves-compactness", true, ""};
    for (const Mask a : subsets) {
      const SetFunction minor = contraction(flat, a, Enforce::force);
      if (compact_elements(minor, Enforce::force) != minor.full_mask()) {
        res.holds = false;
        res.detail = "contracting " + r.ground().format_subset(a) +
                     " of the compactification lost compactness";
        break;
      }
    }
    out.push_back(std::move(res));
  }
  {  // dual(r/A) = compactify(dual(r)\A)
    IdentityResult res{"minor-dual-exchange", true, ""};
    for (const Mask a : subsets) {
      const CheckReport report =
          minor_dual_identity_check(r, a, Enforce::force);
      if (!report.holds) {
        res.holds = false;
        res.detail = "A = " + r.ground().format_subset(a) +
                     (report.witness ? ": " + report.witness->inequality : "");
        break;
      }
    }
    out.push_back(std::move(res));
  }

  if (check_integer_valued(r).holds) {
    Rat k(1);
    for (std::size_t e = 0; e < r.size(); ++e)
      if (t[bit(e)] > k) k = t[bit(e)];
    const SetFunction kd = k_dual(r, k, Enforce::force);
    out.push_back(detail::tables_equal(
        "k-dual-involution", k_dual(kd, k, Enforce::force), r,
        "k_dual(k_dual(r))", "r"));
    IdentityResult res{"k-dual-exchanges-minors", true, ""};
    for (const Mask a : subsets) {
      const auto lhs = k_dual(deletion(r, a, Enforce::force), k, Enforce::force);
      const auto rhs = contraction(kd, a, Enforce::force);
      if (!(lhs == rhs)) {
        res.holds = false;
        res.detail = "A = " + r.ground().format_subset(a);
        break;
      }
    }
    out.push_back(std::move(res));
  }

  return out;
}

// Theorems specific to matroid rank functions; assumes matroid_check holds.
inline std::vector<IdentityResult> matroid_identities(
    const SetFunction& r, const IdentityOptions& opt = {}) {
  (void)opt;
  std::vector<IdentityResult> out;
  const auto& t = r.table();
  const SetFunction dl = dual(r, Enforce::force);

  {  // loops stay loops under polymatroid duality
    IdentityResult res{"dual-keeps-loops", true, ""};
    for (std::size_t e = 0; e < r.size(); ++e)
      if (t[bit(e)] == 0 && dl.table()[bit(e)] != 0) {
        res.holds = false;
        res.detail = "loop " + r.ground().label(e) + " has dual rank " +
                     to_string(dl.table()[bit(e)]);
        break;
      }
    out.push_back(std::move(res));
  }

  bool loopless = true;
  for (std::size_t e = 0; e < r.size(); ++e)
    if (t[bit(e)] == 0) loopless = false;
  if (loopless) {
    const SetFunction star = k_dual(r, Rat(1), Enforce::force);
    out.push_back(detail::tables_equal("dual-matches-matroid-dual-loopless",
                                       dl, star, "dual(r)", "k_dual(r,1)"));
    const SetFunction lambda = connectivity_of(r, Enforce::force);
    const SetFunction rank_sum = sum(r, star);
    {  // r(X) + r*(X) = lambda(X) + |X|
      IdentityResult res{"rank-sum-identity", true, ""};
      for (Mask m = 0; m <= r.full_mask(); ++m)
        if (rank_sum.table()[m] != lambda.table()[m] + set_size(m)) {
          res.holds = false;
          res.detail = "at " + r.ground().format_subset(m) + ": " +
                       to_string(rank_sum.table()[m]) + " != " +
                       to_string(lambda.table()[m] + set_size(m));
          break;
        }
      out.push_back(std::move(res));
    }
    out.push_back(detail::tables_equal(
        "rank-sum-connectivity-doubles",
        connectivity_of(rank_sum, Enforce::force), scale(lambda, Rat(2)),
        "lambda(r + r*)", "2*lambda(r)"));
  }
  return out;
}

// Theorems about an arbitrary connectivity function: the norm bounds, the
// induced polymatroid (polymatroid, compact, self-dual, doubled
// connectivity), and its half-scaling (restores the input exactly;
// half-integral for integer-valued inputs).
inline std::vector<IdentityResult> connectivity_identities(
    const SetFunction& lambda, const IdentityOptions& opt = {}) {
  (void)opt;
  detail::require_connectivity_function(lambda, "connectivity_identities",
                                        Enforce::require);
  std::vector<IdentityResult> out;
  const Mask full = lambda.full_mask();
  const auto& t = lambda.table();
  const auto norms = detail::norm_table(lambda);

  {  // lambda(Z) <= ||Z||
    IdentityResult res{"norm-bound", true, ""};
    for (Mask z = 0; z <= full; ++z)
      if (t[z] > norms[z]) {
        res.holds = false;
        res.detail = "lambda(" + lambda.ground().format_subset(z) + ") = " +
                     to_string(t[z]) + " > " + to_string(norms[z]);
        break;
      }
    out.push_back(std::move(res));
  }
  {  // lambda(B) - lambda(A) <= ||B-A|| for A subseteq B
    IdentityResult res{"norm-difference-bound", true, ""};
    for (Mask b = 0; b <= full && res.holds; ++b)
      for (Mask a = b;; a = (a - 1) & b) {
        if (t[b] - t[a] > norms[b & ~a]) {
          res.holds = false;
          res.detail = "lambda(" + lambda.ground().format_subset(b) +
                       ") - lambda(" + lambda.ground().format_subset(a) +
                       ") > ||" + lambda.ground().format_subset(b & ~a) + "||";
          break;
        }
        if (a == 0) break;
      }
    out.push_back(std::move(res));
  }

  const SetFunction induced = induced_polymatroid(lambda, Enforce::force);
  out.push_back(detail::from_report("induced-is-polymatroid",
                                    check_polymatroid(induced)));
  out.push_back(detail::tables_equal(
      "induced-connectivity-doubles", connectivity_of(induced, Enforce::force),
      scale(lambda, Rat(2)), "lambda(induced)", "2*lambda"));
  {
    IdentityResult res{"induced-is-compact", true, ""};
    const Mask compact = compact_elements(induced, Enforce::force);
    if (compact != full) {
      res.holds = false;
      res.detail = "non-compact elements " +
                   lambda.ground().format_subset(full & ~compact);
    }
    out.push_back(std::move(res));
  }
  out.push_back(detail::tables_equal("induced-is-self-dual",
                                     dual(induced, Enforce::force), induced,
                                     "dual(induced)", "induced"));

  const SetFunction canonical = canonical_self_dual(lambda, Enforce::force);
  out.push_back(detail::tables_equal(
      "canonical-connectivity-restores",
      connectivity_of(canonical, Enforce::force), lambda, "lambda(canonical)",
      "lambda"));
  if (check_integer_valued(lambda).holds) {
    IdentityResult res{"canonical-half-integral", true, ""};
    for (Mask m = 0; m <= full; ++m)
      if (!is_half_integer(canonical.table()[m])) {
        res.holds = false;
        res.detail = "canonical(" + lambda.ground().format_subset(m) + ") = " +
                     to_string(canonical.table()[m]);
        break;
      }
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace setfn
