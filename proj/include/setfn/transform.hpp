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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "setfn/check.hpp"
#include "setfn/set_function.hpp"

namespace setfn {

// The transforms below compute total formulas, but their guarantees hold
// only for polymatroid (resp. connectivity-function) inputs, so they check
// the hypothesis by default. Enforce::force computes the raw formula.
enum class Enforce { require, force };

namespace detail {

inline void require_polymatroid(const SetFunction& f, const char* op,
                                Enforce enforce) {
  if (enforce == Enforce::force) return;
  if (CheckReport report = check_polymatroid(f); !report.holds)
    throw precondition_error(std::string(op) + ": input is not a polymatroid",
                             std::move(report));
}

inline void require_connectivity_function(const SetFunction& f, const char* op,
                                          Enforce enforce) {
  if (enforce == Enforce::force) return;
  if (CheckReport report = check_connectivity_function(f); !report.holds)
    throw precondition_error(
        std::string(op) + ": input is not a connectivity function",
        std::move(report));
}

// norms[X] = ||X|| = sum of singleton values over X.
inline std::vector<Rat> norm_table(const SetFunction& f) {
  std::vector<Rat> norms(f.ground().table_size());
  const Mask full = f.full_mask();
  for (Mask m = 1; m <= full; ++m)
    norms[m] = norms[m & (m - 1)] + f.table()[lowest_bit(m)];
  return norms;
}

// Ground set E-A (original label order) plus the positions kept from E.
struct MinorIndex {
  GroundSet ground;
  std::vector<std::size_t> kept;

  Mask expand(Mask sub) const {
    Mask out = 0;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (contains(sub, j)) out |= bit(kept[j]);
    return out;
  }
};

inline MinorIndex minor_index(const GroundSet& g, Mask removed) {
  MinorIndex index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!contains(removed, i)) {
      index.kept.push_back(i);
      labels.push_back(g.label(i));
    }
  index.ground = GroundSet(std::move(labels));
  return index;
}

}  // namespace detail

// Connectivity function of a polymatroid: lambda(X) = r(X) + r(E-X) - r(E).
inline SetFunction connectivity_of(const SetFunction& rank,
                                   Enforce enforce = Enforce::require) {
  detail::require_polymatroid(rank, "connectivity_of", enforce);
  const Mask full = rank.full_mask();
  const auto& t = rank.table();
  std::vector<Rat> out(rank.ground().table_size());
  for (Mask m = 0; m <= full; ++m) out[m] = t[m] + t[full ^ m] - t[full];
  return SetFunction(rank.ground(), std::move(out));
}

// Dual polymatroid: r*(X) = r(E-X) + ||X|| - r(E). The dual is a compact
// polymatroid with the same connectivity function; its double is the
// compactification, so duality is an involution exactly on compact
// polymatroids.
inline SetFunction dual(const SetFunction& rank,
                        Enforce enforce = Enforce::require) {
  detail::require_polymatroid(rank, "dual", enforce);
  const Mask full = rank.full_mask();
  const auto& t = rank.table();
  const auto norms = detail::norm_table(rank);
  std::vector<Rat> out(rank.ground().table_size());
  for (Mask m = 0; m <= full; ++m) out[m] = t[full ^ m] + norms[m] - t[full];
  return SetFunction(rank.ground(), std::move(out));
}

// k-dual: r^{*k}(X) = r(E-X) + k|X| - r(E), defined on k-polymatroids
// (every singleton value <= k). Unlike `dual`, the k-dual is an involution
// and exchanges deletion with contraction.
inline SetFunction k_dual(const SetFunction& rank, const Rat& k,
                          Enforce enforce = Enforce::require) {
  if (enforce == Enforce::require) {
    detail::require_polymatroid(rank, "k_dual", enforce);
    for (std::size_t e = 0; e < rank.size(); ++e) {
      const Rat& v = rank.table()[bit(e)];
      if (v > k)
        throw precondition_error(
            "k_dual: input is not a " + to_string(k) + "-polymatroid",
            CheckReport::fail({bit(e)}, detail::term(rank, bit(e)) + " = " +
                                            to_string(v) + " > " +
                                            to_string(k)));
    }
  }
  const Mask full = rank.full_mask();
  const auto& t = rank.table();
  std::vector<Rat> out(rank.ground().table_size());
  for (Mask m = 0; m <= full; ++m)
    out[m] = t[full ^ m] + k * set_size(m) - t[full];
  return SetFunction(rank.ground(), std::move(out));
}

// Elements e with r(E-{e}) = r(E), equivalently r({e}) = lambda({e}).
inline Mask compact_elements(const SetFunction& rank,
                             Enforce enforce = Enforce::require) {
  detail::require_polymatroid(rank, "compact_elements", enforce);
  const Mask full = rank.full_mask();
  const auto& t = rank.table();
  Mask out = 0;
  for (std::size_t e = 0; e < rank.size(); ++e)
    if (t[full ^ bit(e)] == t[full]) out |= bit(e);
  return out;
}

inline bool is_compact(const SetFunction& rank,
                       Enforce enforce = Enforce::require) {
  return compact_elements(rank, enforce) == rank.full_mask();
}

// Compactification: r_flat(X) = r(X) + sum_{x in X} (lambda({x}) - r({x})).
// A compact polymatroid with the same connectivity function; equals the
// double dual.
inline SetFunction compactify(const SetFunction& rank,
                              Enforce enforce = Enforce::require) {
  detail::require_polymatroid(rank, "compactify", enforce);
  const Mask full = rank.full_mask();
  const auto& t = rank.table();
  // Per-element correction lambda({e}) - r({e}) = r(E-{e}) - r(E),
  // accumulated over subsets.
  std::vector<Rat> correction(rank.ground().table_size());
  for (std::size_t e = 0; e < rank.size(); ++e)
    correction[bit(e)] = t[full ^ bit(e)] - t[full];
  for (Mask m = 1; m <= full; ++m)
    if ((m & (m - 1)) != 0)
      correction[m] = correction[m & (m - 1)] + correction[lowest_bit(m)];
  std::vector<Rat> out(rank.ground().table_size());
  for (Mask m = 0; m <= full; ++m) out[m] = t[m] + correction[m];
  return SetFunction(rank.ground(), std::move(out));
}

// Deletion minor: the restriction of r to subsets of E-A, on ground E-A.
inline SetFunction deletion(const SetFunction& rank, Mask removed,
                            Enforce enforce = Enforce::require) {
  if (!is_subset(removed, rank.full_mask()))
    throw domain_error("deletion: subset outside the ground set");
  detail::require_polymatroid(rank, "deletion", enforce);
  auto index = detail::minor_index(rank.ground(), removed);
  std::vector<Rat> out(index.ground.table_size());
  for (Mask m = 0; m < out.size(); ++m)
    out[m] = rank.table()[index.expand(m)];
  return SetFunction(std::move(index.ground), std::move(out));
}

// Contraction minor: r(X∪A) - r(A) on ground E-A. Contraction preserves
// compactness; deletion need not.
inline SetFunction contraction(const SetFunction& rank, Mask contracted,
                               Enforce enforce = Enforce::require) {
  if (!is_subset(contracted, rank.full_mask()))
    throw domain_error("contraction: subset outside the ground set");
  detail::require_polymatroid(rank, "contraction", enforce);
  auto index = detail::minor_index(rank.ground(), contracted);
  const Rat& base = rank.table()[contracted];
  std::vector<Rat> out(index.ground.table_size());
  for (Mask m = 0; m < out.size(); ++m)
    out[m] = rank.table()[index.expand(m) | contracted] - base;
  return SetFunction(std::move(index.ground), std::move(out));
}

// Pointwise positive scaling.
inline SetFunction scale(const SetFunction& f, const Rat& factor) {
  if (factor <= 0) throw domain_error("scale: factor must be positive");
  std::vector<Rat> out(f.table());
  for (auto& v : out) v *= factor;
  return SetFunction(f.ground(), std::move(out));
}

// Pointwise sum of two functions on the same ground set.
inline SetFunction sum(const SetFunction& f, const SetFunction& g) {
  if (!(f.ground() == g.ground()))
    throw domain_error("sum: ground sets differ");
  std::vector<Rat> out(f.table());
  for (std::size_t m = 0; m < out.size(); ++m) out[m] += g.table()[m];
  return SetFunction(f.ground(), std::move(out));
}

// Polymatroid induced by a connectivity function:
// r(X) = lambda(X) + ||X||_lambda. It is compact, self-dual, and its
// connectivity function is 2*lambda.
inline SetFunction induced_polymatroid(const SetFunction& lambda,
                                       Enforce enforce = Enforce::require) {
  detail::require_connectivity_function(lambda, "induced_polymatroid",
                                        enforce);
  const Mask full = lambda.full_mask();
  const auto norms = detail::norm_table(lambda);
  std::vector<Rat> out(lambda.ground().table_size());
  for (Mask m = 0; m <= full; ++m) out[m] = lambda.table()[m] + norms[m];
  return SetFunction(lambda.ground(), std::move(out));
}

// Half of the induced polymatroid: a compact self-dual polymatroid whose
// connectivity function equals lambda exactly. Integer-valued inputs yield
// half-integral outputs.
inline SetFunction canonical_self_dual(const SetFunction& lambda,
                                       Enforce enforce = Enforce::require) {
  detail::require_connectivity_function(lambda, "canonical_self_dual",
                                        enforce);
  return scale(induced_polymatroid(lambda, Enforce::force), Rat(1, 2));
}

// Checks the minor/dual exchange dual(r/A) = compactify(dual(r)\A). This is
// a theorem for every polymatroid, so a failure indicates an implementation
// bug; it is exposed as a user-visible self-test.
inline CheckReport minor_dual_identity_check(
    const SetFunction& rank, Mask contracted,
    Enforce enforce = Enforce::require) {
  if (!is_subset(contracted, rank.full_mask()))
    throw domain_error("minor_dual_identity_check: subset outside the ground set");
  detail::require_polymatroid(rank, "minor_dual_identity_check", enforce);
  const SetFunction lhs =
      dual(contraction(rank, contracted, Enforce::force), Enforce::force);
  const SetFunction rhs = compactify(
      deletion(dual(rank, Enforce::force), contracted, Enforce::force),
      Enforce::force);
  if (lhs == rhs) return CheckReport::pass();
  const Mask full = lhs.full_mask();
  for (Mask m = 0; m <= full; ++m)
    if (lhs.table()[m] != rhs.table()[m]) {
      const std::string at = lhs.ground().format_subset(m);
      return CheckReport::fail(
          {m}, "dual(contract(r,A))(" + at + ") = " +
                   to_string(lhs.table()[m]) + " != " +
                   to_string(rhs.table()[m]) +
                   " = compactify(delete(dual(r),A))(" + at + ")");
    }
  // Tables equal but grounds differ is impossible: both minors keep order.
  return CheckReport::fail({0}, "ground sets differ");
}

}  // namespace setfn
