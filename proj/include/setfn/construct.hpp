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
#include "setfn/transform.hpp"

namespace setfn {

// Rank function of the uniform matroid U_{rank,n}: r(X) = min(|X|, rank).
inline SetFunction uniform_matroid(std::size_t rank,
                                   std::vector<std::string> labels) {
  GroundSet ground(std::move(labels));
  if (rank > ground.size())
    throw domain_error("uniform_matroid: rank " + std::to_string(rank) +
                       " exceeds ground size " + std::to_string(ground.size()));
  std::vector<Rat> table(ground.table_size());
  for (Mask m = 0; m < table.size(); ++m)
    table[m] = Rat(std::min<std::size_t>(set_size(m), rank));
  return SetFunction(std::move(ground), std::move(table));
}

// Rank function of the free matroid: r(X) = |X|.
inline SetFunction free_matroid(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  return uniform_matroid(n, std::move(labels));
}

// A matroid is a polymatroid that is integer-valued with every singleton
// value at most 1.
inline CheckReport matroid_check(const SetFunction& rank) {
  if (auto r = check_polymatroid(rank); !r.holds) return r;
  if (auto r = check_integer_valued(rank); !r.holds) return r;
  if (auto r = check_unitary(rank); !r.holds) return r;
  return CheckReport::pass();
}

// A labeled family of subsets of a base ground set; the members become the
// elements of a derived polymatroid.
class SubsetFamily {
 public:
  SubsetFamily(GroundSet base,
               const std::vector<std::pair<std::string, std::vector<std::string>>>&
                   members)
      : base_(std::move(base)) {
    if (members.size() > kMaxGroundSize)
      throw domain_error("subset family exceeds " +
                         std::to_string(kMaxGroundSize) + " members");
    for (const auto& [label, subset] : members) {
      if (!valid_label(label))
        throw domain_error("invalid member label '" + label + "'");
      for (const auto& existing : members_)
        if (existing.first == label)
          throw domain_error("duplicate member label '" + label + "'");
      members_.emplace_back(label, base_.mask_of(subset));
    }
  }

  const GroundSet& base() const { return base_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<std::pair<std::string, Mask>>& members() const {
    return members_;
  }

  GroundSet member_ground() const {
    std::vector<std::string> labels;
    labels.reserve(members_.size());
    for (const auto& member : members_) labels.push_back(member.first);
    return GroundSet(std::move(labels));
  }

 private:
  GroundSet base_;
  std::vector<std::pair<std::string, Mask>> members_;
};

// r_P(X) = r_M(union of the member subsets selected by X): the rank function
// of an integer-valued polymatroid, and every integer-valued polymatroid
// arises this way.
inline SetFunction polymatroid_from_subsets(const SetFunction& matroid,
                                            const SubsetFamily& family,
                                            Enforce enforce = Enforce::require) {
  if (!(matroid.ground() == family.base()))
    throw domain_error(
        "polymatroid_from_subsets: matroid ground set differs from the "
        "family base");
  if (enforce == Enforce::require)
    if (CheckReport report = matroid_check(matroid); !report.holds)
      throw precondition_error(
          "polymatroid_from_subsets: input is not a matroid rank function",
          std::move(report));
  GroundSet ground = family.member_ground();
  std::vector<Mask> unions(ground.table_size(), 0);
  for (Mask m = 1; m < unions.size(); ++m) {
    const auto lowest = static_cast<std::size_t>(std::countr_zero(m));
    unions[m] = unions[m & (m - 1)] | family.members()[lowest].second;
  }
  std::vector<Rat> table(ground.table_size());
  for (Mask m = 0; m < table.size(); ++m)
    table[m] = matroid.table()[unions[m]];
  return SetFunction(std::move(ground), std::move(table));
}

}  // namespace setfn
