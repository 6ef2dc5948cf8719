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

#include "setfn/ground_set.hpp"
#include "setfn/rational.hpp"

namespace setfn {

// Dense exact set function: one rational per subset of the ground set.
// Immutable after construction; every operation on it is a pure function,
// so shared instances may be read concurrently.
class SetFunction {
 public:
  SetFunction(GroundSet ground, std::vector<Rat> table)
      : ground_(std::move(ground)), table_(std::move(table)) {
    if (table_.size() != ground_.table_size())
      throw domain_error("table has " + std::to_string(table_.size()) +
                         " entries but the ground set of " +
                         std::to_string(ground_.size()) + " elements needs " +
                         std::to_string(ground_.table_size()));
  }

  static SetFunction zero(GroundSet ground) {
    std::vector<Rat> table(ground.table_size());
    return SetFunction(std::move(ground), std::move(table));
  }

  // Builds from explicit (subset, value) assignments, which must cover every
  // subset of the ground set exactly once.
  static SetFunction from_values(
      GroundSet ground,
      const std::vector<std::pair<std::vector<std::string>, Rat>>& values) {
    std::vector<Rat> table(ground.table_size());
    std::vector<bool> seen(ground.table_size(), false);
    for (const auto& [subset, value] : values) {
      const Mask m = ground.mask_of(subset);
      if (seen[m])
        throw domain_error("duplicate subset " + ground.format_subset(m));
      seen[m] = true;
      table[m] = value;
    }
    for (std::size_t m = 0; m < seen.size(); ++m)
      if (!seen[m])
        throw domain_error("missing subset " +
                           ground.format_subset(static_cast<Mask>(m)));
    return SetFunction(std::move(ground), std::move(table));
  }

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  Mask full_mask() const { return ground_.full_mask(); }
  const std::vector<Rat>& table() const { return table_; }

  const Rat& value(Mask subset) const {
    if (!is_subset(subset, full_mask()))
      throw domain_error("subset outside the ground set");
    return table_[subset];
  }

  Rat eval(const std::vector<std::string>& subset) const {
    return table_[ground_.mask_of(subset)];
  }

  // ||X||: sum of the singleton values over the members of X.
  Rat norm(Mask subset) const {
    if (!is_subset(subset, full_mask()))
      throw domain_error("subset outside the ground set");
    Rat out;
    for (Mask rest = subset; rest != 0;) {
      const Mask low = lowest_bit(rest);
      out += table_[low];
      rest ^= low;
    }
    return out;
  }

  // Equal ground sets (same labels in the same order) and equal tables.
  bool operator==(const SetFunction& other) const {
    return ground_ == other.ground_ && table_ == other.table_;
  }

 private:
  GroundSet ground_;
  std::vector<Rat> table_;
};

}  // namespace setfn
