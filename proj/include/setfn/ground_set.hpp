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

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "setfn/rational.hpp"

namespace setfn {

// Subsets of a ground set are bitmasks: bit i selects the i-th label.
using Mask = std::uint32_t;

// Hard cap on ground-set size; the dense table of 2^n values must stay
// allocatable.
inline constexpr std::size_t kMaxGroundSize = 24;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }
constexpr bool contains(Mask set, std::size_t i) { return (set >> i) & Mask{1}; }
constexpr bool is_subset(Mask inner, Mask outer) { return (inner & ~outer) == 0; }
inline int set_size(Mask set) { return std::popcount(set); }
inline Mask lowest_bit(Mask set) { return set & (~set + Mask{1}); }

// Labels are nonempty words over [A-Za-z0-9_].
inline bool valid_label(std::string_view label) {
  if (label.empty()) return false;
  for (const char c : label) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

// Ordered sequence of pairwise distinct element labels.
class GroundSet {
 public:
  GroundSet() = default;

  explicit GroundSet(std::vector<std::string> labels)
      : labels_(std::move(labels)) {
    if (labels_.size() > kMaxGroundSize)
      throw domain_error("ground set exceeds " +
                         std::to_string(kMaxGroundSize) + " elements");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!valid_label(labels_[i]))
        throw domain_error("invalid label '" + labels_[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (labels_[i] == labels_[j])
          throw domain_error("duplicate label '" + labels_[i] + "'");
    }
  }

  std::size_t size() const { return labels_.size(); }
  std::size_t table_size() const { return std::size_t{1} << labels_.size(); }
  Mask full_mask() const { return static_cast<Mask>(table_size() - 1); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  std::optional<std::size_t> find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  Mask mask_of(const std::vector<std::string>& subset) const {
    Mask out = 0;
    for (const auto& name : subset) {
      const auto i = find(name);
      if (!i) throw domain_error("unknown label '" + name + "'");
      if (contains(out, *i))
        throw domain_error("duplicate label '" + name + "'");
      out |= bit(*i);
    }
    return out;
  }

  std::vector<std::string> labels_of(Mask subset) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (contains(subset, i)) out.push_back(labels_[i]);
    return out;
  }

  // Renders "{}" or "{a,c}", labels in ascending position order.
  std::string format_subset(Mask subset) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!contains(subset, i)) continue;
      if (!first) out += ',';
      out += labels_[i];
      first = false;
    }
    out += '}';
    return out;
  }

  // Inverse of format_subset; members may appear in any order.
  Mask parse_subset(std::string_view token) const {
    if (token.size() < 2 || token.front() != '{' || token.back() != '}')
      throw domain_error("malformed subset '" + std::string(token) + "'");
    const std::string_view inner = token.substr(1, token.size() - 2);
    Mask out = 0;
    if (inner.empty()) return out;
    std::size_t pos = 0;
    for (;;) {
      const std::size_t comma = inner.find(',', pos);
      const std::string_view piece = comma == std::string_view::npos
                                         ? inner.substr(pos)
                                         : inner.substr(pos, comma - pos);
      if (!valid_label(piece))
        throw domain_error("malformed subset '" + std::string(token) + "'");
      const auto i = find(piece);
      if (!i) throw domain_error("unknown label '" + std::string(piece) + "'");
      if (contains(out, *i))
        throw domain_error("duplicate label '" + std::string(piece) + "'");
      out |= bit(*i);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return out;
  }

  bool operator==(const GroundSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace setfn
