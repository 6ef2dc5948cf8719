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

// Shared fixtures and tiny test-side oracles. The oracles compute tables
// straight from the defining formulas, element by element, independently of
// the library's optimized implementations.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "setfn/setfn.hpp"

namespace fixtures {

using namespace setfn;

// min(|X|, k): the uniform-matroid rank, from the formula.
inline SetFunction uniform_oracle(std::vector<std::string> labels,
                                  std::size_t k) {
  GroundSet ground(std::move(labels));
  std::vector<Rat> table(ground.table_size());
  for (Mask m = 0; m < table.size(); ++m)
    table[m] = Rat(std::min<std::size_t>(set_size(m), k));
  return SetFunction(std::move(ground), std::move(table));
}

// lambda(X) = r(X) + r(E-X) - r(E), from the formula.
inline SetFunction lambda_oracle(const SetFunction& r) {
  const Mask full = r.full_mask();
  std::vector<Rat> table(r.ground().table_size());
  for (Mask m = 0; m <= full; ++m)
    table[m] = r.table()[m] + r.table()[full ^ m] - r.table()[full];
  return SetFunction(r.ground(), std::move(table));
}

// r*(X) = r(E-X) + ||X|| - r(E), with the norm summed element by element.
inline SetFunction dual_oracle(const SetFunction& r) {
  const Mask full = r.full_mask();
  std::vector<Rat> table(r.ground().table_size());
  for (Mask m = 0; m <= full; ++m) {
    Rat norm;
    for (std::size_t e = 0; e < r.size(); ++e)
      if (contains(m, e)) norm += r.table()[bit(e)];
    table[m] = r.table()[full ^ m] + norm - r.table()[full];
  }
  return SetFunction(r.ground(), std::move(table));
}

inline SetFunction fix_u12() { return uniform_oracle({"a", "b"}, 1); }
inline SetFunction fix_u23() { return uniform_oracle({"a", "b", "c"}, 2); }
inline SetFunction fix_coloop() { return uniform_oracle({"a"}, 1); }
inline SetFunction fix_loop() { return uniform_oracle({"a"}, 0); }
inline SetFunction fix_lu13() {
  return lambda_oracle(uniform_oracle({"a", "b", "c"}, 1));
}

inline Graph fix_k3() {
  return Graph({"u", "v", "w"},
               {{"e1", "u", "v"}, {"e2", "v", "w"}, {"e3", "u", "w"}});
}

// Direct sum U_{1,2} + U_{1,1} on {a,b,c}: c is a coloop, so the
// connectivity function vanishes on {c}.
inline SetFunction fix_u12_plus_coloop() {
  GroundSet ground({"a", "b", "c"});
  std::vector<Rat> table(8);
  for (Mask m = 0; m < 8; ++m) {
    const std::size_t ab = static_cast<std::size_t>(set_size(m & 0b011u));
    table[m] = Rat(std::min<std::size_t>(ab, 1) + (contains(m, 2) ? 1 : 0));
  }
  return SetFunction(std::move(ground), std::move(table));
}

}  // namespace fixtures
