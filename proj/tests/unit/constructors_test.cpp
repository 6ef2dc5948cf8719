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

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "setfn/construct.hpp"
#include "setfn/random.hpp"

using namespace setfn;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("uniform_matroid") {
  CHECK(uniform_matroid(1, {"a", "b"}) == fixtures::fix_u12());
  CHECK(uniform_matroid(2, {"a", "b", "c"}) == fixtures::fix_u23());
  CHECK(uniform_matroid(0, {"a"}) == fixtures::fix_loop());
  CHECK_THROWS_WITH(uniform_matroid(2, {"a"}),
                    ContainsSubstring("rank 2 exceeds ground size 1"));
}

TEST_CASE("free_matroid") {
  CHECK(free_matroid({"a"}) == fixtures::fix_coloop());
  CHECK(free_matroid({}) == SetFunction::zero(GroundSet{}));
  CHECK(free_matroid({"a", "b"}).table() == std::vector<Rat>{0, 1, 1, 2});
}

TEST_CASE("matroid_check") {
  CHECK(matroid_check(fixtures::fix_u23()).holds);
  CHECK(matroid_check(fixtures::fix_loop()).holds);
  const auto rank = graph_rank(fixtures::fix_k3());
  const auto report = matroid_check(rank);
  REQUIRE_FALSE(report.holds);
  REQUIRE(report.witness.has_value());
  // the failure is a singleton of rank 2
  CHECK(report.witness->inequality == "f({e1}) = 2 > 1");
  CHECK_FALSE(matroid_check(fixtures::fix_lu13()).holds);
}

TEST_CASE("subset family validation") {
  const GroundSet base({"1", "2", "3"});
  CHECK_NOTHROW(SubsetFamily(base, {{"x", {"1", "2"}}, {"y", {}}}));
  CHECK_THROWS_WITH(SubsetFamily(base, {{"x", {"1"}}, {"x", {"2"}}}),
                    ContainsSubstring("duplicate member label 'x'"));
  CHECK_THROWS_WITH(SubsetFamily(base, {{"x", {"9"}}}),
                    ContainsSubstring("unknown label '9'"));
}

TEST_CASE("polymatroid_from_subsets") {
  SECTION("pair subsets over a free matroid give the triangle rank") {
    const SubsetFamily family(
        GroundSet({"1", "2", "3"}),
        {{"x", {"1", "2"}}, {"y", {"2", "3"}}, {"z", {"1", "3"}}});
    const auto built =
        polymatroid_from_subsets(free_matroid({"1", "2", "3"}), family);
    CHECK(built.table() == graph_rank(fixtures::fix_k3()).table());
    CHECK(built.ground().labels() == std::vector<std::string>{"x", "y", "z"});
  }
  SECTION("a member evaluates to the matroid rank of its subset") {
    const SubsetFamily family(GroundSet({"a", "b"}), {{"x", {"a", "b"}}});
    const auto built =
        polymatroid_from_subsets(fixtures::fix_u12(), family);
    CHECK(built.eval({"x"}) == 1);
  }
  SECTION("empty members give the zero function") {
    const SubsetFamily family(GroundSet({"a", "b"}), {{"x", {}}, {"y", {}}});
    CHECK(polymatroid_from_subsets(fixtures::fix_u12(), family) ==
          SetFunction::zero(GroundSet({"x", "y"})));
  }
  SECTION("rejects non-matroid inputs") {
    const SubsetFamily family(GroundSet({"e1", "e2", "e3"}), {{"x", {"e1"}}});
    CHECK_THROWS_AS(
        polymatroid_from_subsets(graph_rank(fixtures::fix_k3()), family),
        precondition_error);
  }
  SECTION("rejects a base mismatch") {
    const SubsetFamily family(GroundSet({"a", "b", "c"}), {{"x", {"a"}}});
    CHECK_THROWS_WITH(
        polymatroid_from_subsets(fixtures::fix_u12(), family),
        ContainsSubstring("differs from the family base"));
  }
  SECTION("output is always an integer-valued polymatroid") {
    for (std::uint64_t i = 0; i < 20; ++i) {
      Rng rng(6000 + i);
      std::vector<std::pair<std::string, std::vector<std::string>>> members;
      const auto base_labels = numbered_labels("b", 4);
      for (std::size_t m = 0; m < i % 5; ++m) {
        std::vector<std::string> subset;
        for (const auto& label : base_labels)
          if (rng.coin()) subset.push_back(label);
        members.emplace_back("m" + std::to_string(m + 1), subset);
      }
      const auto built = polymatroid_from_subsets(
          free_matroid(base_labels), SubsetFamily(GroundSet(base_labels), members));
      const auto c = classify(built);
      CHECK(c.is_polymatroid);
      CHECK(c.is_integer_valued);
    }
  }
}
