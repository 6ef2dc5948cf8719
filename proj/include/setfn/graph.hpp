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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "setfn/set_function.hpp"

namespace setfn {

struct EdgeSpec {
  std::string label;
  std::string tail;
  std::string head;
};

// Labeled multigraph; loops and parallel edges allowed. The edges form the
// ground set of the derived set functions, so there are at most
// kMaxGroundSize of them.
class Graph {
 public:
  struct Edge {
    std::string label;
    std::size_t tail;
    std::size_t head;
  };

  Graph() = default;

  Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges)
      : vertices_(std::move(vertices)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (!valid_label(vertices_[i]))
        throw domain_error("invalid vertex label '" + vertices_[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (vertices_[i] == vertices_[j])
          throw domain_error("duplicate vertex label '" + vertices_[i] + "'");
    }
    if (edges.size() > kMaxGroundSize)
      throw domain_error("graph exceeds " + std::to_string(kMaxGroundSize) +
                         " edges");
    for (const auto& spec : edges) {
      if (!valid_label(spec.label))
        throw domain_error("invalid edge label '" + spec.label + "'");
      for (const auto& other : edges_)
        if (other.label == spec.label)
          throw domain_error("duplicate edge label '" + spec.label + "'");
      const auto tail = find_vertex(spec.tail);
      if (!tail) throw domain_error("unknown vertex '" + spec.tail + "'");
      const auto head = find_vertex(spec.head);
      if (!head) throw domain_error("unknown vertex '" + spec.head + "'");
      edges_.push_back(Edge{spec.label, *tail, *head});
    }
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertex_labels() const { return vertices_; }
  const std::string& vertex_label(std::size_t v) const { return vertices_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  bool is_loop(std::size_t e) const {
    return edges_[e].tail == edges_[e].head;
  }

  std::optional<std::size_t> find_vertex(std::string_view label) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i] == label) return i;
    return std::nullopt;
  }

  // Edges incident with the vertex; a loop counts once.
  std::size_t incidence(std::size_t v) const {
    std::size_t count = 0;
    for (const auto& e : edges_)
      if (e.tail == v || e.head == v) ++count;
    return count;
  }

  bool has_isolated_vertex() const {
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (incidence(v) == 0) return true;
    return false;
  }

  std::optional<std::size_t> first_isolated_vertex() const {
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (incidence(v) == 0) return v;
    return std::nullopt;
  }

  Graph without_isolated_vertices() const {
    std::vector<std::string> kept;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (incidence(v) > 0) kept.push_back(vertices_[v]);
    std::vector<EdgeSpec> specs;
    specs.reserve(edges_.size());
    for (const auto& e : edges_)
      specs.push_back({e.label, vertices_[e.tail], vertices_[e.head]});
    return Graph(std::move(kept), specs);
  }

  GroundSet edge_ground() const {
    std::vector<std::string> labels;
    labels.reserve(edges_.size());
    for (const auto& e : edges_) labels.push_back(e.label);
    return GroundSet(std::move(labels));
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

enum class IsolatedVertices { reject, strip };

namespace detail {

// Incident vertices get consecutive slots in a 64-bit set; with at most 24
// edges there are at most 48 of them.
struct IncidenceIndex {
  std::vector<std::uint64_t> edge_mask;              // per edge: its endpoints
  std::vector<std::pair<int, int>> edge_slots;       // per edge: slot indices
  std::size_t incident_count = 0;
};

inline IncidenceIndex incidence_index(const Graph& g) {
  IncidenceIndex index;
  std::vector<int> slot(g.vertex_count(), -1);
  const auto slot_of = [&](std::size_t v) {
    if (slot[v] < 0) slot[v] = static_cast<int>(index.incident_count++);
    return slot[v];
  };
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const int a = slot_of(g.edge(e).tail);
    const int b = slot_of(g.edge(e).head);
    index.edge_mask.push_back((std::uint64_t{1} << a) |
                              (std::uint64_t{1} << b));
    index.edge_slots.emplace_back(a, b);
  }
  return index;
}

// vx[X] = the set of vertices incident with at least one edge of X.
inline std::vector<std::uint64_t> vertex_set_table(
    const Graph& g, const IncidenceIndex& index) {
  std::vector<std::uint64_t> vx(std::size_t{1} << g.edge_count());
  for (Mask m = 1; m < vx.size(); ++m)
    vx[m] = vx[m & (m - 1)] | index.edge_mask[std::countr_zero(m)];
  return vx;
}

}  // namespace detail

// Connectivity function of a graph on its edge set:
// lambda_G(X) = |V(X)| + |V(E-X)| - |V|. An isolated vertex would make the
// empty set evaluate below zero, so such graphs are rejected (or stripped).
inline SetFunction graph_connectivity(
    const Graph& g, IsolatedVertices policy = IsolatedVertices::reject) {
  if (const auto v = g.first_isolated_vertex()) {
    if (policy == IsolatedVertices::reject)
      throw domain_error("graph_connectivity: isolated vertex '" +
                         g.vertex_label(*v) + "'");
    return graph_connectivity(g.without_isolated_vertices(),
                              IsolatedVertices::reject);
  }
  const auto index = detail::incidence_index(g);
  const auto vx = detail::vertex_set_table(g, index);
  const Mask full = static_cast<Mask>(vx.size() - 1);
  const auto total = static_cast<long>(g.vertex_count());
  std::vector<Rat> out(vx.size());
  for (Mask m = 0; m <= full; ++m)
    out[m] = Rat(std::popcount(vx[m]) + std::popcount(vx[full ^ m]) - total);
  return SetFunction(g.edge_ground(), std::move(out));
}

// Rank function of a graph on its edge set: r_G(X) = |V(X)|, the rank
// function of an integer-valued 2-polymatroid. Isolated vertices are
// irrelevant here.
inline SetFunction graph_rank(const Graph& g) {
  const auto index = detail::incidence_index(g);
  const auto vx = detail::vertex_set_table(g, index);
  std::vector<Rat> out(vx.size());
  for (std::size_t m = 0; m < vx.size(); ++m)
    out[m] = Rat(std::popcount(vx[m]));
  return SetFunction(g.edge_ground(), std::move(out));
}

// Rank function of the cycle matroid M(G): r(X) = |V(X)| - c(X), where c(X)
// counts the connected components of the subgraph (V(X), X).
inline SetFunction cycle_matroid(const Graph& g) {
  const auto index = detail::incidence_index(g);
  const auto vx = detail::vertex_set_table(g, index);
  const std::size_t n = g.edge_count();
  std::vector<int> parent(index.incident_count);
  const auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  std::vector<Rat> out(vx.size());
  for (Mask m = 0; m < out.size(); ++m) {
    for (std::size_t v = 0; v < parent.size(); ++v)
      parent[v] = static_cast<int>(v);
    for (std::size_t e = 0; e < n; ++e)
      if (contains(m, e))
        parent[find(index.edge_slots[e].first)] =
            find(index.edge_slots[e].second);
    int components = 0;
    for (std::size_t v = 0; v < parent.size(); ++v)
      if ((vx[m] >> v) & 1u)
        if (find(static_cast<int>(v)) == static_cast<int>(v)) ++components;
    out[m] = Rat(std::popcount(vx[m]) - components);
  }
  return SetFunction(g.edge_ground(), std::move(out));
}

}  // namespace setfn
