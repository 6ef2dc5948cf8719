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

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "setfn/graph.hpp"
#include "setfn/set_function.hpp"

namespace setfn {

// A diagnostic tied to a 1-based line of the input document.
class parse_error : public error {
 public:
  parse_error(std::size_t line, const std::string& message)
      : error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

struct DocLine {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

struct Document {
  std::vector<DocLine> lines;
  std::size_t end_line = 0;  // number of raw lines read
};

// Splits into whitespace-separated tokens, dropping blank lines and lines
// whose first non-blank character is '#'.
inline Document significant_lines(std::istream& in) {
  Document doc;
  std::string raw;
  while (std::getline(in, raw)) {
    ++doc.end_line;
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      std::size_t start = i;
      while (i < raw.size() &&
             !std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      if (i > start) tokens.push_back(raw.substr(start, i - start));
    }
    if (tokens.empty() || tokens.front().front() == '#') continue;
    doc.lines.push_back({doc.end_line, std::move(tokens)});
  }
  return doc;
}

}  // namespace detail

// Parses the "setfn v1" document format:
//   setfn v1
//   elements <label...>
//   <subset> = <value>        (one line per subset, any order, each once)
// Blank lines and '#' comment lines are ignored.
inline SetFunction parse_set_function(std::istream& in) {
  const auto doc = detail::significant_lines(in);
  const auto& lines = doc.lines;
  std::size_t next = 0;

  if (next >= lines.size())
    throw parse_error(doc.end_line + 1, "missing 'setfn v1' header");
  {
    const auto& magic = lines[next++];
    if (magic.tokens.size() != 2 || magic.tokens[0] != "setfn" ||
        magic.tokens[1] != "v1")
      throw parse_error(magic.number, "bad magic; expected 'setfn v1'");
  }

  if (next >= lines.size())
    throw parse_error(doc.end_line + 1, "missing 'elements' line");
  GroundSet ground;
  {
    const auto& el = lines[next++];
    if (el.tokens[0] != "elements")
      throw parse_error(el.number, "expected 'elements <label...>'");
    std::vector<std::string> labels(el.tokens.begin() + 1, el.tokens.end());
    try {
      ground = GroundSet(std::move(labels));
    } catch (const domain_error& e) {
      throw parse_error(el.number, e.what());
    }
  }

  std::vector<Rat> table(ground.table_size());
  std::vector<bool> seen(ground.table_size(), false);
  std::size_t covered = 0;
  while (next < lines.size()) {
    const auto& line = lines[next++];
    if (line.tokens.size() < 3 || line.tokens[1] != "=")
      throw parse_error(line.number, "expected '<subset> = <value>'");
    if (line.tokens.size() > 3)
      throw parse_error(line.number,
                        "trailing garbage '" + line.tokens[3] + "'");
    Mask m = 0;
    Rat v;
    try {
      m = ground.parse_subset(line.tokens[0]);
      v = parse_rat(line.tokens[2]);
    } catch (const domain_error& e) {
      throw parse_error(line.number, e.what());
    }
    if (seen[m])
      throw parse_error(line.number,
                        "duplicate subset " + ground.format_subset(m));
    seen[m] = true;
    table[m] = std::move(v);
    ++covered;
  }
  if (covered < table.size())
    for (std::size_t m = 0; m < table.size(); ++m)
      if (!seen[m])
        throw parse_error(
            doc.end_line + 1,
            "missing subset " + ground.format_subset(static_cast<Mask>(m)));
  return SetFunction(std::move(ground), std::move(table));
}

inline SetFunction parse_set_function(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_set_function(in);
}

// Canonical form: subsets in ascending mask order, values in lowest terms,
// no comments. parse(serialize(f)) == f.
inline std::string serialize(const SetFunction& f) {
  std::string out = "setfn v1\nelements";
  for (const auto& label : f.ground().labels()) {
    out += ' ';
    out += label;
  }
  out += '\n';
  const Mask full = f.full_mask();
  for (Mask m = 0; m <= full; ++m) {
    out += f.ground().format_subset(m);
    out += " = ";
    out += to_string(f.table()[m]);
    out += '\n';
  }
  return out;
}

// Parses the "graph v1" document format:
//   graph v1
//   vertices <label...>
//   <edge-label> = <v1> <v2>   (one line per edge; loops have v1 = v2)
inline Graph parse_graph(std::istream& in) {
  const auto doc = detail::significant_lines(in);
  const auto& lines = doc.lines;
  std::size_t next = 0;

  if (next >= lines.size())
    throw parse_error(doc.end_line + 1, "missing 'graph v1' header");
  {
    const auto& magic = lines[next++];
    if (magic.tokens.size() != 2 || magic.tokens[0] != "graph" ||
        magic.tokens[1] != "v1")
      throw parse_error(magic.number, "bad magic; expected 'graph v1'");
  }

  if (next >= lines.size())
    throw parse_error(doc.end_line + 1, "missing 'vertices' line");
  std::vector<std::string> vertices;
  Graph vertex_check;
  {
    const auto& vl = lines[next++];
    if (vl.tokens[0] != "vertices")
      throw parse_error(vl.number, "expected 'vertices <label...>'");
    vertices.assign(vl.tokens.begin() + 1, vl.tokens.end());
    try {
      vertex_check = Graph(vertices, {});
    } catch (const domain_error& e) {
      throw parse_error(vl.number, e.what());
    }
  }

  std::vector<EdgeSpec> edges;
  while (next < lines.size()) {
    const auto& line = lines[next++];
    if (line.tokens.size() != 4 || line.tokens[1] != "=")
      throw parse_error(line.number, "expected '<edge-label> = <v1> <v2>'");
    EdgeSpec spec{line.tokens[0], line.tokens[2], line.tokens[3]};
    if (!valid_label(spec.label))
      throw parse_error(line.number, "invalid edge label '" + spec.label + "'");
    for (const auto& prior : edges)
      if (prior.label == spec.label)
        throw parse_error(line.number,
                          "duplicate edge label '" + spec.label + "'");
    for (const auto& endpoint : {spec.tail, spec.head})
      if (!vertex_check.find_vertex(endpoint))
        throw parse_error(line.number, "unknown vertex '" + endpoint + "'");
    if (edges.size() == kMaxGroundSize)
      throw parse_error(line.number,
                        "graph exceeds " + std::to_string(kMaxGroundSize) +
                            " edges");
    edges.push_back(std::move(spec));
  }
  return Graph(std::move(vertices), edges);
}

inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

inline std::string serialize(const Graph& g) {
  std::string out = "graph v1\nvertices";
  for (const auto& label : g.vertex_labels()) {
    out += ' ';
    out += label;
  }
  out += '\n';
  for (const auto& e : g.edges()) {
    out += e.label;
    out += " = ";
    out += g.vertex_label(e.tail);
    out += ' ';
    out += g.vertex_label(e.head);
    out += '\n';
  }
  return out;
}

}  // namespace setfn
