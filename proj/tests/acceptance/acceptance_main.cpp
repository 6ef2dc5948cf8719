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

// End-to-end acceptance: seeded random corpora, one line per criterion,
// exact rational equality everywhere (zero tolerance). Exits nonzero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "setfn/setfn.hpp"
#include "support/subprocess.hpp"

namespace {

using namespace setfn;

constexpr std::uint64_t kRootSeed = 20260809;

struct Outcome {
  bool pass = true;
  long done = 0;
  long total = 0;
  std::string note;

  void expect(bool ok, const std::string& context) {
    ++total;
    if (ok) {
      ++done;
    } else if (pass) {
      pass = false;
      note = context;
    }
  }
};

// Shared polymatroid corpus: 1000 instances, sizes 0..10, rotating
// coverage / graph-rank / matroid sources, seeds kRootSeed + i.
SetFunction corpus_polymatroid(std::size_t i) {
  const std::size_t n = i % 11;
  const std::uint64_t seed = kRootSeed + i;
  switch (i % 3) {
    case 0:
      return random_coverage_polymatroid(n, n + 2, seed);
    case 1:
      return graph_rank(random_graph(n, seed));
    default:
      return random_matroid(n, seed);
  }
}

// Shared connectivity corpus: 1000 instances over all three sources.
SetFunction corpus_connectivity(std::size_t i) {
  return random_connectivity(i % 11, kRootSeed + 5000 + i,
                             static_cast<ConnectivitySource>(i % 3));
}

SetFunction fix_u23() { return uniform_matroid(2, {"a", "b", "c"}); }
SetFunction fix_u13() { return uniform_matroid(1, {"a", "b", "c"}); }
SetFunction fix_loop() { return uniform_matroid(0, {"a"}); }
SetFunction fix_coloop() { return uniform_matroid(1, {"a"}); }
SetFunction fix_lu13() {
  return connectivity_of(uniform_matroid(1, {"a", "b", "c"}));
}

Outcome criterion_dual_is_polymatroid() {
  Outcome out;
  for (std::size_t i = 0; i < 1000; ++i) {
    const auto r = corpus_polymatroid(i);
    out.expect(classify(dual(r, Enforce::force)).is_polymatroid,
               "instance " + std::to_string(i));
  }
  return out;
}

Outcome criterion_dual_laws() {
  Outcome out;
  for (std::size_t i = 0; i < 1000; ++i) {
    const auto r = corpus_polymatroid(i);
    const auto d = dual(r, Enforce::force);
    const std::string at = "instance " + std::to_string(i);
    out.expect(connectivity_of(d, Enforce::force) ==
                   connectivity_of(r, Enforce::force),
               at + ": connectivity changed under dual");
    out.expect(compact_elements(d, Enforce::force) == r.full_mask(),
               at + ": dual is not compact");
    out.expect(dual(d, Enforce::force) == compactify(r, Enforce::force),
               at + ": double dual differs from compactification");
  }
  return out;
}

Outcome criterion_compactification() {
  Outcome out;
  for (std::size_t i = 0; i < 1000; ++i) {
    const auto r = corpus_polymatroid(i);
    const auto flat = compactify(r, Enforce::force);
    const std::string at = "instance " + std::to_string(i);
    out.expect(classify(flat).is_polymatroid,
               at + ": compactification is not a polymatroid");
    out.expect(connectivity_of(flat, Enforce::force) ==
                   connectivity_of(r, Enforce::force),
               at + ": compactification changed the connectivity");
  }
  return out;
}

Outcome criterion_contract_compact() {
  Outcome out;
  for (std::size_t i = 0; i < 1000; ++i) {
    if (i % 11 > 7) continue;  // exhaustive minors need small grounds
    const auto compact = dual(corpus_polymatroid(i), Enforce::force);
    bool all = true;
    for (Mask a = 0; a <= compact.full_mask(); ++a) {
      const auto minor = contraction(compact, a, Enforce::force);
      if (compact_elements(minor, Enforce::force) != minor.full_mask()) {
        all = false;
        break;
      }
    }
    out.expect(all, "instance " + std::to_string(i));
  }
  return out;
}

Outcome criterion_minor_dual_exchange() {
  Outcome out;
  for (std::size_t i = 0; i < 1000; ++i) {
    if (i % 11 > 7) continue;
    const auto r = corpus_polymatroid(i);
    bool all = true;
    for (Mask a = 0; a <= r.full_mask(); ++a)
      if (!minor_dual_identity_check(r, a, Enforce::force).holds) {
        all = false;
        break;
      }
    out.expect(all, "instance " + std::to_string(i));
  }
  return out;
}

Outcome criterion_k_duality() {
  Outcome out;
  for (std::size_t i = 0; i < 500; ++i) {
    const unsigned k = 1 + static_cast<unsigned>(i % 3);
    const auto r = random_k_polymatroid(i % 8, k, kRootSeed + 9000 + i);
    const Rat kq(k);
    const auto kd = k_dual(r, kq, Enforce::force);
    const std::string at =
        "instance " + std::to_string(i) + " (k=" + std::to_string(k) + ")";
    out.expect(k_dual(kd, kq, Enforce::force) == r,
               at + ": k-dual is not an involution");
    bool exchange = true;
    for (Mask x = 0; x <= r.full_mask(); ++x)
      if (!(k_dual(deletion(r, x, Enforce::force), kq, Enforce::force) ==
            contraction(kd, x, Enforce::force))) {
        exchange = false;
        break;
      }
    out.expect(exchange, at + ": deletion/contraction exchange failed");
  }
  return out;
}

Outcome criterion_induced_polymatroid() {
  Outcome out;
  for (std::size_t i = 0; i < 1000; ++i) {
    const auto lam = corpus_connectivity(i);
    const std::string at = "instance " + std::to_string(i);
    const auto induced = induced_polymatroid(lam, Enforce::force);
    out.expect(classify(induced).is_polymatroid,
               at + ": induced is not a polymatroid");
    out.expect(compact_elements(induced, Enforce::force) == lam.full_mask(),
               at + ": induced is not compact");
    out.expect(dual(induced, Enforce::force) == induced,
               at + ": induced is not self-dual");
    out.expect(connectivity_of(induced, Enforce::force) ==
                   scale(lam, Rat(2)),
               at + ": induced connectivity is not doubled");
    const auto canonical = canonical_self_dual(lam, Enforce::force);
    out.expect(connectivity_of(canonical, Enforce::force) == lam,
               at + ": canonical connectivity differs");
    if (check_integer_valued(lam).holds) {
      bool half = true;
      for (const auto& v : canonical.table())
        if (!is_half_integer(v)) half = false;
      out.expect(half, at + ": canonical is not half-integral");
    }
  }
  return out;
}

Outcome criterion_loopless_rank_sum() {
  Outcome out;
  for (std::size_t i = 0; i < 200; ++i) {
    const auto r = random_matroid(i % 9, kRootSeed + 12000 + i,
                                  /*loopless=*/true);
    const auto star = k_dual(r, Rat(1), Enforce::force);
    const auto total = sum(r, star);
    const auto lam = connectivity_of(r, Enforce::force);
    bool all = true;
    for (Mask x = 0; x <= r.full_mask(); ++x)
      if (total.table()[x] != lam.table()[x] + set_size(x)) {
        all = false;
        break;
      }
    out.expect(all, "instance " + std::to_string(i));
  }
  return out;
}

Outcome criterion_norm_inequalities() {
  Outcome out;
  for (std::size_t i = 0; i < 1000; ++i) {
    if (i % 11 > 8) continue;
    const auto r = corpus_polymatroid(i);
    const auto norms = detail::norm_table(r);
    bool all = true;
    for (Mask y = 0; y <= r.full_mask() && all; ++y)
      for (Mask x = y;; x = (x - 1) & y) {
        if (r.table()[y] - r.table()[x] > norms[y & ~x]) {
          all = false;
          break;
        }
        if (x == 0) break;
      }
    out.expect(all, "polymatroid instance " + std::to_string(i));
  }
  for (std::size_t i = 0; i < 1000; ++i) {
    if (i % 11 > 8) continue;
    const auto lam = corpus_connectivity(i);
    const auto norms = detail::norm_table(lam);
    bool all = true;
    for (Mask z = 0; z <= lam.full_mask(); ++z)
      if (lam.table()[z] > norms[z]) all = false;
    for (Mask b = 0; b <= lam.full_mask() && all; ++b)
      for (Mask a = b;; a = (a - 1) & b) {
        if (lam.table()[b] - lam.table()[a] > norms[b & ~a]) {
          all = false;
          break;
        }
        if (a == 0) break;
      }
    out.expect(all, "connectivity instance " + std::to_string(i));
  }
  return out;
}

Outcome criterion_submodularity_oracle() {
  Outcome out;
  for (std::size_t i = 0; i < 1000; ++i) {
    const auto f = random_set_function(i % 9, kRootSeed + 15000 + i);
    out.expect(check_submodular_fast(f).holds ==
                   check_submodular_naive(f).holds,
               "instance " + std::to_string(i));
  }
  return out;
}

// True when both endpoints of e touch at least one other edge.
bool endpoints_shared(const Graph& g, std::size_t e) {
  for (const std::size_t v : {g.edge(e).tail, g.edge(e).head}) {
    bool other = false;
    for (std::size_t f = 0; f < g.edge_count(); ++f)
      if (f != e && (g.edge(f).tail == v || g.edge(f).head == v)) other = true;
    if (!other) return false;
  }
  return true;
}

Outcome criterion_graph_facts() {
  Outcome out;
  for (std::size_t i = 0; i < 200; ++i) {
    const Graph g = random_graph(i % 9, kRootSeed + 18000 + i);
    const std::string at = "graph " + std::to_string(i);
    const auto lam = graph_connectivity(g);
    out.expect(check_normalised(lam).holds && check_symmetric(lam).holds &&
                   check_submodular_fast(lam).holds,
               at + ": lambda_G fails the connectivity battery");
    bool edge_values = true;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const bool expected = !g.is_loop(e) && endpoints_shared(g, e);
      if ((lam.table()[bit(e)] == 2) != expected) edge_values = false;
    }
    out.expect(edge_values, at + ": lambda_G({e}) = 2 criterion failed");

    const auto rank = graph_rank(g);
    const auto c = classify(rank);
    out.expect(c.is_polymatroid && c.is_integer_valued &&
                   c.min_k.has_value() && *c.min_k <= 2,
               at + ": graph rank is not an integer 2-polymatroid");

    // pair subsets over the free matroid on the vertices reproduce the rank
    std::vector<std::pair<std::string, std::vector<std::string>>> members;
    for (const auto& e : g.edges()) {
      std::vector<std::string> pair{g.vertex_label(e.tail)};
      if (e.head != e.tail) pair.push_back(g.vertex_label(e.head));
      members.emplace_back(e.label, pair);
    }
    const auto built = polymatroid_from_subsets(
        free_matroid(g.vertex_labels()),
        SubsetFamily(GroundSet(g.vertex_labels()), members), Enforce::force);
    out.expect(built.table() == rank.table(),
               at + ": subset construction differs from the graph rank");
  }
  return out;
}

Outcome criterion_known_fixtures() {
  Outcome out;
  out.expect(dual(fix_u23()) == fix_u13(), "dual(U_{2,3}) != U_{1,3}");
  out.expect(dual(fix_loop()) == fix_loop(), "dual of a loop moved");
  out.expect(k_dual(fix_loop(), Rat(1)) == fix_coloop(),
             "1-dual of a loop is not a coloop");
  out.expect(compactify(fix_coloop()) == fix_loop(),
             "compactified coloop is not a loop");
  out.expect(dual(dual(fix_coloop())) == fix_loop(),
             "double dual of a coloop");
  out.expect(!(dual(dual(fix_coloop())) == fix_coloop()),
             "duality unexpectedly an involution on a coloop");
  const auto induced = induced_polymatroid(fix_lu13());
  const std::vector<Rat> expected{0, 2, 2, 3, 2, 3, 3, 3};
  out.expect(induced.table() == expected, "induced table mismatch");
  return out;
}

Outcome criterion_io_and_cli() {
  Outcome out;
  for (std::size_t i = 0; i < 1000; ++i) {
    const auto r = corpus_polymatroid(i);
    out.expect(parse_set_function(serialize(r)) == r,
               "round trip failed on polymatroid " + std::to_string(i));
    const auto lam = corpus_connectivity(i);
    out.expect(parse_set_function(serialize(lam)) == lam,
               "round trip failed on connectivity " + std::to_string(i));
    const auto f = random_set_function(i % 9, kRootSeed + 15000 + i);
    out.expect(parse_set_function(serialize(f)) == f,
               "round trip failed on set function " + std::to_string(i));
  }

  const testsupport::Scratch scratch;
  const std::string cli = SETFN_CLI_PATH;
  const auto u23 = scratch.write("u23.setfn", serialize(fix_u23())).string();
  const auto lu13 = scratch.write("lu13.setfn", serialize(fix_lu13())).string();
  const auto run = [&](const std::string& args) {
    return testsupport::run(scratch, cli + " " + args);
  };
  out.expect(run("verify " + u23 + " --as polymatroid").exit_code == 0,
             "verify polymatroid exit code");
  out.expect(run("verify " + lu13 + " --as polymatroid").exit_code == 1,
             "verify wrong kind exit code");
  out.expect(run("verify " + lu13 + " --as connectivity").exit_code == 0,
             "verify connectivity exit code");
  out.expect(run("eq " + u23 + " " + u23).exit_code == 0, "eq equal exit code");
  out.expect(run("eq " + u23 + " " + lu13).exit_code == 1,
             "eq unequal exit code");
  out.expect(run("lemmas " + u23).exit_code == 0, "lemmas polymatroid");
  out.expect(run("lemmas " + lu13).exit_code == 0, "lemmas connectivity");
  out.expect(run("dual " + lu13).exit_code == 2, "precondition exit code");
  out.expect(run("dual " + lu13 + " --force").exit_code == 0, "--force");
  const auto broken = scratch.write("broken.setfn", "setfn v1\nelements a\n");
  out.expect(run("verify " + broken.string()).exit_code == 2,
             "parse error exit code");
  const auto dd = (scratch.dir() / "dd.setfn").string();
  const auto flat = (scratch.dir() / "flat.setfn").string();
  out.expect(run("dual " + u23 + " -o " + dd).exit_code == 0, "dual -o");
  out.expect(run("dual " + dd + " -o " + dd).exit_code == 0, "dual twice");
  out.expect(run("compactify " + u23 + " -o " + flat).exit_code == 0,
             "compactify -o");
  out.expect(run("eq " + dd + " " + flat).exit_code == 0,
             "double dual vs compactification via the CLI");
  return out;
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*run)();
};

constexpr Criterion kCriteria[] = {
    {1, "dual of every random polymatroid is a polymatroid",
     criterion_dual_is_polymatroid},
    {2, "dual laws: connectivity kept, dual compact, double dual = "
        "compactification",
     criterion_dual_laws},
    {3, "compactification is a polymatroid with the same connectivity",
     criterion_compactification},
    {4, "contracting a compact polymatroid stays compact (exhaustive A)",
     criterion_contract_compact},
    {5, "dual(contract(r,A)) = compactify(delete(dual(r),A)) (exhaustive A)",
     criterion_minor_dual_exchange},
    {6, "k-duality: involution and deletion/contraction exchange, k in "
        "{1,2,3}",
     criterion_k_duality},
    {7, "induced polymatroid: compact, self-dual, doubled connectivity; "
        "canonical restores lambda",
     criterion_induced_polymatroid},
    {8, "loopless matroids: r + r* = lambda + |X|",
     criterion_loopless_rank_sum},
    {9, "norm difference bounds for nested subsets",
     criterion_norm_inequalities},
    {10, "fast and naive submodularity checks agree",
     criterion_submodularity_oracle},
    {11, "graph facts: lambda_G battery, singleton values, 2-polymatroid "
         "rank, subset construction",
     criterion_graph_facts},
    {12, "known-value fixtures", criterion_known_fixtures},
    {13, "serialize/parse round trip and CLI exit-code contract",
     criterion_io_and_cli},
};

}  // namespace

int main() {
  bool all_pass = true;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& criterion : kCriteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const Outcome outcome = criterion.run();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    all_pass = all_pass && outcome.pass;
    std::printf("%s %2d  %s (%ld/%ld)\n", outcome.pass ? "PASS" : "FAIL",
                criterion.id, criterion.title, outcome.done, outcome.total);
    if (!outcome.pass)
      std::fprintf(stderr, "criterion %d first failure: %s\n", criterion.id,
                   outcome.note.c_str());
    std::fprintf(stderr, "criterion %d took %ld ms\n", criterion.id, ms);
  }
  const auto total_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  std::fprintf(stderr, "total %ld ms\n", total_ms);
  return all_pass ? 0 : 1;
}
