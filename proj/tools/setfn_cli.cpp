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

// Command-line frontend. Exit codes: 0 = success / property holds,
// 1 = a checked property fails (witness on stderr), 2 = usage, parse or
// precondition error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "setfn/setfn.hpp"

namespace {

using namespace setfn;

SetFunction load_set_function(const std::string& path) {
  if (path == "-") return parse_set_function(std::cin);
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open '" + path + "'");
  return parse_set_function(in);
}

Graph load_graph(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open '" + path + "'");
  return parse_graph(in);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw domain_error("cannot write '" + path + "'");
  out << text;
}

Enforce enforcement(bool force) {
  return force ? Enforce::force : Enforce::require;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_classification(const SetFunction& f, const Classification& c) {
  std::cout << "elements:              " << f.size() << '\n'
            << "normalised:            " << yes_no(c.is_normalised) << '\n'
            << "symmetric:             " << yes_no(c.is_symmetric) << '\n'
            << "submodular:            " << yes_no(c.is_submodular) << '\n'
            << "increasing:            " << yes_no(c.is_increasing) << '\n'
            << "connectivity function: " << yes_no(c.is_connectivity_function)
            << '\n'
            << "polymatroid:           " << yes_no(c.is_polymatroid) << '\n'
            << "integer-valued:        " << yes_no(c.is_integer_valued) << '\n'
            << "half-integral:         " << yes_no(c.is_half_integral) << '\n'
            << "unitary:               " << yes_no(c.is_unitary) << '\n'
            << "connected:             " << yes_no(c.is_connected) << '\n';
  if (c.is_compact)
    std::cout << "compact:               " << yes_no(*c.is_compact) << '\n';
  if (c.min_k)
    std::cout << "min-k:                 " << to_string(*c.min_k) << '\n';
}

void print_witness(const CheckReport& report) {
  if (!report.holds && report.witness)
    std::cerr << "witness: " << report.witness->inequality << '\n';
}

int run_verify(const std::string& path, const std::string& kind) {
  const SetFunction f = load_set_function(path);
  const Classification c = classify(f);
  print_classification(f, c);
  if (kind == "connectivity") {
    if (c.is_connectivity_function) return 0;
    print_witness(check_connectivity_function(f));
    return 1;
  }
  if (kind == "polymatroid") {
    if (c.is_polymatroid) return 0;
    print_witness(check_polymatroid(f));
    return 1;
  }
  if (kind == "matroid") {
    const CheckReport report = matroid_check(f);
    if (report.holds) return 0;
    print_witness(report);
    return 1;
  }
  // auto: accept either recognized kind
  if (c.is_connectivity_function || c.is_polymatroid) return 0;
  print_witness(check_polymatroid(f));
  print_witness(check_connectivity_function(f));
  return 1;
}

int run_eq(const std::string& left_path, const std::string& right_path) {
  const SetFunction lhs = load_set_function(left_path);
  const SetFunction rhs = load_set_function(right_path);
  if (lhs == rhs) return 0;
  if (!(lhs.ground() == rhs.ground())) {
    std::cerr << "witness: ground sets differ\n";
    return 1;
  }
  for (Mask m = 0; m <= lhs.full_mask(); ++m)
    if (lhs.table()[m] != rhs.table()[m]) {
      const std::string at = lhs.ground().format_subset(m);
      std::cerr << "witness: f(" << at << ") = " << to_string(lhs.table()[m])
                << " != " << to_string(rhs.table()[m]) << " = g(" << at
                << ")\n";
      break;
    }
  return 1;
}

int run_lemmas(const std::string& path, std::uint64_t seed) {
  const SetFunction f = load_set_function(path);
  const Classification c = classify(f);
  if (!c.is_polymatroid && !c.is_connectivity_function) {
    std::cerr
        << "input is neither a polymatroid nor a connectivity function\n";
    return 2;
  }
  IdentityOptions opt;
  opt.seed = seed;
  std::vector<IdentityResult> results;
  const auto append = [&](std::vector<IdentityResult> more,
                          const char* battery) {
    for (auto& r : more) {
      r.name = std::string(battery) + "/" + r.name;
      results.push_back(std::move(r));
    }
  };
  if (c.is_polymatroid) {
    append(polymatroid_identities(f, opt), "polymatroid");
    if (matroid_check(f).holds) append(matroid_identities(f, opt), "matroid");
  }
  if (c.is_connectivity_function)
    append(connectivity_identities(f, opt), "connectivity");
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.holds ? "PASS  " : "FAIL  ") << r.name << '\n';
    if (!r.holds) {
      ok = false;
      if (!r.detail.empty()) std::cerr << "witness: " << r.detail << '\n';
    }
  }
  return ok ? 0 : 1;
}

int run_gen(const std::string& kind, std::size_t n, std::uint64_t seed,
            const std::string& out_path) {
  if (n > kMaxRandomGround)
    throw domain_error("gen: --n exceeds " + std::to_string(kMaxRandomGround));
  if (kind == "graph") {
    write_output(serialize(random_graph(n, seed)), out_path);
    return 0;
  }
  if (kind == "coverage") {
    write_output(serialize(random_coverage_polymatroid(n, n + 2, seed)),
                 out_path);
    return 0;
  }
  if (kind == "uniform") {
    Rng rng(seed);
    write_output(
        serialize(uniform_matroid(rng.below(n + 1), numbered_labels("x", n))),
        out_path);
    return 0;
  }
  // connectivity: rotate the source by seed
  const auto source = static_cast<ConnectivitySource>(seed % 3);
  write_output(serialize(random_connectivity(n, seed, source)), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact set functions on small ground sets: connectivity "
               "functions, polymatroids, duality, minors"};
  app.require_subcommand(1);

  // verify
  std::string verify_file, verify_as = "auto";
  auto* verify = app.add_subcommand(
      "verify", "classify a set function and check it is of the given kind");
  verify->add_option("file", verify_file, "input ('-' for stdin)")->required();
  verify->add_option("--as", verify_as, "connectivity|polymatroid|matroid|auto")
      ->check(CLI::IsMember({"connectivity", "polymatroid", "matroid", "auto"}));

  // unary transforms: input file, -o, --force
  struct Unary {
    CLI::App* cmd = nullptr;
    std::string input;
    std::string output;
    bool force = false;
  };
  const auto add_unary = [&](const std::string& name, const std::string& desc,
                             bool with_force = true) {
    auto unary = std::make_shared<Unary>();
    unary->cmd = app.add_subcommand(name, desc);
    unary->cmd->add_option("file", unary->input, "input ('-' for stdin)")
        ->required();
    unary->cmd->add_option("-o,--output", unary->output,
                           "write here instead of stdout");
    if (with_force)
      unary->cmd->add_flag("--force", unary->force,
                           "compute the raw formula even if the input fails "
                           "the hypothesis");
    return unary;
  };
  auto dual_cmd = add_unary("dual", "dual polymatroid r(E-X) + ||X|| - r(E)");
  auto compactify_cmd =
      add_unary("compactify", "compactification (the double dual)");
  auto connectivity_cmd = add_unary(
      "connectivity", "connectivity function r(X) + r(E-X) - r(E)");
  auto induce_cmd = add_unary(
      "induce", "polymatroid induced by a connectivity function");
  auto canonical_cmd = add_unary(
      "canonical",
      "compact self-dual polymatroid with this connectivity function");

  auto kdual_cmd = add_unary("kdual", "k-dual r(E-X) + k|X| - r(E)");
  std::string kdual_k;
  kdual_cmd->cmd->add_option("--k", kdual_k, "the bound k (a rational)")
      ->required();

  auto minor_cmd = add_unary("minor", "delete and/or contract subsets");
  std::string minor_delete = "{}", minor_contract = "{}";
  minor_cmd->cmd->add_option("--delete", minor_delete,
                             "subset to delete, e.g. '{a,b}'");
  minor_cmd->cmd->add_option("--contract", minor_contract,
                             "subset to contract");

  auto scale_cmd = add_unary("scale",
                             "multiply every value by a positive rational",
                             /*with_force=*/false);
  std::string scale_factor;
  scale_cmd->cmd->add_option("--factor", scale_factor, "scaling factor")
      ->required();

  // sum
  std::string sum_left, sum_right, sum_output;
  auto* sum_cmd = app.add_subcommand("sum", "pointwise sum of two functions");
  sum_cmd->add_option("file1", sum_left, "first input")->required();
  sum_cmd->add_option("file2", sum_right, "second input")->required();
  sum_cmd->add_option("-o,--output", sum_output, "write here instead of stdout");

  // eval
  std::string eval_file, eval_subset;
  auto* eval_cmd = app.add_subcommand("eval", "print the value of a subset");
  eval_cmd->add_option("file", eval_file, "input")->required();
  eval_cmd->add_option("subset", eval_subset, "subset, e.g. '{a,c}'")
      ->required();

  // eq
  std::string eq_left, eq_right;
  auto* eq_cmd =
      app.add_subcommand("eq", "exit 0 when the two functions are equal");
  eq_cmd->add_option("file1", eq_left, "first input")->required();
  eq_cmd->add_option("file2", eq_right, "second input")->required();

  // lemmas
  std::string lemmas_file;
  std::uint64_t lemmas_seed = 1;
  auto* lemmas_cmd = app.add_subcommand(
      "lemmas", "run every applicable identity against the input");
  lemmas_cmd->add_option("file", lemmas_file, "input")->required();
  lemmas_cmd->add_option("--seed", lemmas_seed,
                         "seed for sampled minor subsets on large grounds");

  // gen
  std::string gen_kind, gen_output;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen_cmd->add_option("--kind", gen_kind, "graph|coverage|uniform|connectivity")
      ->required()
      ->check(CLI::IsMember({"graph", "coverage", "uniform", "connectivity"}));
  gen_cmd->add_option("--n", gen_n, "ground size / edge count")->required();
  gen_cmd->add_option("--seed", gen_seed, "seed")->required();
  gen_cmd->add_option("-o,--output", gen_output, "write here instead of stdout");

  // fromgraph
  std::string fromgraph_file, fromgraph_what, fromgraph_output;
  bool fromgraph_strip = false;
  auto* fromgraph_cmd = app.add_subcommand(
      "fromgraph", "derive a set function from a graph file");
  fromgraph_cmd->add_option("file", fromgraph_file, "graph input ('-' for stdin)")
      ->required();
  fromgraph_cmd->add_option("--what", fromgraph_what, "lambda|rank|cycle")
      ->required()
      ->check(CLI::IsMember({"lambda", "rank", "cycle"}));
  fromgraph_cmd->add_flag("--strip-isolated", fromgraph_strip,
                          "drop isolated vertices instead of rejecting them");
  fromgraph_cmd->add_option("-o,--output", fromgraph_output,
                            "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(verify)) return run_verify(verify_file, verify_as);

    if (app.got_subcommand(dual_cmd->cmd)) {
      const auto f = load_set_function(dual_cmd->input);
      write_output(serialize(dual(f, enforcement(dual_cmd->force))),
                   dual_cmd->output);
      return 0;
    }
    if (app.got_subcommand(kdual_cmd->cmd)) {
      const auto f = load_set_function(kdual_cmd->input);
      write_output(serialize(k_dual(f, parse_rat(kdual_k),
                                    enforcement(kdual_cmd->force))),
                   kdual_cmd->output);
      return 0;
    }
    if (app.got_subcommand(compactify_cmd->cmd)) {
      const auto f = load_set_function(compactify_cmd->input);
      write_output(
          serialize(compactify(f, enforcement(compactify_cmd->force))),
          compactify_cmd->output);
      return 0;
    }
    if (app.got_subcommand(connectivity_cmd->cmd)) {
      const auto f = load_set_function(connectivity_cmd->input);
      write_output(
          serialize(connectivity_of(f, enforcement(connectivity_cmd->force))),
          connectivity_cmd->output);
      return 0;
    }
    if (app.got_subcommand(induce_cmd->cmd)) {
      const auto f = load_set_function(induce_cmd->input);
      write_output(
          serialize(induced_polymatroid(f, enforcement(induce_cmd->force))),
          induce_cmd->output);
      return 0;
    }
    if (app.got_subcommand(canonical_cmd->cmd)) {
      const auto f = load_set_function(canonical_cmd->input);
      write_output(
          serialize(canonical_self_dual(f, enforcement(canonical_cmd->force))),
          canonical_cmd->output);
      return 0;
    }
    if (app.got_subcommand(minor_cmd->cmd)) {
      const auto f = load_set_function(minor_cmd->input);
      const Mask to_delete = f.ground().parse_subset(minor_delete);
      const Mask to_contract = f.ground().parse_subset(minor_contract);
      if ((to_delete & to_contract) != 0)
        throw domain_error("minor: delete and contract subsets overlap");
      const Enforce enforce = enforcement(minor_cmd->force);
      SetFunction contracted = contraction(f, to_contract, enforce);
      const Mask shifted =
          contracted.ground().mask_of(f.ground().labels_of(to_delete));
      write_output(serialize(deletion(contracted, shifted, enforce)),
                   minor_cmd->output);
      return 0;
    }
    if (app.got_subcommand(scale_cmd->cmd)) {
      const auto f = load_set_function(scale_cmd->input);
      write_output(serialize(scale(f, parse_rat(scale_factor))),
                   scale_cmd->output);
      return 0;
    }
    if (app.got_subcommand(sum_cmd)) {
      const auto f = load_set_function(sum_left);
      const auto g = load_set_function(sum_right);
      write_output(serialize(sum(f, g)), sum_output);
      return 0;
    }
    if (app.got_subcommand(eval_cmd)) {
      const auto f = load_set_function(eval_file);
      std::cout << to_string(f.table()[f.ground().parse_subset(eval_subset)])
                << '\n';
      return 0;
    }
    if (app.got_subcommand(eq_cmd)) return run_eq(eq_left, eq_right);
    if (app.got_subcommand(lemmas_cmd))
      return run_lemmas(lemmas_file, lemmas_seed);
    if (app.got_subcommand(gen_cmd))
      return run_gen(gen_kind, gen_n, gen_seed, gen_output);
    if (app.got_subcommand(fromgraph_cmd)) {
      const Graph g = load_graph(fromgraph_file);
      SetFunction out = SetFunction::zero(GroundSet{});
      if (fromgraph_what == "lambda")
        out = graph_connectivity(g, fromgraph_strip ? IsolatedVertices::strip
                                                    : IsolatedVertices::reject);
      else if (fromgraph_what == "rank")
        out = graph_rank(g);
      else
        out = cycle_matroid(g);
      write_output(serialize(out), fromgraph_output);
      return 0;
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
