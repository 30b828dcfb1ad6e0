#include <cstddef>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fstack/automata.hpp"
#include "fstack/config.hpp"
#include "fstack/cprs.hpp"
#include "fstack/diagrams.hpp"
#include "fstack/errors.hpp"
#include "fstack/flow.hpp"
#include "fstack/normal_form.hpp"
#include "fstack/oracle.hpp"
#include "fstack/ordering.hpp"
#include "fstack/verify.hpp"
#include "fstack/word.hpp"

namespace {

using nlohmann::json;
using namespace fstack;

constexpr int exit_ok = 0;
constexpr int exit_domain_error = 1;
constexpr int exit_verification_failure = 2;

Gen parse_gen(const std::string& s) {
  if (s == "x") return Gen::x;
  if (s == "X" || s == "x^-1") return Gen::X;
  if (s == "y") return Gen::y;
  if (s == "Y" || s == "y^-1") return Gen::Y;
  throw std::invalid_argument("not a generator: " + s);
}

std::string rule_name(DerivationStep::Rule r) {
  switch (r) {
    case DerivationStep::Rule::free_reduction:
      return "free reduction";
    case DerivationStep::Rule::y_rule:
      return "y-rule";
    case DerivationStep::Rule::y_inv_rule:
      return "y^-1-rule";
  }
  return "?";
}

std::string int_str(const Int& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

/// Builds the edge (normal form of `word`, `gen`); the source word is
/// normalized first so any word over A names a vertex.
Edge edge_of(const std::string& word, const std::string& gen) {
  return Edge{normalize_by_multiplication(parse_word(word)), parse_gen(gen)};
}

int cmd_nf(const std::string& word, bool trace, bool as_json) {
  const auto [nf, derivation] = sigma_normalize(parse_word(word));
  if (as_json) {
    json steps = json::array();
    for (const DerivationStep& s : derivation.steps) {
      steps.push_back({{"rule", rule_name(s.rule)},
                       {"size", int_str(s.size)},
                       {"position", s.position},
                       {"before", print_word(s.before)},
                       {"after", print_word(s.after)}});
    }
    json out{{"input", word}, {"normal_form", nf.str()}};
    if (trace) out["steps"] = steps;
    std::cout << out.dump() << "\n";
    return exit_ok;
  }
  if (trace) {
    std::size_t k = 0;
    for (const DerivationStep& s : derivation.steps) {
      std::cout << ++k << ". " << rule_name(s.rule);
      if (s.rule != DerivationStep::Rule::free_reduction) std::cout << " size " << s.size;
      std::cout << " at " << s.position << ": " << print_word(s.before) << " -> "
                << print_word(s.after) << "\n";
    }
  }
  std::cout << nf.str() << "\n";
  return exit_ok;
}

int cmd_solve(const std::string& w1, const std::string& w2, bool as_json) {
  const NormalForm a = normalize_by_multiplication(parse_word(w1));
  const NormalForm b = normalize_by_multiplication(parse_word(w2));
  const bool equal = a == b;
  if (as_json) {
    std::cout << json{{"lhs", a.str()}, {"rhs", b.str()}, {"verdict", equal ? "equal" : "distinct"}}
                     .dump()
              << "\n";
  } else {
    std::cout << (equal ? "equal" : "distinct") << "\n";
  }
  return exit_ok;
}

int cmd_flow(const std::string& word, const std::string& gen, bool as_json) {
  const Edge e = edge_of(word, gen);
  const DirectedPath image = phi(e);
  const bool endpoints_ok = image.start == e.source && image.target() == e.target();
  if (as_json) {
    std::cout << json{{"source", e.source.str()},
                      {"label", gen_name(e.label)},
                      {"in_tree", e.in_tree()},
                      {"phi", print_word(image.label)},
                      {"endpoints_ok", endpoints_ok}}
                     .dump()
              << "\n";
  } else {
    std::cout << "phi = " << print_word(image.label) << "\n";
    std::cout << "endpoints " << (endpoints_ok ? "ok" : "MISMATCH") << "\n";
  }
  return endpoints_ok ? exit_ok : exit_verification_failure;
}

int cmd_flow_iterate(const std::string& start, const std::string& label, bool as_json) {
  const DirectedPath p{normalize_by_multiplication(parse_word(start)), parse_word(label)};
  const FlowTrace trace = flow_to_tree(p);
  if (as_json) {
    json iters = json::array();
    for (const DirectedPath& q : trace.iterations) iters.push_back(print_word(q.label));
    std::cout << json{{"start", p.start.str()},
                      {"iterations", iters},
                      {"terminated", trace.terminated},
                      {"n_p", trace.n_p()}}
                     .dump()
              << "\n";
  } else {
    for (std::size_t k = 0; k < trace.iterations.size(); ++k) {
      std::cout << k << ": " << print_word(trace.iterations[k].label) << "\n";
    }
    if (trace.terminated) {
      std::cout << "reached the tree after " << trace.n_p() << " iterations\n";
    } else {
      std::cout << "iteration budget exhausted\n";
    }
  }
  return trace.terminated ? exit_ok : exit_verification_failure;
}

int cmd_weight(const std::string& word, const std::string& gen, bool as_json) {
  const Edge e = edge_of(word, gen);
  const SizeSequence sigma = size_sequence(e);
  const Int w = weight(e);
  if (as_json) {
    json sizes = json::array();
    for (const Int& s : sigma) sizes.push_back(int_str(s));
    std::cout << json{{"source", e.source.str()},
                      {"label", gen_name(e.label)},
                      {"sigma", sizes},
                      {"weight", int_str(w)}}
                     .dump()
              << "\n";
  } else {
    std::cout << "sigma = " << print_sizes(sigma) << "\n";
    std::cout << "weight = " << w << "\n";
  }
  return exit_ok;
}

int cmd_rewrite(const std::string& word, bool trace, bool as_json) {
  Word cur = parse_word(word);
  const std::size_t budget = config::max_rewrite_steps();
  json steps = json::array();
  std::size_t k = 0;
  while (auto step = rewrite_once(cur)) {
    if (++k > budget) throw resource_limit_error("prefix rewriting exceeded the step budget");
    const Word prefix(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(step->split));
    if (trace && !as_json) {
      std::cout << k << ". " << step->rule_id << " after prefix \"" << print_word(prefix)
                << "\": " << print_word(cur) << " -> " << print_word(step->result) << "\n";
    }
    if (trace && as_json) {
      steps.push_back({{"rule", step->rule_id},
                       {"prefix", print_word(prefix)},
                       {"before", print_word(cur)},
                       {"after", print_word(step->result)}});
    }
    cur = std::move(step->result);
  }
  if (as_json) {
    json out{{"input", word}, {"irreducible", print_word(cur)}, {"steps_taken", k}};
    if (trace) out["steps"] = steps;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << print_word(cur) << "\n";
  }
  return exit_ok;
}

int cmd_fsa_export(const std::string& which, const std::string& out_path, bool as_json) {
  const Automaton* dfa = nullptr;
  if (which == "nf") {
    dfa = &nf_automaton();
  } else if (which == "graphphi") {
    dfa = &graph_phi_automaton();
  } else {
    throw std::invalid_argument("unknown automaton (expected nf or graphphi): " + which);
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << export_table(*dfa);
  if (!out.flush()) throw std::invalid_argument("short write to " + out_path);
  if (as_json) {
    std::cout << json{{"which", which}, {"path", out_path}, {"states", dfa->num_states}}.dump()
              << "\n";
  } else {
    std::cout << "wrote " << out_path << " (" << dfa->num_states << " states)\n";
  }
  return exit_ok;
}

int cmd_diagram(const std::string& word, const std::string& gen, const std::string& format,
                bool stats, bool as_json) {
  const Edge e = edge_of(word, gen);
  const BoxDiagram d = box_diagram(e);
  const CellComplex complex = fill(d);
  SizeSequence sizes;
  for (const Box& b : d.boxes) sizes.push_back(b.size);
  if (as_json) {
    json crossings = json::array();
    for (const Box& b : d.boxes) crossings.push_back(b.crossing_sign);
    json out{{"source", e.source.str()},
             {"label", gen_name(e.label)},
             {"sizes", print_sizes(sizes)},
             {"crossings", crossings},
             {"cells", complex.cells.size()},
             {"edges", complex.edges.size()},
             {"vertices", complex.num_vertices}};
    if (format == "dot") out["dot"] = complex.to_dot();
    std::cout << out.dump() << "\n";
    return exit_ok;
  }
  if (format == "dot") {
    std::cout << complex.to_dot();
  }
  if (stats || format != "dot") {
    std::cout << "sizes = " << print_sizes(sizes) << "\n";
    std::cout << "cells = " << complex.cells.size() << "\n";
  }
  return exit_ok;
}

int cmd_oracle_eval(const std::string& word, bool as_json) {
  const oracle::PLMap m = oracle::evaluate(parse_word(word));
  if (as_json) {
    json pts = json::array();
    for (const auto& [t, v] : m.breakpoints()) pts.push_back({t.str(), v.str()});
    std::cout << json{{"input", word}, {"breakpoints", pts}, {"identity", m.is_identity()}}.dump()
              << "\n";
    return exit_ok;
  }
  bool first = true;
  for (const auto& [t, v] : m.breakpoints()) {
    std::cout << (first ? "" : " ") << "(" << t.str() << ", " << v.str() << ")";
    first = false;
  }
  std::cout << "\n";
  return exit_ok;
}

int cmd_verify(const std::string& suite, std::size_t max_len, bool serial, bool as_json) {
  std::vector<std::string> todo;
  if (suite == "all") {
    todo = verify::suite_names();
  } else {
    todo.push_back(suite);
  }
  bool all_passed = true;
  json rows = json::array();
  for (const std::string& name : todo) {
    const verify::SuiteResult r = verify::run_suite(name, max_len, !serial);
    all_passed = all_passed && r.passed;
    if (as_json) {
      rows.push_back({{"suite", r.name},
                      {"passed", r.passed},
                      {"checked", r.checked},
                      {"failures", r.failures},
                      {"details", r.details}});
    } else {
      std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name << " (" << r.details << ")\n";
    }
  }
  if (as_json) std::cout << rows.dump() << "\n";
  return all_passed ? exit_ok : exit_verification_failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Executable structure of Thompson's group F: normal forms, flow, "
               "prefix rewriting, automata, diagrams"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");

  std::string word;
  std::string word2;
  std::string gen;
  bool trace = false;

  CLI::App* nf = app.add_subcommand("nf", "normal form of a word");
  nf->add_option("word", word, "word over x, x^-1 (X), y, y^-1 (Y)")->required();
  nf->add_flag("--trace", trace, "print each rewriting step");

  CLI::App* solve = app.add_subcommand("solve", "decide whether two words are equal in F");
  solve->add_option("lhs", word, "first word")->required();
  solve->add_option("rhs", word2, "second word");

  CLI::App* flow_cmd = app.add_subcommand("flow", "flow image of an edge");
  flow_cmd->add_option("word", word, "source vertex (any word; normalized first)")->required();
  flow_cmd->add_option("gen", gen, "edge label: x, x^-1, y or y^-1")->required();

  CLI::App* flow_iter = app.add_subcommand("flow-iterate", "iterate the flow on a path");
  flow_iter->add_option("start", word, "start vertex (any word; normalized first)")->required();
  flow_iter->add_option("label", word2, "path label")->required();

  CLI::App* weight_cmd = app.add_subcommand("weight", "size sequence and weight of an edge");
  weight_cmd->add_option("word", word, "source vertex")->required();
  weight_cmd->add_option("gen", gen, "edge label")->required();

  CLI::App* rewrite_cmd = app.add_subcommand("rewrite", "prefix-rewrite a word to irreducible");
  rewrite_cmd->add_option("word", word, "input word")->required();
  rewrite_cmd->add_flag("--trace", trace, "print each step with rule id and guard prefix");

  CLI::App* fsa = app.add_subcommand("fsa", "finite-state automata");
  CLI::App* fsa_export = fsa->add_subcommand("export", "write a transition table");
  std::string which = "nf";
  std::string out_path;
  fsa_export->add_option("--which", which, "nf or graphphi")->required();
  fsa_export->add_option("--out", out_path, "output path")->required();

  CLI::App* diagram_cmd = app.add_subcommand("diagram", "filled box diagram of a y-edge");
  std::string format = "stats";
  bool stats = false;
  diagram_cmd->add_option("word", word, "source vertex")->required();
  diagram_cmd->add_option("gen", gen, "edge label (y or y^-1)")->required();
  diagram_cmd->add_option("--format", format, "dot for the 1-skeleton");
  diagram_cmd->add_flag("--stats", stats, "print box sizes and cell count");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "piecewise-linear-map oracle");
  CLI::App* oracle_eval = oracle_cmd->add_subcommand("eval", "breakpoints of a word's map");
  oracle_eval->add_option("word", word, "input word")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
  std::string suite;
  std::size_t max_len = 0;
  bool serial = false;
  verify_cmd->add_option("--suite", suite, "suite slug, or all")->required();
  verify_cmd->add_option("--max-len", max_len, "length bound (0 = acceptance scale)");
  verify_cmd->add_flag("--serial", serial, "disable OpenMP fan-out");

  // allow `fstack <cmd> --json` as well as `fstack --json <cmd>`
  for (CLI::App* sub : {nf, solve, flow_cmd, flow_iter, weight_cmd, rewrite_cmd, fsa,
                        fsa_export, diagram_cmd, oracle_cmd, oracle_eval, verify_cmd}) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (nf->parsed()) return cmd_nf(word, trace, as_json);
    if (solve->parsed()) return cmd_solve(word, word2, as_json);
    if (flow_cmd->parsed()) return cmd_flow(word, gen, as_json);
    if (flow_iter->parsed()) return cmd_flow_iterate(word, word2, as_json);
    if (weight_cmd->parsed()) return cmd_weight(word, gen, as_json);
    if (rewrite_cmd->parsed()) return cmd_rewrite(word, trace, as_json);
    if (fsa->parsed() && fsa_export->parsed()) return cmd_fsa_export(which, out_path, as_json);
    if (fsa->parsed()) throw std::invalid_argument("fsa requires the export subcommand");
    if (diagram_cmd->parsed()) return cmd_diagram(word, gen, format, stats, as_json);
    if (oracle_cmd->parsed() && oracle_eval->parsed()) return cmd_oracle_eval(word, as_json);
    if (oracle_cmd->parsed()) throw std::invalid_argument("oracle requires the eval subcommand");
    if (verify_cmd->parsed()) return cmd_verify(suite, max_len, serial, as_json);
  } catch (const resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_domain_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_domain_error;
  }
  std::cerr << "error: no subcommand\n";
  return exit_domain_error;
}
