// Copyright 2026 The monocirc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "monocirc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "monocirc/circuit.hpp"
#include "monocirc/clique.hpp"
#include "monocirc/critique.hpp"
#include "monocirc/error.hpp"
#include "monocirc/eval.hpp"
#include "monocirc/formula.hpp"
#include "monocirc/transforms.hpp"

namespace monocirc::cli {

namespace {

struct CommandConfig {
  std::string subcommand;
  std::vector<std::string> exprs;
  std::vector<std::string> files;
  std::optional<std::uint32_t> m;
  std::optional<std::uint32_t> s;
  std::optional<std::uint32_t> pivot;
  std::string assign;
  std::uint32_t cap_table = kDefaultTableCap;
  std::uint64_t cap_sop = kDefaultSopCap;
  unsigned jobs = 1;
  std::uint64_t seed = 0x5eed;
  std::uint64_t samples = 1u << 16;
  bool no_sharing = false;
  bool random_equiv = false;
  bool rails = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A command input is either a circuit (from formula text or the node format)
// or an SOP file.
struct Input {
  std::optional<Circuit> circuit;
  std::optional<SopFormula> sop;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_node_format(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line.substr(first, 4) == "OUT ") return true;
    pos = end + 1;
  }
  return false;
}

Input load_text(const std::string& text, Sharing sharing) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text.compare(first, 4, "SOP ") == 0) {
    return {std::nullopt, deserialize_sop(std::string_view(text).substr(first))};
  }
  if (looks_like_node_format(text)) return {deserialize(text), std::nullopt};
  return {parse_formula(text, sharing), std::nullopt};
}

std::vector<Input> load_inputs(const CommandConfig& cfg) {
  const Sharing sharing = cfg.no_sharing ? Sharing::Off : Sharing::On;
  std::vector<Input> inputs;
  for (const auto& e : cfg.exprs) inputs.push_back({parse_formula(e, sharing), std::nullopt});
  for (const auto& f : cfg.files) inputs.push_back(load_text(read_file(f), sharing));
  return inputs;
}

Input single_input(const CommandConfig& cfg) {
  auto inputs = load_inputs(cfg);
  if (inputs.size() != 1) {
    throw UsageError("'" + cfg.subcommand + "' needs exactly one input (--expr or --file), got " +
                     std::to_string(inputs.size()));
  }
  return std::move(inputs.front());
}

Circuit single_circuit(const CommandConfig& cfg) {
  Input in = single_input(cfg);
  if (!in.circuit) throw UsageError("'" + cfg.subcommand + "' needs a circuit or formula, not an SOP");
  return std::move(*in.circuit);
}

DualRailCircuit to_rails(const CommandConfig& cfg, const Circuit& c) {
  if (cfg.rails) {
    if (c.input_arity() % 2 != 0) throw UsageError("--rails needs an even input count");
    return DualRailCircuit(c, c.input_arity() / 2);
  }
  return split_negations(to_standard_form(c));
}

// SOP of the single input: expanded from a circuit, or read directly.
SopFormula single_sop(const CommandConfig& cfg) {
  Input in = single_input(cfg);
  if (in.sop) return std::move(*in.sop);
  return sop_expand(to_rails(cfg, *in.circuit), cfg.cap_sop);
}

CliqueParams clique_params(const CommandConfig& cfg) {
  if (!cfg.m || !cfg.s) throw UsageError("'" + cfg.subcommand + "' needs --m and --s");
  return CliqueParams(*cfg.m, *cfg.s);
}

std::uint32_t require_pivot(const CommandConfig& cfg) {
  if (!cfg.pivot) throw UsageError("'" + cfg.subcommand + "' needs --pivot");
  return *cfg.pivot;
}

EnumerationOptions enumeration(const CommandConfig& cfg) { return {cfg.cap_table, cfg.jobs}; }

std::string stats_line(const GateStats& g) {
  return "and=" + std::to_string(g.and_count) + " or=" + std::to_string(g.or_count) +
         " not=" + std::to_string(g.not_count) + " total=" + std::to_string(g.total());
}

std::string describe_edges(const CliqueParams& p, const Assignment& a) {
  std::vector<std::string> present;
  for (std::uint32_t i = 0; i < p.m(); ++i) {
    for (std::uint32_t j = i + 1; j < p.m(); ++j) {
      if (a[edge_index(i, j, p.m()).index]) {
        present.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  if (present.empty()) return "no edges present";
  std::string s = present.size() == 1 ? "edge " : "edges ";
  for (std::size_t k = 0; k < present.size(); ++k) s += (k ? "," : "") + present[k];
  return s + " present, all others absent";
}

std::string assignment_as_edges(const CliqueParams& p, const Assignment& a) {
  std::string s;
  std::size_t set = 0;
  for (std::uint32_t i = 0; i < p.m(); ++i) {
    for (std::uint32_t j = i + 1; j < p.m(); ++j) {
      if (a[edge_index(i, j, p.m()).index]) {
        s += (set++ ? ", e(" : "e(") + std::to_string(i) + "," + std::to_string(j) + ")=1";
      }
    }
  }
  if (set == 0) return "all edges 0";
  return s + ", others 0";
}

int cmd_demo(const CommandConfig& cfg, std::ostream& out) {
  const CliqueParams p = clique_params(cfg);
  CritiqueOptions opts;
  opts.enumeration = enumeration(cfg);
  opts.sop_cap = cfg.cap_sop;
  const CounterexampleReport r = run_counterexample(p, opts);
  const std::string name = "CLIQUE(" + std::to_string(p.m()) + "," + std::to_string(p.s()) + ")";

  out << name << " over " << p.num_edges() << " edge variables\n";
  out << "f   = " << print_formula(r.clique) << "\n      gates: " << stats_line(gate_stats(r.clique)) << '\n';
  out << "f'  = " << print_formula(r.f_prime) << "\n      gates: " << stats_line(gate_stats(r.f_prime)) << '\n';
  out << "f'' = " << print_formula(r.f_double_prime)
      << "\n      gates: " << stats_line(gate_stats(r.f_double_prime)) << '\n';
  out << "f' vs " << name << ": " << to_string(r.equiv_before.verdict) << " ("
      << r.equiv_before.assignments_checked << " assignments checked)\n";
  out << "f'' vs " << name << ": " << to_string(r.equiv_after.verdict);
  if (r.witness) {
    out << " at " << r.witness->to_string() << ": " << describe_edges(p, *r.witness)
        << "; f''=" << r.equiv_after.lhs_value << ", CLIQUE=" << r.equiv_after.rhs_value;
  }
  out << '\n';
  out << "single-edge check: " << describe_edges(p, r.single_edge)
      << "; f''=" << r.single_edge_f_double_prime << ", CLIQUE=" << r.single_edge_oracle << '\n';
  if (r.refuted()) {
    out << "DIFFERS at assignment " << assignment_as_edges(p, r.single_edge)
        << ": f''=" << r.single_edge_f_double_prime << ", CLIQUE=" << r.single_edge_oracle << '\n';
    return kNegativeVerdict;
  }
  out << "NOT REFUTED: replacement preserved " << name << '\n';
  return kOk;
}

int cmd_claim1(const CommandConfig& cfg, std::ostream& out) {
  const CliqueParams p = clique_params(cfg);
  const DualRailCircuit rails = to_rails(cfg, single_circuit(cfg));
  const SopFormula sop = sop_expand(rails, cfg.cap_sop);
  std::vector<std::uint32_t> pivots;
  if (cfg.pivot) {
    pivots.push_back(*cfg.pivot);
  } else {
    for (std::uint32_t v = 0; v < rails.num_vars(); ++v) pivots.push_back(v);
  }
  bool all_hold = true;
  for (auto v : pivots) {
    const Claim1Result r = check_claim1(rails, extract_negated(sop, v), p, enumeration(cfg));
    out << "pivot " << v << ": ";
    if (r.holds) {
      out << "HOLDS (" << r.premises << " premise assignments" << (r.vacuous() ? ", vacuous" : "") << ")\n";
    } else {
      all_hold = false;
      out << "VIOLATED at " << r.violation->to_string() << '\n';
    }
  }
  return all_hold ? kOk : kNegativeVerdict;
}

int cmd_set_gap(const CommandConfig& cfg, std::ostream& out) {
  const SopFormula sop = single_sop(cfg);
  const SetGapReport r = check_set_gap(sop, require_pivot(cfg), enumeration(cfg));
  out << "pivot " << r.pivot << '\n';
  out << "covered " << r.covered.size() << '\n';
  out << "term_a_true " << r.term_a_true.size() << '\n';
  out << "gap " << r.gap.size() << '\n';
  for (const auto& a : r.gap) out << a.to_string() << '\n';
  return kOk;
}

int dispatch(const CommandConfig& cfg, std::ostream& out) {
  const std::string& cmd = cfg.subcommand;
  if (cmd == "parse") {
    serialize(single_circuit(cfg), out);
  } else if (cmd == "print") {
    out << print_formula(single_circuit(cfg)) << '\n';
  } else if (cmd == "eval") {
    const Circuit c = single_circuit(cfg);
    out << (evaluate(c, parse_assignment(cfg.assign)) ? 1 : 0) << '\n';
  } else if (cmd == "table") {
    out << truth_table(single_circuit(cfg), enumeration(cfg)).to_hex() << '\n';
  } else if (cmd == "monotone") {
    const MonotonicityResult r = is_monotone(truth_table(single_circuit(cfg), enumeration(cfg)));
    if (r.monotone) {
      out << "MONOTONE\n";
      return kOk;
    }
    out << "NOT MONOTONE at " << r.violation->first.to_string() << "->" << r.violation->second.to_string()
        << '\n';
    return kNegativeVerdict;
  } else if (cmd == "equiv") {
    auto inputs = load_inputs(cfg);
    if (inputs.size() != 2 || !inputs[0].circuit || !inputs[1].circuit) {
      throw UsageError("'equiv' needs exactly two circuit inputs");
    }
    EquivalenceOptions opts;
    opts.enumeration = enumeration(cfg);
    opts.randomized = cfg.random_equiv;
    opts.samples = cfg.samples;
    opts.seed = cfg.seed;
    const EquivalenceReport r = check_equivalence(*inputs[0].circuit, *inputs[1].circuit, opts);
    out << to_string(r.verdict);
    if (r.witness) out << " at " << r.witness->to_string() << ": lhs=" << r.lhs_value << " rhs=" << r.rhs_value;
    if (r.verdict == Verdict::Inconclusive) out << " after " << r.assignments_checked << " samples";
    out << '\n';
    return r.verdict == Verdict::Equivalent ? kOk : kNegativeVerdict;
  } else if (cmd == "clique") {
    CliqueBuildOptions opts;
    opts.sharing = cfg.no_sharing ? Sharing::Off : Sharing::On;
    serialize(build_clique(clique_params(cfg), opts), out);
  } else if (cmd == "stats") {
    out << stats_line(gate_stats(single_circuit(cfg))) << '\n';
  } else if (cmd == "standard") {
    serialize(to_standard_form(single_circuit(cfg)), out);
  } else if (cmd == "split") {
    serialize(split_negations(to_standard_form(single_circuit(cfg))).inner(), out);
  } else if (cmd == "sop") {
    out << serialize(single_sop(cfg));
  } else if (cmd == "extract") {
    out << serialize(extract_negated(single_sop(cfg), require_pivot(cfg)));
  } else if (cmd == "sima-step") {
    out << serialize(sima_replace_one(extract_negated(single_sop(cfg), require_pivot(cfg))));
  } else if (cmd == "sima-full") {
    serialize(positive_rails_to_circuit(sima_replace_all(single_sop(cfg))), out);
  } else if (cmd == "claim1") {
    return cmd_claim1(cfg, out);
  } else if (cmd == "set-gap") {
    return cmd_set_gap(cfg, out);
  } else if (cmd == "demo") {
    return cmd_demo(cfg, out);
  }
  return kOk;
}

struct SubcommandInfo {
  const char* name;
  const char* help;
};

constexpr SubcommandInfo kSubcommands[] = {
    {"parse", "parse a formula and emit the node format"},
    {"print", "print a circuit as a formula"},
    {"eval", "evaluate at --assign"},
    {"table", "truth table as hex"},
    {"monotone", "check monotonicity"},
    {"equiv", "compare two circuits"},
    {"clique", "build CLIQUE(--m, --s)"},
    {"standard", "push negations down to the inputs"},
    {"split", "dual-rail form over 2n inputs"},
    {"sop", "sum of products in dual-rail space"},
    {"extract", "factor out the negated variable --pivot"},
    {"sima-step", "replace the negated variable --pivot by 1"},
    {"sima-full", "replace every negated variable by 1"},
    {"claim1", "check the restricted replacement claim on a clique circuit"},
    {"set-gap", "assignments the replacement argument does not cover"},
    {"demo", "run the appended-contradiction counterexample for CLIQUE(--m, --s)"},
    {"stats", "gate counts"},
};

void add_common_options(CLI::App& sub, CommandConfig& cfg) {
  sub.add_option("--expr", cfg.exprs, "formula text");
  sub.add_option("--file", cfg.files, "circuit, formula or SOP file");
  sub.add_option("--m", cfg.m, "vertex count");
  sub.add_option("--s", cfg.s, "clique size");
  sub.add_option("--pivot", cfg.pivot, "variable to extract (0-based)");
  sub.add_option("--assign", cfg.assign, "assignment bits, variable 0 first");
  sub.add_option("--cap-table", cfg.cap_table, "maximum inputs for exhaustive enumeration")
      ->envname("MONOCIRC_CAP_TABLE")
      ->check(CLI::PositiveNumber);
  sub.add_option("--cap-sop", cfg.cap_sop, "maximum SOP products")
      ->envname("MONOCIRC_CAP_SOP")
      ->check(CLI::PositiveNumber);
  sub.add_option("--jobs", cfg.jobs, "enumeration threads")->check(CLI::PositiveNumber);
  sub.add_option("--seed", cfg.seed, "seed for randomized equivalence");
  sub.add_option("--samples", cfg.samples, "samples for randomized equivalence");
  sub.add_flag("--no-sharing", cfg.no_sharing, "disable structural hashing of gates");
  sub.add_flag("--random-equiv", cfg.random_equiv, "sample above the enumeration cap");
  sub.add_flag("--rails", cfg.rails, "input circuit is already in dual-rail form");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Boolean circuit rewriting and negated-variable replacement checks", "monocirc"};
  app.require_subcommand(1, 1);
  for (const auto& info : kSubcommands) {
    CLI::App* sub = app.add_subcommand(info.name, info.help);
    add_common_options(*sub, cfg);
    sub->callback([&cfg, name = std::string(info.name)] { cfg.subcommand = name; });
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  try {
    return dispatch(cfg, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const HypothesisViolated& e) {
    err << "error: " << e.what() << '\n';
    return kNegativeVerdict;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace monocirc::cli
