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

#include "monocirc/circuit.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "monocirc/error.hpp"

namespace monocirc {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Const:
      return "CONST";
    case NodeKind::Input:
      return "IN";
    case NodeKind::Not:
      return "NOT";
    case NodeKind::And:
      return "AND";
    case NodeKind::Or:
      return "OR";
  }
  return "?";
}

std::size_t Node::arity() const {
  switch (kind_) {
    case NodeKind::Not:
      return 1;
    case NodeKind::And:
    case NodeKind::Or:
      return 2;
    default:
      return 0;
  }
}

std::size_t Node::hash() const {
  std::uint64_t h = static_cast<std::uint64_t>(kind_);
  h = h * 0x9E3779B97F4A7C15ull ^ a_;
  h = h * 0x9E3779B97F4A7C15ull ^ b_;
  return static_cast<std::size_t>(h ^ (h >> 29));
}

namespace {

void validate_node(const Node& n, std::size_t position, std::uint32_t input_arity) {
  switch (n.kind()) {
    case NodeKind::Const:
      return;
    case NodeKind::Input:
      if (n.var().index >= input_arity) {
        throw std::out_of_range("input x" + std::to_string(n.var().index) +
                                " out of range for arity " + std::to_string(input_arity));
      }
      return;
    case NodeKind::Not:
      if (n.child().index >= position) {
        throw std::out_of_range("child reference " + std::to_string(n.child().index) +
                                " out of range at node " + std::to_string(position));
      }
      return;
    case NodeKind::And:
    case NodeKind::Or:
      if (n.left().index >= position || n.right().index >= position) {
        throw std::out_of_range("child reference out of range at node " + std::to_string(position));
      }
      return;
  }
}

}  // namespace

Circuit::Circuit()
    : nodes_(std::make_shared<const std::vector<Node>>(std::vector<Node>{Node::constant(false)})),
      output_{0},
      input_arity_(0) {}

Circuit Circuit::from_nodes(std::vector<Node> nodes, NodeRef output, std::uint32_t input_arity) {
  for (std::size_t i = 0; i < nodes.size(); ++i) validate_node(nodes[i], i, input_arity);
  if (output.index >= nodes.size()) {
    throw std::out_of_range("output reference " + std::to_string(output.index) + " out of range");
  }
  return Circuit(std::make_shared<const std::vector<Node>>(std::move(nodes)), output, input_arity);
}

std::vector<NodeRef> Circuit::reachable() const {
  std::vector<char> mark(size(), 0);
  mark[output_.index] = 1;
  // Children precede parents, so one descending sweep suffices.
  for (std::size_t i = size(); i-- > 0;) {
    if (!mark[i]) continue;
    const Node& n = (*nodes_)[i];
    if (n.arity() >= 1) mark[n.left().index] = 1;
    if (n.arity() == 2) mark[n.right().index] = 1;
  }
  std::vector<NodeRef> out;
  for (std::uint32_t i = 0; i < size(); ++i) {
    if (mark[i]) out.push_back(NodeRef{i});
  }
  return out;
}

bool operator==(const Circuit& a, const Circuit& b) {
  return a.input_arity_ == b.input_arity_ && a.output_ == b.output_ && *a.nodes_ == *b.nodes_;
}

CircuitBuilder::CircuitBuilder(std::uint32_t input_arity, Sharing sharing)
    : input_arity_(input_arity), sharing_(sharing) {}

NodeRef CircuitBuilder::mk(const Node& node) {
  validate_node(node, nodes_.size(), input_arity_);
  const bool dedup = sharing_ == Sharing::On || !node.is_gate();
  if (dedup) {
    if (auto it = index_.find(node); it != index_.end()) return it->second;
  }
  NodeRef ref{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back(node);
  if (dedup) index_.emplace(node, ref);
  return ref;
}

NodeRef CircuitBuilder::make_and(std::span<const NodeRef> operands) {
  if (operands.empty()) return constant(true);
  NodeRef acc = operands.front();
  for (auto r : operands.subspan(1)) acc = make_and(acc, r);
  return acc;
}

NodeRef CircuitBuilder::make_or(std::span<const NodeRef> operands) {
  if (operands.empty()) return constant(false);
  NodeRef acc = operands.front();
  for (auto r : operands.subspan(1)) acc = make_or(acc, r);
  return acc;
}

NodeRef CircuitBuilder::append(const Circuit& c, std::span<const NodeRef> input_map) {
  if (!input_map.empty() && input_map.size() < c.input_arity()) {
    throw ArityMismatch(c.input_arity(), input_map.size());
  }
  std::vector<NodeRef> remap(c.size());
  for (NodeRef r : c.reachable()) {
    const Node& n = c.node(r);
    NodeRef out;
    switch (n.kind()) {
      case NodeKind::Const:
        out = constant(n.value());
        break;
      case NodeKind::Input:
        out = input_map.empty() ? input(n.var()) : input_map[n.var().index];
        break;
      case NodeKind::Not:
        out = make_not(remap[n.child().index]);
        break;
      case NodeKind::And:
        out = make_and(remap[n.left().index], remap[n.right().index]);
        break;
      case NodeKind::Or:
        out = make_or(remap[n.left().index], remap[n.right().index]);
        break;
    }
    remap[r.index] = out;
  }
  return remap[c.output().index];
}

Circuit CircuitBuilder::finish(NodeRef output) && {
  if (output.index >= nodes_.size()) {
    throw std::out_of_range("output reference " + std::to_string(output.index) + " out of range");
  }
  index_.clear();
  return Circuit(std::make_shared<const std::vector<Node>>(std::move(nodes_)), output, input_arity_);
}

Circuit compact(const Circuit& c) {
  CircuitBuilder b(c.input_arity());
  NodeRef out = b.append(c);
  return std::move(b).finish(out);
}

namespace {

// Rebuilds the output cone applying the constant rules. `input_value[v]` (if
// set) replaces Input(v) by a constant first.
Circuit fold_with(const Circuit& c, const std::vector<int>& input_value) {
  CircuitBuilder b(c.input_arity());
  std::vector<NodeRef> remap(c.size());
  auto as_const = [&](NodeRef r) -> int {
    const Node& n = b.node(r);
    return n.kind() == NodeKind::Const ? static_cast<int>(n.value()) : -1;
  };
  for (NodeRef r : c.reachable()) {
    const Node& n = c.node(r);
    NodeRef out;
    switch (n.kind()) {
      case NodeKind::Const:
        out = b.constant(n.value());
        break;
      case NodeKind::Input: {
        int v = input_value.empty() ? -1 : input_value[n.var().index];
        out = v < 0 ? b.input(n.var()) : b.constant(v != 0);
        break;
      }
      case NodeKind::Not: {
        NodeRef x = remap[n.child().index];
        int k = as_const(x);
        out = k < 0 ? b.make_not(x) : b.constant(k == 0);
        break;
      }
      case NodeKind::And:
      case NodeKind::Or: {
        const bool is_and = n.kind() == NodeKind::And;
        NodeRef l = remap[n.left().index];
        NodeRef rr = remap[n.right().index];
        int kl = as_const(l);
        int kr = as_const(rr);
        // Absorbing element: 0 for AND, 1 for OR. Identity is the other one.
        const int absorbing = is_and ? 0 : 1;
        if (kl == absorbing || kr == absorbing) {
          out = b.constant(absorbing == 1);
        } else if (kl >= 0) {
          out = rr;
        } else if (kr >= 0) {
          out = l;
        } else {
          out = is_and ? b.make_and(l, rr) : b.make_or(l, rr);
        }
        break;
      }
    }
    remap[r.index] = out;
  }
  NodeRef out = remap[c.output().index];
  // Drop nodes that folding made unreachable.
  return compact(std::move(b).finish(out));
}

}  // namespace

Circuit constant_fold(const Circuit& c) { return fold_with(c, {}); }

Circuit substitute_input(const Circuit& c, VarId v, bool value) {
  if (v.index >= c.input_arity()) {
    throw std::out_of_range("variable x" + std::to_string(v.index) + " out of range for arity " +
                            std::to_string(c.input_arity()));
  }
  std::vector<int> values(c.input_arity(), -1);
  values[v.index] = value ? 1 : 0;
  return fold_with(c, values);
}

GateStats gate_stats(const Circuit& c) {
  GateStats s;
  for (NodeRef r : c.reachable()) {
    switch (c.node(r).kind()) {
      case NodeKind::And:
        ++s.and_count;
        break;
      case NodeKind::Or:
        ++s.or_count;
        break;
      case NodeKind::Not:
        ++s.not_count;
        break;
      default:
        break;
    }
  }
  return s;
}

void serialize(const Circuit& c, std::ostream& out) {
  out << "INPUTS " << c.input_arity() << '\n';
  const auto nodes = c.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    out << i << ' ' << to_string(n.kind());
    switch (n.kind()) {
      case NodeKind::Const:
        out << ' ' << (n.value() ? 1 : 0);
        break;
      case NodeKind::Input:
        out << ' ' << n.var().index;
        break;
      case NodeKind::Not:
        out << ' ' << n.child().index;
        break;
      case NodeKind::And:
      case NodeKind::Or:
        out << ' ' << n.left().index << ' ' << n.right().index;
        break;
    }
    out << '\n';
  }
  out << "OUT " << c.output().index << '\n';
}

std::string serialize(const Circuit& c) {
  std::ostringstream out;
  serialize(c, out);
  return out.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Returns false at end of text. Blank lines and '#' comments are skipped.
  bool next(std::vector<std::string_view>& tokens) {
    while (pos_ < text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      line_start_ = pos_;
      pos_ = end + 1;
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      tokens.clear();
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::size_t line_start() const { return line_start_; }
  std::size_t line_no() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  std::size_t line_no_ = 0;
};

std::uint32_t parse_u32(std::string_view tok, std::size_t position) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected unsigned integer, got '" + std::string(tok) + "'", position);
  }
  return value;
}

}  // namespace

Circuit deserialize(std::string_view text) {
  LineReader reader(text);
  std::vector<std::string_view> tok;
  if (!reader.next(tok) || tok.size() != 2 || tok[0] != "INPUTS") {
    throw ParseError("expected header 'INPUTS <n>'", reader.line_start());
  }
  const std::uint32_t arity = parse_u32(tok[1], reader.line_start());
  std::vector<Node> nodes;
  while (reader.next(tok)) {
    const std::size_t at = reader.line_start();
    if (tok[0] == "OUT") {
      if (tok.size() != 2) throw ParseError("expected 'OUT <id>'", at);
      NodeRef out{parse_u32(tok[1], at)};
      if (reader.next(tok)) throw ParseError("unexpected content after OUT line", reader.line_start());
      try {
        return Circuit::from_nodes(std::move(nodes), out, arity);
      } catch (const std::out_of_range& e) {
        throw ParseError(e.what(), at);
      }
    }
    if (tok.size() < 3) throw ParseError("truncated node line", at);
    const std::uint32_t id = parse_u32(tok[0], at);
    if (id != nodes.size()) {
      throw ParseError("node ids must be consecutive from 0; expected " +
                           std::to_string(nodes.size()) + ", got " + std::to_string(id),
                       at);
    }
    const std::string_view op = tok[1];
    auto want = [&](std::size_t count) {
      if (tok.size() != count + 2) throw ParseError(std::string(op) + " takes " + std::to_string(count) + " operand(s)", at);
    };
    Node node = Node::constant(false);
    if (op == "CONST") {
      want(1);
      std::uint32_t v = parse_u32(tok[2], at);
      if (v > 1) throw ParseError("CONST operand must be 0 or 1", at);
      node = Node::constant(v == 1);
    } else if (op == "IN") {
      want(1);
      node = Node::input(VarId{parse_u32(tok[2], at)});
    } else if (op == "NOT") {
      want(1);
      node = Node::negation(NodeRef{parse_u32(tok[2], at)});
    } else if (op == "AND") {
      want(2);
      node = Node::conjunction(NodeRef{parse_u32(tok[2], at)}, NodeRef{parse_u32(tok[3], at)});
    } else if (op == "OR") {
      want(2);
      node = Node::disjunction(NodeRef{parse_u32(tok[2], at)}, NodeRef{parse_u32(tok[3], at)});
    } else {
      throw ParseError("unknown node kind '" + std::string(op) + "'", at);
    }
    try {
      validate_node(node, nodes.size(), arity);
    } catch (const std::out_of_range& e) {
      throw ParseError(e.what(), at);
    }
    nodes.push_back(node);
  }
  throw ParseError("missing 'OUT <id>' line", text.size());
}

}  // namespace monocirc
