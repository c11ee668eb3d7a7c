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

#pragma once

// Circuit IR: an immutable, hash-consed DAG of Const/Input/Not/And/Or nodes
// with a single output.
//
// Variables are zero-based throughout: the first variable of a circuit is
// VarId{0}. Node references are indices into the node store, and every child
// reference is smaller than the index of its parent, so the store is always in
// topological order.

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace monocirc {

struct VarId {
  std::uint32_t index = 0;
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

struct NodeRef {
  std::uint32_t index = 0;
  friend auto operator<=>(const NodeRef&, const NodeRef&) = default;
};

enum class NodeKind : std::uint8_t { Const, Input, Not, And, Or };

const char* to_string(NodeKind kind);

class Node {
 public:
  static Node constant(bool value) { return Node(NodeKind::Const, value ? 1u : 0u, 0); }
  static Node input(VarId v) { return Node(NodeKind::Input, v.index, 0); }
  static Node negation(NodeRef child) { return Node(NodeKind::Not, child.index, 0); }
  static Node conjunction(NodeRef l, NodeRef r) { return Node(NodeKind::And, l.index, r.index); }
  static Node disjunction(NodeRef l, NodeRef r) { return Node(NodeKind::Or, l.index, r.index); }

  NodeKind kind() const { return kind_; }
  bool is_gate() const { return kind_ == NodeKind::Not || kind_ == NodeKind::And || kind_ == NodeKind::Or; }
  std::size_t arity() const;

  // Accessors assume the matching kind.
  bool value() const { return a_ != 0; }
  VarId var() const { return VarId{a_}; }
  NodeRef child() const { return NodeRef{a_}; }
  NodeRef left() const { return NodeRef{a_}; }
  NodeRef right() const { return NodeRef{b_}; }

  friend bool operator==(const Node&, const Node&) = default;

  std::size_t hash() const;

 private:
  Node(NodeKind kind, std::uint32_t a, std::uint32_t b) : kind_(kind), a_(a), b_(b) {}

  NodeKind kind_;
  std::uint32_t a_;
  std::uint32_t b_;
};

struct GateStats {
  std::size_t and_count = 0;
  std::size_t or_count = 0;
  std::size_t not_count = 0;

  std::size_t total() const { return and_count + or_count + not_count; }
  friend bool operator==(const GateStats&, const GateStats&) = default;
};

class Circuit {
 public:
  /// Validates topological order, child ranges and input ranges. Does not
  /// deduplicate; use CircuitBuilder for hash-consed construction.
  static Circuit from_nodes(std::vector<Node> nodes, NodeRef output, std::uint32_t input_arity);

  /// The constant-0 circuit over zero inputs.
  Circuit();

  std::span<const Node> nodes() const { return *nodes_; }
  const Node& node(NodeRef r) const { return (*nodes_)[r.index]; }
  const Node& output_node() const { return node(output_); }
  NodeRef output() const { return output_; }
  std::uint32_t input_arity() const { return input_arity_; }
  std::size_t size() const { return nodes_->size(); }

  /// References reachable from the output, ascending (children first).
  std::vector<NodeRef> reachable() const;

  /// Structural equality: same store, output and arity.
  friend bool operator==(const Circuit& a, const Circuit& b);
  friend class CircuitBuilder;

 private:
  Circuit(std::shared_ptr<const std::vector<Node>> nodes, NodeRef output, std::uint32_t input_arity)
      : nodes_(std::move(nodes)), output_(output), input_arity_(input_arity) {}

  std::shared_ptr<const std::vector<Node>> nodes_;
  NodeRef output_;
  std::uint32_t input_arity_ = 0;
};

enum class Sharing { On, Off };

/// Single-writer builder. With Sharing::On every node is hash-consed; with
/// Sharing::Off only constants and inputs are deduplicated and every gate
/// request appends a fresh node.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(std::uint32_t input_arity, Sharing sharing = Sharing::On);

  NodeRef mk(const Node& node);

  NodeRef constant(bool value) { return mk(Node::constant(value)); }
  NodeRef input(VarId v) { return mk(Node::input(v)); }
  NodeRef make_not(NodeRef c) { return mk(Node::negation(c)); }
  NodeRef make_and(NodeRef l, NodeRef r) { return mk(Node::conjunction(l, r)); }
  NodeRef make_or(NodeRef l, NodeRef r) { return mk(Node::disjunction(l, r)); }

  /// Left-associated folds; an empty list yields the neutral constant.
  NodeRef make_and(std::span<const NodeRef> operands);
  NodeRef make_or(std::span<const NodeRef> operands);

  /// Copies the output cone of `c` into this builder. Input(v) of `c` is mapped
  /// to `input_map[v]` when a map is given, otherwise to Input(v) here.
  NodeRef append(const Circuit& c, std::span<const NodeRef> input_map = {});

  std::uint32_t input_arity() const { return input_arity_; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(NodeRef r) const { return nodes_[r.index]; }

  Circuit finish(NodeRef output) &&;

 private:
  struct NodeHash {
    std::size_t operator()(const Node& n) const { return n.hash(); }
  };

  std::uint32_t input_arity_;
  Sharing sharing_;
  std::vector<Node> nodes_;
  std::unordered_map<Node, NodeRef, NodeHash> index_;
};

/// Copies only the output cone, preserving hash-consing.
Circuit compact(const Circuit& c);

/// Applies local constant rules (¬0→1, ¬1→0, 1∧a→a, 0∧a→0, 1∨a→1, 0∨a→a and
/// their mirrors). Contradictions such as x∧¬x are left untouched.
Circuit constant_fold(const Circuit& c);

/// Replaces every Input(v) by Const(value) and folds. The input arity is kept.
Circuit substitute_input(const Circuit& c, VarId v, bool value);

/// Tally of gates reachable from the output.
GateStats gate_stats(const Circuit& c);

/// Line format:
///   INPUTS <n>
///   <id> CONST <0|1> | <id> IN <var> | <id> NOT <id> | <id> AND <id> <id> | <id> OR <id> <id>
///   OUT <id>
std::string serialize(const Circuit& c);
void serialize(const Circuit& c, std::ostream& out);
Circuit deserialize(std::string_view text);

}  // namespace monocirc
