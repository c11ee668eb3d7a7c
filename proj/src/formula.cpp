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

#include "monocirc/formula.hpp"

#include <optional>

#include "monocirc/error.hpp"

namespace monocirc {

namespace {

enum class Tok { Var, Zero, One, Not, And, Or, LParen, RParen, End };

const char* describe(Tok t) {
  switch (t) {
    case Tok::Var:
      return "variable";
    case Tok::Zero:
      return "'0'";
    case Tok::One:
      return "'1'";
    case Tok::Not:
      return "'!'";
    case Tok::And:
      return "'&'";
    case Tok::Or:
      return "'|'";
    case Tok::LParen:
      return "'('";
    case Tok::RParen:
      return "')'";
    case Tok::End:
      return "end of input";
  }
  return "?";
}

// Precedence levels shared by the parser's structure and the printer.
constexpr int kPrecOr = 1;
constexpr int kPrecAnd = 2;
constexpr int kPrecNot = 3;
constexpr int kPrecAtom = 4;

// The formula is parsed into a small tree first so the input arity is known
// before the circuit builder is created.
struct Ast {
  NodeKind kind;
  std::uint32_t value = 0;  // const bit or variable index
  int left = -1;
  int right = -1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Circuit run(Sharing sharing) {
    std::optional<std::uint32_t> declared;
    skip_space();
    if (src_.substr(pos_, 6) == "INPUTS") {
      pos_ += 6;
      skip_space();
      const std::size_t digits_at = pos_;
      std::uint64_t n = 0;
      while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') {
        n = n * 10 + static_cast<std::uint64_t>(src_[pos_] - '0');
        if (n > kMaxFormulaInputs) throw ParseError("declared input count too large", digits_at);
        ++pos_;
      }
      if (pos_ == digits_at) throw ParseError("expected input count after INPUTS", pos_);
      skip_space();
      if (pos_ < src_.size() && src_[pos_] == ';') ++pos_;
      declared = static_cast<std::uint32_t>(n);
    }
    advance();
    const int root = parse_or();
    if (tok_ != Tok::End) throw ParseError(std::string("unexpected ") + describe(tok_), tok_pos_);

    std::uint32_t arity = max_var_ ? *max_var_ + 1 : 0;
    if (declared) {
      if (max_var_ && *max_var_ >= *declared) {
        throw ParseError("variable x" + std::to_string(*max_var_) + " exceeds declared INPUTS " +
                             std::to_string(*declared),
                         0);
      }
      arity = *declared;
    }
    CircuitBuilder b(arity, sharing);
    std::vector<NodeRef> built(ast_.size());
    // Children are always pushed before parents.
    for (std::size_t i = 0; i < ast_.size(); ++i) {
      const Ast& a = ast_[i];
      switch (a.kind) {
        case NodeKind::Const:
          built[i] = b.constant(a.value != 0);
          break;
        case NodeKind::Input:
          built[i] = b.input(VarId{a.value});
          break;
        case NodeKind::Not:
          built[i] = b.make_not(built[a.left]);
          break;
        case NodeKind::And:
          built[i] = b.make_and(built[a.left], built[a.right]);
          break;
        case NodeKind::Or:
          built[i] = b.make_or(built[a.left], built[a.right]);
          break;
      }
    }
    return std::move(b).finish(built[root]);
  }

 private:
  int push(Ast a) {
    ast_.push_back(a);
    return static_cast<int>(ast_.size() - 1);
  }

  int parse_or() {
    int lhs = parse_and();
    while (tok_ == Tok::Or) {
      advance();
      const int rhs = parse_and();
      lhs = push({NodeKind::Or, 0, lhs, rhs});
    }
    return lhs;
  }

  int parse_and() {
    int lhs = parse_not();
    while (tok_ == Tok::And) {
      advance();
      const int rhs = parse_not();
      lhs = push({NodeKind::And, 0, lhs, rhs});
    }
    return lhs;
  }

  int parse_not() {
    std::size_t count = 0;
    while (tok_ == Tok::Not) {
      ++count;
      advance();
    }
    int node = parse_atom();
    while (count-- > 0) node = push({NodeKind::Not, 0, node, -1});
    return node;
  }

  int parse_atom() {
    switch (tok_) {
      case Tok::Var: {
        const std::uint32_t v = tok_value_;
        if (!max_var_ || v > *max_var_) max_var_ = v;
        advance();
        return push({NodeKind::Input, v});
      }
      case Tok::Zero:
        advance();
        return push({NodeKind::Const, 0});
      case Tok::One:
        advance();
        return push({NodeKind::Const, 1});
      case Tok::LParen: {
        advance();
        const int inner = parse_or();
        if (tok_ != Tok::RParen) {
          throw ParseError(std::string("expected ')' but found ") + describe(tok_), tok_pos_);
        }
        advance();
        return inner;
      }
      default:
        throw ParseError(std::string("expected operand but found ") + describe(tok_), tok_pos_);
    }
  }

  void skip_space() {
    while (pos_ < src_.size() &&
           (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' || src_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool match(std::string_view s) {
    if (src_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }

  void advance() {
    skip_space();
    tok_pos_ = pos_;
    if (pos_ >= src_.size()) {
      tok_ = Tok::End;
      return;
    }
    const char c = src_[pos_];
    if (c == 'x') {
      ++pos_;
      const std::size_t digits_at = pos_;
      std::uint64_t v = 0;
      while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') {
        v = v * 10 + static_cast<std::uint64_t>(src_[pos_] - '0');
        if (v >= kMaxFormulaInputs) throw ParseError("variable index overflow", tok_pos_);
        ++pos_;
      }
      if (pos_ == digits_at) throw ParseError("expected digits after 'x'", pos_);
      tok_ = Tok::Var;
      tok_value_ = static_cast<std::uint32_t>(v);
      return;
    }
    ++pos_;
    switch (c) {
      case '0':
        tok_ = Tok::Zero;
        return;
      case '1':
        tok_ = Tok::One;
        return;
      case '!':
        tok_ = Tok::Not;
        return;
      case '&':
        tok_ = Tok::And;
        return;
      case '|':
        tok_ = Tok::Or;
        return;
      case '(':
        tok_ = Tok::LParen;
        return;
      case ')':
        tok_ = Tok::RParen;
        return;
      default:
        break;
    }
    --pos_;
    if (match("\xC2\xAC")) {  // ¬
      tok_ = Tok::Not;
    } else if (match("\xE2\x88\xA7")) {  // ∧
      tok_ = Tok::And;
    } else if (match("\xE2\x88\xA8")) {  // ∨
      tok_ = Tok::Or;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Tok tok_ = Tok::End;
  std::size_t tok_pos_ = 0;
  std::uint32_t tok_value_ = 0;
  std::optional<std::uint32_t> max_var_;
  std::vector<Ast> ast_;
};

int precedence(const Node& n) {
  switch (n.kind()) {
    case NodeKind::Or:
      return kPrecOr;
    case NodeKind::And:
      return kPrecAnd;
    case NodeKind::Not:
      return kPrecNot;
    default:
      return kPrecAtom;
  }
}

void print_node(const Circuit& c, NodeRef r, int min_prec, std::string& out) {
  const Node& n = c.node(r);
  const bool wrap = precedence(n) < min_prec;
  if (wrap) out += '(';
  switch (n.kind()) {
    case NodeKind::Const:
      out += n.value() ? '1' : '0';
      break;
    case NodeKind::Input:
      out += 'x';
      out += std::to_string(n.var().index);
      break;
    case NodeKind::Not:
      out += '!';
      print_node(c, n.child(), kPrecNot, out);
      break;
    case NodeKind::And:
      print_node(c, n.left(), kPrecAnd, out);
      out += " & ";
      print_node(c, n.right(), kPrecAnd + 1, out);
      break;
    case NodeKind::Or:
      print_node(c, n.left(), kPrecOr, out);
      out += " | ";
      print_node(c, n.right(), kPrecOr + 1, out);
      break;
  }
  if (wrap) out += ')';
}

}  // namespace

Circuit parse_formula(std::string_view source, Sharing sharing) { return Parser(source).run(sharing); }

std::string print_formula(const Circuit& c) {
  std::optional<std::uint32_t> max_var;
  for (NodeRef r : c.reachable()) {
    const Node& n = c.node(r);
    if (n.kind() == NodeKind::Input && (!max_var || n.var().index > *max_var)) max_var = n.var().index;
  }
  const std::uint32_t implied = max_var ? *max_var + 1 : 0;
  std::string out;
  if (implied != c.input_arity()) out = "INPUTS " + std::to_string(c.input_arity()) + "; ";
  print_node(c, c.output(), kPrecOr, out);
  return out;
}

}  // namespace monocirc
