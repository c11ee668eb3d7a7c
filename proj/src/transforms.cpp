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

#include "monocirc/transforms.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "monocirc/error.hpp"

namespace monocirc {

Circuit to_standard_form(const Circuit& c) {
  CircuitBuilder b(c.input_arity());
  std::vector<NodeRef> pos(c.size());
  std::vector<NodeRef> neg(c.size());
  for (NodeRef r : c.reachable()) {
    const Node& n = c.node(r);
    const auto i = r.index;
    switch (n.kind()) {
      case NodeKind::Const:
        pos[i] = b.constant(n.value());
        neg[i] = b.constant(!n.value());
        break;
      case NodeKind::Input:
        pos[i] = b.input(n.var());
        neg[i] = b.make_not(pos[i]);
        break;
      case NodeKind::Not:
        pos[i] = neg[n.child().index];
        neg[i] = pos[n.child().index];
        break;
      case NodeKind::And:
        pos[i] = b.make_and(pos[n.left().index], pos[n.right().index]);
        neg[i] = b.make_or(neg[n.left().index], neg[n.right().index]);
        break;
      case NodeKind::Or:
        pos[i] = b.make_or(pos[n.left().index], pos[n.right().index]);
        neg[i] = b.make_and(neg[n.left().index], neg[n.right().index]);
        break;
    }
  }
  return compact(std::move(b).finish(pos[c.output().index]));
}

bool is_standard_form(const Circuit& c) {
  for (NodeRef r : c.reachable()) {
    const Node& n = c.node(r);
    if (n.kind() == NodeKind::Not && c.node(n.child()).kind() != NodeKind::Input) return false;
  }
  return true;
}

DualRailCircuit::DualRailCircuit(Circuit inner, std::uint32_t n) : inner_(std::move(inner)), n_(n) {
  if (inner_.input_arity() != 2 * n) throw ArityMismatch(2 * n, inner_.input_arity());
  if (gate_stats(inner_).not_count != 0) {
    throw std::invalid_argument("dual-rail circuit must not contain Not gates");
  }
}

DualRailCircuit split_negations(const Circuit& standard) {
  if (!is_standard_form(standard)) {
    throw std::invalid_argument("split_negations: circuit is not in standard form");
  }
  const std::uint32_t n = standard.input_arity();
  CircuitBuilder b(2 * n);
  std::vector<NodeRef> remap(standard.size());
  for (NodeRef r : standard.reachable()) {
    const Node& node = standard.node(r);
    NodeRef out;
    switch (node.kind()) {
      case NodeKind::Const:
        out = b.constant(node.value());
        break;
      case NodeKind::Input:
        out = b.input(node.var());
        break;
      case NodeKind::Not:
        out = b.input(VarId{negative_rail(n, standard.node(node.child()).var().index)});
        break;
      case NodeKind::And:
        out = b.make_and(remap[node.left().index], remap[node.right().index]);
        break;
      case NodeKind::Or:
        out = b.make_or(remap[node.left().index], remap[node.right().index]);
        break;
    }
    remap[r.index] = out;
  }
  return DualRailCircuit(compact(std::move(b).finish(remap[standard.output().index])), n);
}

Assignment extend_to_rails(const Assignment& a) {
  const std::size_t n = a.size();
  Assignment rails(2 * n);
  for (std::size_t v = 0; v < n; ++v) {
    rails.set(v, a[v]);
    rails.set(n + v, !a[v]);
  }
  return rails;
}

bool eval_dual_rail(const DualRailCircuit& d, const Assignment& a) {
  if (a.size() != d.num_vars()) throw ArityMismatch(d.num_vars(), a.size());
  return evaluate(d.inner(), extend_to_rails(a));
}

Product::Product(std::initializer_list<std::uint32_t> rails) : Product(std::vector<std::uint32_t>(rails)) {}

Product::Product(std::vector<std::uint32_t> rails) : rails_(std::move(rails)) {
  std::sort(rails_.begin(), rails_.end());
  rails_.erase(std::unique(rails_.begin(), rails_.end()), rails_.end());
}

bool Product::contains(std::uint32_t rail) const {
  return std::binary_search(rails_.begin(), rails_.end(), rail);
}

Product Product::without(std::uint32_t rail) const {
  Product p;
  p.rails_.reserve(rails_.size());
  for (auto r : rails_) {
    if (r != rail) p.rails_.push_back(r);
  }
  return p;
}

Product Product::merged(const Product& other) const {
  Product p;
  p.rails_.reserve(rails_.size() + other.rails_.size());
  std::set_union(rails_.begin(), rails_.end(), other.rails_.begin(), other.rails_.end(),
                 std::back_inserter(p.rails_));
  return p;
}

namespace {

void normalize(std::vector<Product>& products) {
  std::sort(products.begin(), products.end());
  products.erase(std::unique(products.begin(), products.end()), products.end());
}

}  // namespace

SopFormula::SopFormula(std::uint32_t input_arity, std::vector<Product> products)
    : input_arity_(input_arity), products_(std::move(products)) {
  for (const auto& p : products_) {
    if (!p.empty() && p.rails().back() >= input_arity_) {
      throw std::out_of_range("product rail " + std::to_string(p.rails().back()) +
                              " out of range for " + std::to_string(input_arity_) + " rails");
    }
  }
  normalize(products_);
}

bool SopFormula::evaluate(const Assignment& rails) const {
  if (rails.size() != input_arity_) throw ArityMismatch(input_arity_, rails.size());
  return std::any_of(products_.begin(), products_.end(), [&](const Product& p) {
    return std::all_of(p.rails().begin(), p.rails().end(), [&](std::uint32_t r) { return rails[r]; });
  });
}

namespace {

NodeRef emit_sop(CircuitBuilder& b, const SopFormula& s) {
  std::vector<NodeRef> terms;
  std::vector<NodeRef> lits;
  for (const auto& p : s.products()) {
    lits.clear();
    for (auto r : p.rails()) lits.push_back(b.input(VarId{r}));
    terms.push_back(b.make_and(lits));
  }
  return b.make_or(terms);
}

}  // namespace

Circuit sop_to_circuit(const SopFormula& s) {
  CircuitBuilder b(s.input_arity());
  const NodeRef out = emit_sop(b, s);
  return std::move(b).finish(out);
}

SopFormula sop_expand(const DualRailCircuit& d, std::uint64_t cap) {
  const Circuit& c = d.inner();
  std::vector<std::vector<Product>> sop(c.size());
  // Release intermediate SOPs once their last consumer has been processed.
  std::vector<std::uint32_t> last_use(c.size(), 0);
  const std::vector<NodeRef> order = c.reachable();
  for (NodeRef r : order) {
    const Node& n = c.node(r);
    if (n.arity() >= 1) last_use[n.left().index] = r.index;
    if (n.arity() == 2) last_use[n.right().index] = r.index;
  }
  auto release = [&](NodeRef child, NodeRef parent) {
    if (last_use[child.index] == parent.index) std::vector<Product>().swap(sop[child.index]);
  };

  for (NodeRef r : order) {
    const Node& n = c.node(r);
    std::vector<Product> out;
    switch (n.kind()) {
      case NodeKind::Const:
        if (n.value()) out.emplace_back();
        break;
      case NodeKind::Input:
        out.push_back(Product{n.var().index});
        break;
      case NodeKind::Not:
        throw std::invalid_argument("sop_expand: Not gate in dual-rail circuit");
      case NodeKind::Or: {
        const auto& l = sop[n.left().index];
        const auto& rr = sop[n.right().index];
        if (l.size() + rr.size() > cap) throw CapExceeded("SOP products", l.size() + rr.size(), cap);
        out.reserve(l.size() + rr.size());
        std::set_union(l.begin(), l.end(), rr.begin(), rr.end(), std::back_inserter(out));
        break;
      }
      case NodeKind::And: {
        const auto& l = sop[n.left().index];
        const auto& rr = sop[n.right().index];
        const std::uint64_t estimate = static_cast<std::uint64_t>(l.size()) * rr.size();
        if (estimate > cap) throw CapExceeded("SOP products", estimate, cap);
        out.reserve(estimate);
        for (const auto& p : l) {
          for (const auto& q : rr) out.push_back(p.merged(q));
        }
        normalize(out);
        break;
      }
    }
    if (n.arity() >= 1) release(n.left(), r);
    if (n.arity() == 2) release(n.right(), r);
    sop[r.index] = std::move(out);
  }
  return SopFormula(c.input_arity(), std::move(sop[c.output().index]));
}

ExtractedForm extract_negated(const SopFormula& s, std::uint32_t pivot) {
  if (s.input_arity() % 2 != 0) {
    throw std::invalid_argument("extract_negated: SOP must be over an even number of rails");
  }
  const std::uint32_t n = s.input_arity() / 2;
  if (pivot >= n) {
    throw std::out_of_range("pivot " + std::to_string(pivot) + " out of range for " + std::to_string(n) +
                            " variables");
  }
  const std::uint32_t rail = negative_rail(n, pivot);
  std::vector<Product> term_a;
  std::vector<Product> rest;
  for (const auto& p : s.products()) {
    if (p.contains(rail)) {
      term_a.push_back(p.without(rail));
    } else {
      rest.push_back(p);
    }
  }
  return ExtractedForm{pivot, SopFormula(s.input_arity(), std::move(term_a)),
                       SopFormula(s.input_arity(), std::move(rest))};
}

Circuit extracted_to_circuit(const ExtractedForm& e) {
  const std::uint32_t arity = e.term_a.input_arity();
  CircuitBuilder b(arity);
  const NodeRef pivot = b.input(VarId{negative_rail(arity / 2, e.pivot)});
  const NodeRef term_a = emit_sop(b, e.term_a);
  const NodeRef rest = emit_sop(b, e.rest);
  const NodeRef out = b.make_or(b.make_and(pivot, term_a), rest);
  return std::move(b).finish(out);
}

SopFormula sima_replace_one(const ExtractedForm& e) {
  std::vector<Product> all = e.term_a.products();
  all.insert(all.end(), e.rest.products().begin(), e.rest.products().end());
  return SopFormula(e.term_a.input_arity(), std::move(all));
}

SopFormula sima_replace_all(const SopFormula& s) {
  if (s.input_arity() % 2 != 0) {
    throw std::invalid_argument("sima_replace_all: SOP must be over an even number of rails");
  }
  SopFormula current = s;
  for (std::uint32_t v = 0; v < s.input_arity() / 2; ++v) {
    current = sima_replace_one(extract_negated(current, v));
  }
  return current;
}

Circuit positive_rails_to_circuit(const SopFormula& s) {
  const std::uint32_t n = s.input_arity() / 2;
  for (const auto& p : s.products()) {
    if (!p.empty() && p.rails().back() >= n) {
      throw std::invalid_argument("positive_rails_to_circuit: negative rail " +
                                  std::to_string(p.rails().back()) + " still present");
    }
  }
  SopFormula positive(n, s.products());
  return sop_to_circuit(positive);
}

Circuit sima_full_procedure(const DualRailCircuit& d, std::uint64_t sop_cap) {
  return positive_rails_to_circuit(sima_replace_all(sop_expand(d, sop_cap)));
}

std::string serialize(const SopFormula& s) {
  std::ostringstream out;
  out << "SOP " << s.input_arity() << ' ' << s.products().size() << '\n';
  for (const auto& p : s.products()) {
    for (std::size_t i = 0; i < p.rails().size(); ++i) {
      if (i) out << ' ';
      out << p.rails()[i];
    }
    out << '\n';
  }
  return out.str();
}

SopFormula deserialize_sop(std::string_view text) {
  std::size_t pos = 0;
  auto next_line = [&](std::string_view& line) {
    if (pos >= text.size()) return false;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    return true;
  };
  auto numbers = [](std::string_view line, std::size_t at) {
    std::vector<std::uint32_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i >= line.size()) break;
      std::uint32_t v = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
      if (ec != std::errc()) throw ParseError("expected rail id", at + i);
      i = static_cast<std::size_t>(ptr - line.data());
      if (i < line.size() && line[i] != ' ' && line[i] != '\t') throw ParseError("expected rail id", at + i);
      out.push_back(v);
    }
    return out;
  };

  std::string_view line;
  if (!next_line(line) || line.substr(0, 4) != "SOP ") throw ParseError("expected header 'SOP <rails> <products>'", 0);
  const auto header = numbers(line.substr(4), 4);
  if (header.size() != 2) throw ParseError("expected header 'SOP <rails> <products>'", 0);
  std::vector<Product> products;
  for (std::uint32_t k = 0; k < header[1]; ++k) {
    const std::size_t at = pos;
    if (!next_line(line)) throw ParseError("missing product line", text.size());
    auto rails = numbers(line, at);
    for (auto r : rails) {
      if (r >= header[0]) throw ParseError("rail id " + std::to_string(r) + " out of range", at);
    }
    products.emplace_back(std::move(rails));
  }
  while (next_line(line)) {
    if (line.find_first_not_of(" \t") != std::string_view::npos) {
      throw ParseError("unexpected content after products", pos);
    }
  }
  return SopFormula(header[0], std::move(products));
}

std::string serialize(const ExtractedForm& e) {
  return "EXTRACT " + std::to_string(e.pivot) + "\nTERM_A\n" + serialize(e.term_a) + "REST\n" +
         serialize(e.rest);
}

}  // namespace monocirc
