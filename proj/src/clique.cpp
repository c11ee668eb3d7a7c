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

#include "monocirc/clique.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "monocirc/error.hpp"

namespace monocirc {

CliqueParams::CliqueParams(std::uint32_t m, std::uint32_t s) : m_(m), s_(s) {
  if (m < 2) throw std::invalid_argument("clique: m must be at least 2, got " + std::to_string(m));
  if (s < 1 || s > m) {
    throw std::invalid_argument("clique: s must satisfy 1 <= s <= m, got s=" + std::to_string(s) +
                                ", m=" + std::to_string(m));
  }
  if (m > 65535) throw std::invalid_argument("clique: m too large");
}

VarId edge_index(std::uint32_t i, std::uint32_t j, std::uint32_t m) {
  if (i >= j || j >= m) {
    throw std::invalid_argument("edge_index: need 0 <= i < j < m, got (" + std::to_string(i) + "," +
                                std::to_string(j) + ") with m=" + std::to_string(m));
  }
  // Pairs before row i: (m-1) + (m-2) + ... + (m-i).
  const std::uint64_t before = std::uint64_t{i} * m - std::uint64_t{i} * (i + 1) / 2;
  return VarId{static_cast<std::uint32_t>(before + (j - i - 1))};
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact at every step; guard the multiplication.
    const std::uint64_t f = n - k + i;
    if (r > std::numeric_limits<std::uint64_t>::max() / f) return std::numeric_limits<std::uint64_t>::max();
    r = r * f / i;
  }
  return r;
}

NodeRef build_clique_into(CircuitBuilder& b, const CliqueParams& p, std::uint64_t budget) {
  const std::uint32_t m = p.m();
  const std::uint32_t s = p.s();
  if (b.input_arity() < p.num_edges()) throw ArityMismatch(p.num_edges(), b.input_arity());
  const std::uint64_t subsets = binomial(m, s);
  if (subsets > budget) throw CapExceeded("clique subsets", subsets, budget);
  if (s == 1) return b.constant(true);

  std::vector<std::uint32_t> subset(s);
  for (std::uint32_t i = 0; i < s; ++i) subset[i] = i;
  std::vector<NodeRef> products;
  std::vector<NodeRef> edges;
  products.reserve(subsets);
  while (true) {
    edges.clear();
    for (std::uint32_t a = 0; a < s; ++a) {
      for (std::uint32_t c = a + 1; c < s; ++c) edges.push_back(b.input(edge_index(subset[a], subset[c], m)));
    }
    products.push_back(b.make_and(edges));
    // Next combination in lexicographic order.
    int k = static_cast<int>(s) - 1;
    while (k >= 0 && subset[k] == m - s + static_cast<std::uint32_t>(k)) --k;
    if (k < 0) break;
    ++subset[k];
    for (std::uint32_t t = static_cast<std::uint32_t>(k) + 1; t < s; ++t) subset[t] = subset[t - 1] + 1;
  }
  return b.make_or(products);
}

Circuit build_clique(const CliqueParams& p, const CliqueBuildOptions& options) {
  CircuitBuilder b(p.num_edges(), options.sharing);
  const NodeRef out = build_clique_into(b, p, options.budget);
  return std::move(b).finish(out);
}

bool clique_oracle(const CliqueParams& p, const Assignment& a) {
  const std::uint32_t m = p.m();
  if (a.size() != p.num_edges()) throw ArityMismatch(p.num_edges(), a.size());
  if (m > 63) throw std::invalid_argument("clique_oracle supports m <= 63");
  // Neighbourhood masks; edges are read in row order independently of edge_index.
  std::vector<std::uint64_t> adj(m, 0);
  std::size_t k = 0;
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = i + 1; j < m; ++j, ++k) {
      if (a[k]) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
      }
    }
  }
  const std::uint32_t s = p.s();
  // Gosper's hack over all m-bit masks with exactly s bits set.
  std::uint64_t mask = (std::uint64_t{1} << s) - 1;
  const std::uint64_t limit = std::uint64_t{1} << m;
  while (mask < limit) {
    bool complete = true;
    for (std::uint64_t rest = mask; rest && complete; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint64_t others = mask & ~(std::uint64_t{1} << v);
      complete = (adj[v] & others) == others;
    }
    if (complete) return true;
    const std::uint64_t low = mask & -mask;
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return false;
}

Assignment edges_assignment(const CliqueParams& p,
                            std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> edges) {
  Assignment a(p.num_edges());
  for (auto [i, j] : edges) a.set(edge_index(i, j, p.m()).index, true);
  return a;
}

}  // namespace monocirc
