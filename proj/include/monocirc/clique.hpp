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

// CLIQUE(m, s): the Boolean function over the C(m,2) edge variables of an
// undirected graph on m vertices that is 1 iff the graph has an s-clique.
// Vertices are numbered 0..m-1; edge (i,j) with i<j is variable
// edge_index(i, j, m), the rank of (i,j) in lexicographic order.

#include <cstdint>

#include "monocirc/circuit.hpp"
#include "monocirc/eval.hpp"

namespace monocirc {

class CliqueParams {
 public:
  /// Throws std::invalid_argument unless m ≥ 2 and 1 ≤ s ≤ m.
  CliqueParams(std::uint32_t m, std::uint32_t s);

  std::uint32_t m() const { return m_; }
  std::uint32_t s() const { return s_; }
  std::uint32_t num_edges() const { return m_ * (m_ - 1) / 2; }

  friend bool operator==(const CliqueParams&, const CliqueParams&) = default;

 private:
  std::uint32_t m_;
  std::uint32_t s_;
};

VarId edge_index(std::uint32_t i, std::uint32_t j, std::uint32_t m);

/// Binomial coefficient; saturates at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

inline constexpr std::uint64_t kDefaultCliqueBudget = 1'000'000;

struct CliqueBuildOptions {
  Sharing sharing = Sharing::On;
  /// Upper bound on the number of s-subsets (products) generated.
  std::uint64_t budget = kDefaultCliqueBudget;
};

/// OR over all s-subsets (lexicographic) of the AND over each subset's edge
/// variables, both left-associated. s = 1 gives constant 1, s = 2 the OR of
/// all edges. Throws CapExceeded when C(m,s) exceeds the budget.
Circuit build_clique(const CliqueParams& p, const CliqueBuildOptions& options = {});

/// Emits the same structure into an existing builder whose inputs include
/// the edge variables.
NodeRef build_clique_into(CircuitBuilder& b, const CliqueParams& p,
                          std::uint64_t budget = kDefaultCliqueBudget);

/// Direct graph search over the adjacency encoded by `a`; does not use
/// circuits.
bool clique_oracle(const CliqueParams& p, const Assignment& a);

/// Convenience: the assignment with exactly the given edges present.
Assignment edges_assignment(const CliqueParams& p,
                            std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> edges);

}  // namespace monocirc
