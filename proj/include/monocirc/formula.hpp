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

// Textual formula front-end.
//
//   formula := [ "INPUTS" <n> [";"] ] or
//   or      := and ( "|" and )*
//   and     := not ( "&" not )*
//   not     := "!"* atom
//   atom    := "x"<digits> | "0" | "1" | "(" or ")"
//
// "¬", "∧" and "∨" are accepted for "!", "&" and "|". Binary operators are
// left-associative; "!" binds tighter than "&", which binds tighter than "|".

#include <string>
#include <string_view>

#include "monocirc/circuit.hpp"

namespace monocirc {

/// Largest accepted variable index plus one.
inline constexpr std::uint32_t kMaxFormulaInputs = 1u << 20;

/// Input arity is one more than the largest variable index, unless an
/// INPUTS pragma declares it. Throws ParseError.
Circuit parse_formula(std::string_view source, Sharing sharing = Sharing::On);

/// Tree-shaped rendering with the fewest parentheses the grammar needs to
/// reproduce the same tree. Shared subcircuits are repeated. An INPUTS pragma
/// is emitted only when the arity is not implied by the variables used.
std::string print_formula(const Circuit& c);

}  // namespace monocirc
