// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "seqprop/ba_term.hpp"
#include "seqprop/term.hpp"

namespace seqprop {

/// Parses the ASCII term syntax.
///
///   expr    := seq
///   seq     := biimp (';' biimp)*
///   biimp   := imp (('<->' | '>-<') imp)*
///   imp     := or (('->' | '<-') or)*
///   or      := and (('or>' | '<or') and)*
///   and     := cond (('&>' | '<&') cond)*
///   cond    := unary ['<|' unary '|>' unary]
///   unary   := '~' unary | 'T' | 'F' | atom | Var | '(' expr ')'
///
/// Binary sugar is left-associative and desugars on the spot. A conditional
/// argument that is itself a conditional or a sugared expression needs
/// parentheses. With an alphabet, undeclared atoms raise AlphabetError.
Term parse_term(std::string_view text, const std::optional<Alphabet>& alphabet = std::nullopt);

/// Fully parenthesized, sugar-free rendering; parse_term inverts it exactly.
std::string print_term(const Term& t);

/// Boolean-algebra syntax: '!' binds tighter than '&', which binds tighter
/// than '|'; both binary operators are left-associative.
BATerm parse_ba(std::string_view text);
std::string print_ba(const BATerm& t);

}  // namespace seqprop
