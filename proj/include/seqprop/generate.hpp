// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "seqprop/ba_term.hpp"
#include "seqprop/term.hpp"

namespace seqprop {

using Rng = std::mt19937_64;

/// All closed terms over the alphabet with at most max_size nodes, ordered by
/// size; leaves come as F, T, then atoms in alphabet order. Throws
/// SizeGuardError when the pool would exceed `limit` terms.
std::vector<Term> enumerate_closed_terms(const Alphabet& alphabet, std::size_t max_size,
                                         std::size_t limit = 2'000'000);

struct TermShape {
  std::size_t max_size = 13;
  /// Variables that may appear at leaves; empty for closed terms.
  std::vector<std::string> vars;
  /// Chance that a leaf is a constant rather than an atom or variable.
  double const_weight = 0.3;
};

Term random_term(Rng& rng, const Alphabet& alphabet, const TermShape& shape);
BATerm random_ba_term(Rng& rng, const std::vector<std::string>& atoms, const std::vector<std::string>& vars,
                      std::size_t max_size);

}  // namespace seqprop
