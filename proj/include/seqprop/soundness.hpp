// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "seqprop/axioms.hpp"
#include "seqprop/valuation.hpp"

namespace seqprop {

struct AxiomInstance {
  Axiom axiom;
  Substitution sigma;
  Term lhs;
  Term rhs;
};

AxiomInstance instantiate(Axiom axiom, const Substitution& sigma);

/// Equal values and equal canonical derivatives from history h.
bool instance_holds(const Term& lhs, const Term& rhs, const Valuation& v, const History& h = {});

struct SoundnessOptions {
  std::size_t trials = 1'000;
  std::uint64_t seed = 0;
  Alphabet alphabet = Alphabet({"a", "b"});
  /// Node bound for the random closed terms substituted for metavariables.
  std::size_t max_term_size = 7;
  /// Tabulated valuations of this depth; without it cells are drawn lazily.
  std::optional<std::size_t> depth;
};

struct SoundnessCounterexample {
  AxiomInstance instance;
  Valuation valuation;
  Outcome lhs;
  Outcome rhs;
};

struct SoundnessResult {
  bool holds = true;
  std::size_t checked = 0;
  /// Trials whose evaluation left the depth bound.
  std::size_t skipped = 0;
  std::optional<SoundnessCounterexample> counterexample;
};

/// Random instances of the axiom against random lawful valuations of the
/// variety; stops at the first instance whose sides differ in value or in
/// derivative. Under StatCounter the antecedent metavariables of CPstat and
/// CPcontr range over atoms and constants only.
SoundnessResult check_axiom_soundness(SemVariety variety, Axiom axiom, const SoundnessOptions& opt = {});

}  // namespace seqprop
