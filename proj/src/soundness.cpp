// SPDX-License-Identifier: MIT
#include "seqprop/soundness.hpp"

#include <algorithm>

#include "seqprop/generate.hpp"

namespace seqprop {

namespace {

bool antecedent_meta(Axiom axiom, const std::string& var) {
  if (axiom == Axiom::CPcontr) return var == "Y";
  if (axiom == Axiom::CPstat) return var == "Y" || var == "U";
  return false;
}

Term random_leaf(Rng& rng, const Alphabet& alphabet) {
  const std::size_t i = std::uniform_int_distribution<std::size_t>(0, alphabet.size() + 1)(rng);
  if (i == 0) return Term::t();
  if (i == 1) return Term::f();
  return Term::atom(alphabet[i - 2]);
}

}  // namespace

AxiomInstance instantiate(Axiom axiom, const Substitution& sigma) {
  const AxiomSchema& s = schema(axiom);
  return {axiom, sigma, substitute(s.lhs, sigma), substitute(s.rhs, sigma)};
}

bool instance_holds(const Term& lhs, const Term& rhs, const Valuation& v, const History& h) {
  const Outcome l = run(lhs, v, h);
  const Outcome r = run(rhs, v, h);
  return l.value == r.value && l.history == r.history;
}

SoundnessResult check_axiom_soundness(SemVariety variety, Axiom axiom, const SoundnessOptions& opt) {
  const AxiomSchema& s = schema(axiom);
  Rng rng(opt.seed);
  TermShape shape;
  shape.max_size = opt.max_term_size;
  SoundnessResult result;
  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    Substitution sigma;
    for (const auto& var : s.metavars) {
      const bool leaf = variety == SemVariety::StatCounter && antecedent_meta(axiom, var);
      sigma.insert_or_assign(var, leaf ? random_leaf(rng, opt.alphabet) : random_term(rng, opt.alphabet, shape));
    }
    if (s.has_atom_meta) {
      const std::size_t i = std::uniform_int_distribution<std::size_t>(0, opt.alphabet.size() - 1)(rng);
      sigma.insert_or_assign(std::string(kAtomMeta), Term::atom(opt.alphabet[i]));
    }
    AxiomInstance inst = instantiate(axiom, sigma);
    const std::uint64_t vseed = rng();
    try {
      if (opt.depth) {
        Valuation v = random_valuation(variety, opt.alphabet, *opt.depth, vseed);
        const Outcome l = run(inst.lhs, v, {});
        const Outcome r = run(inst.rhs, v, {});
        ++result.checked;
        if (l.value != r.value || l.history != r.history) {
          result.holds = false;
          result.counterexample = SoundnessCounterexample{std::move(inst), std::move(v), l, r};
          return result;
        }
      } else {
        LazyValuation lazy(variety, opt.alphabet, vseed);
        const Outcome l = run_in(inst.lhs, lazy, {});
        const Outcome r = run_in(inst.rhs, lazy, {});
        ++result.checked;
        if (l.value != r.value || l.history != r.history) {
          result.holds = false;
          result.counterexample = SoundnessCounterexample{std::move(inst), lazy.snapshot(), l, r};
          return result;
        }
      }
    } catch (const DepthExceeded&) {
      ++result.skipped;
    }
  }
  return result;
}

}  // namespace seqprop
