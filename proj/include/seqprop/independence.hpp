// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "seqprop/axioms.hpp"
#include "seqprop/soundness.hpp"
#include "seqprop/valuation.hpp"

namespace seqprop {

enum class ModelId { Phi1, Phi2, Phi3, Phi4, PhiContr };

std::string_view model_name(ModelId m);

/// Carrier values. Phi1 and Phi2 use 1 for T and 0 for F.
using ModelValue = boost::multiprecision::cpp_int;

/// A finite interpretation; atom a_i is alphabet[i - 1].
struct FiniteInterpretation {
  ModelId id;
  Alphabet alphabet;
};

/// Bottom-up value of a closed term.
///   Phi1:     atoms T, cond Q v R
///   Phi2:     atoms T, cond P ^ Q
///   Phi3:     T=0, F=n+1, a_i=i, cond P if Q <= 1 else R
///   Phi4:     T=1, F=0, a_i=i+1, cond P if Q=1, R if Q=0, P*Q otherwise
///   PhiContr: T=1, F=0, a_i=i+1, cond Q*P + (1-Q)*R
ModelValue interpret(const FiniteInterpretation& m, const Term& p);

/// "T"/"F" for the Boolean models, decimal otherwise.
std::string format_value(ModelId m, const ModelValue& v);

struct InstanceCheck {
  bool holds = true;
  std::size_t checked = 0;
  std::optional<AxiomInstance> counterexample;
  ModelValue lhs_value;
  ModelValue rhs_value;
};

/// Every substitution of closed terms with at most k nodes for the
/// metavariables (and of alphabet atoms for the schema atom), in pool order
/// with the last metavariable varying fastest. Substitutions whose
/// metavariables take the same values are decided together; `checked`
/// counts substitutions. SizeGuardError above 10^7 value tuples.
InstanceCheck check_axiom_instances(const FiniteInterpretation& m, Axiom axiom, std::size_t k);

enum class AxiomSet { CP, CPrp, CPcr, CPst };

std::string_view axiom_set_name(AxiomSet s);
std::optional<AxiomSet> axiom_set_from_name(std::string_view name);
const std::vector<Axiom>& axioms_of(AxiomSet s);

enum class Backend { FiniteModel, Valuation };

struct AxiomVerdict {
  Axiom axiom;
  bool holds;
  std::size_t checked;
};

struct IndependenceReport {
  AxiomSet set;
  Axiom target;
  /// Model or variety name, e.g. "Phi3" or "rp1".
  std::string model;
  Backend backend;
  std::size_t bound;
  Alphabet alphabet;
  std::vector<AxiomVerdict> verdicts;
  /// The stored witness instance, and the first enumerated one for finite models.
  AxiomInstance witness;
  std::string witness_lhs;
  std::string witness_rhs;
  bool witness_fails = false;
  std::optional<AxiomInstance> first_counterexample;
  std::optional<Valuation> witness_valuation;

  /// Non-targets hold on every checked instance and the target fails.
  bool valid() const;
};

struct IndependenceOptions {
  /// Closed-term pool bound for finite models.
  std::size_t bound = 3;
  /// Random trials per non-target axiom for the valuation backend.
  std::size_t trials = 2'000;
  std::uint64_t seed = 0;
};

/// Builds the report for a target the model catalogue resolves. Throws
/// UnresolvedIndependence for CP4 in CPcr and for CP1 and CP4 in CPst, and
/// Error when the target is not an axiom of the set.
IndependenceReport independence_report(AxiomSet set, Axiom target, const Alphabet& alphabet,
                                       const IndependenceOptions& opt = {});

/// Line-oriented rendering: model, pool bound, one verdict per axiom and
/// the counterexample in term syntax.
std::string format_report(const IndependenceReport& r);

struct StatCounterWitness {
  Valuation valuation;
  Term lhs;
  Term rhs;
};

/// Alphabet {a, b}, depth 2, with the instance
/// (F <| a |> T) <| b |> F  versus  (F <| b |> F) <| a |> (T <| b |> F).
StatCounterWitness statcounter_witness();

/// Antecedent subterms of both sides, used as probes for the StatCounter laws.
std::vector<Term> statcounter_probes(const Term& lhs, const Term& rhs);

}  // namespace seqprop
