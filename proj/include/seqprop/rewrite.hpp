// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqprop/term.hpp"

namespace seqprop {

/// R1: x<|T|>y -> x; R2: x<|F|>y -> y; R3: T<|x|>F -> x;
/// R4: x<|(y<|z|>v)|>w -> (x<|y|>w)<|z|>(x<|v|>w).
enum class RuleId { R1, R2, R3, R4 };

struct RewriteRule {
  RuleId id;
  Term lhs;
  Term rhs;
};

/// The four rules, with variables as metavariables.
const std::vector<RewriteRule>& rewrite_rules();
std::string rule_name(RuleId id);

enum class Dir { Left, Ante, Right };
using Position = std::vector<Dir>;

/// "root", or the steps joined by '.', e.g. "ante.left".
std::string position_string(const Position& p);
const Term& subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, Term replacement);

struct RewriteStep {
  Term term;
  RuleId rule;
  Position position;
};

/// Applies the first matching rule (R1..R4) to a redex; nullopt if none.
std::optional<std::pair<Term, RuleId>> rewrite_root(const Term& t);

/// One step at the leftmost-innermost redex; nullopt on normal forms.
std::optional<RewriteStep> rewrite_step(const Term& t);
/// One step at the leftmost-outermost redex.
std::optional<RewriteStep> rewrite_step_outermost(const Term& t);

using RewriteTrace = std::vector<RewriteStep>;

/// `step <n>: <rule id> at <path> => <printed term>`, one line per step.
std::string format_trace(const RewriteTrace& trace);

struct NormalForm {
  Term term;
  RewriteTrace trace;
};

/// Leftmost-innermost normalization; the trace is filled when requested.
NormalForm normal_form(const Term& t, bool record_trace = true);
/// Normal form only; memoized innermost strategy, no trace.
Term nf(const Term& t);
/// Leftmost-outermost normalization (for strategy-independence checks).
NormalForm normal_form_outermost(const Term& t, bool record_trace = true);

bool is_normal(const Term& t);

/// CP-provable equality, decided by comparing normal forms. Open terms allowed.
bool prove_equal_cp(const Term& s, const Term& t);

/// The seven overlaps of the rule set, instantiated with their unifiers.
std::vector<std::pair<Term, Term>> critical_pairs();
bool join(const Term& u, const Term& v);

}  // namespace seqprop
