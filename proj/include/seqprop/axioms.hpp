// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqprop/term.hpp"

namespace seqprop {

enum class Axiom { CP1, CP2, CP3, CP4, CPrp1, CPrp2, CPcr1, CPcr2, CPstat, CPcontr, CP5 };

/// An equation schema. Metavariables are variables; the schema atom of the
/// rp and cr axioms is the variable named kAtomMeta and ranges over atoms only.
struct AxiomSchema {
  Axiom id;
  Term lhs;
  Term rhs;
  std::vector<std::string> metavars;  // term metavariables, in substitution order
  bool has_atom_meta = false;
};

inline constexpr std::string_view kAtomMeta = "A";

const std::vector<Axiom>& all_axioms();
std::string_view axiom_name(Axiom a);
/// Case-insensitive lookup ("cp4", "CPrp1", ...).
std::optional<Axiom> axiom_from_name(std::string_view name);
const AxiomSchema& schema(Axiom a);

using Substitution = std::map<std::string, Term>;

/// Replaces every variable bound in sigma; unbound variables stay put.
Term substitute(const Term& t, const Substitution& sigma);

}  // namespace seqprop
