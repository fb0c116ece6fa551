// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <set>
#include <string>

#include "seqprop/ba_term.hpp"
#include "seqprop/term.hpp"

namespace seqprop {

/// Truth values for atoms and variables, keyed by name.
using Assignment = std::map<std::string, bool>;

/// (t <| r |> s)' = (!r' | t') & (r' | s'); leaves map to themselves.
BATerm to_ba(const Term& t);

/// (!t)* = F <| t* |> T, (t & r)* = r* <| t* |> F, (t | r)* = T <| t* |> r*.
Term from_ba(const BATerm& t);

/// Atom and variable names occurring in t.
std::set<std::string> ba_symbols(const BATerm& t);

/// Classical evaluation; throws std::out_of_range for unassigned symbols.
bool ba_eval(const BATerm& t, const Assignment& rho);

/// Truth-table equality over the union of symbols. SizeGuardError beyond 20.
bool ba_equal(const BATerm& s, const BATerm& t);

/// Static-variety equality through the BA translation; open terms allowed.
bool decide_st_via_ba(const Term& p, const Term& q);

}  // namespace seqprop
