// SPDX-License-Identifier: MIT
#pragma once

#include <string_view>

#include "seqprop/term.hpp"

namespace seqprop {

enum class Variety { Fr, Rp, Cr, St };

std::string_view variety_name(Variety v);

/// Membership in BF, BF_rp, BF_cr or BF_st over the alphabet.
bool is_basic_form(const Term& p, Variety v, const Alphabet& alphabet);

/// The BF image of a closed term: atoms become T<|a|>F and compound
/// antecedents are pushed down into the branches.
Term to_basic_form(const Term& p);

/// BF_rp image. A branch that starts with the parent's atom collapses to
/// a o Q, where Q is its first descendant along that side not headed by it.
Term to_bf_rp(const Term& p, const Alphabet& alphabet);

/// BF_cr image. A branch that starts with the parent's atom is replaced by
/// its own branch on the same side.
Term to_bf_cr(const Term& p, const Alphabet& alphabet);

/// BF_st image: the full tree with level i labelled alphabet[i] and 2^n
/// constant leaves, built by the merge recursion.
Term to_bf_st(const Term& p, const Alphabet& alphabet);

/// P =_v Q for closed terms over the alphabet. Fr accepts open terms.
bool decide(Variety v, const Term& p, const Term& q, const Alphabet& alphabet);

}  // namespace seqprop
