// SPDX-License-Identifier: MIT
#pragma once

#include <string_view>

#include "seqprop/basic_forms.hpp"
#include "seqprop/generate.hpp"
#include "seqprop/syntax.hpp"

namespace testing_support {

inline seqprop::Term P(std::string_view text) { return seqprop::parse_term(text); }

inline seqprop::Alphabet A(std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return seqprop::Alphabet(std::move(v));
}

inline std::vector<std::string> names(const seqprop::Alphabet& a) { return a.names(); }

}  // namespace testing_support
