// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace seqprop::cli {

enum class Command { Normalize, Prove, BasicForm, Eval, TruthTable, ToBA, FromBA, Independence, CheckLaws };

/// Exit codes: 0 equal or ok, 1 not equal or invalid, 2 usage or input
/// error, 3 refused by a size guard or an open independence question.
struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

/// Runs one command. argv excludes the program name. A term argument of "-"
/// is read from stdin_text. SEQPROP_SEED supplies the default seed.
Result run(const std::vector<std::string>& argv, std::string_view stdin_text = {});

}  // namespace seqprop::cli
