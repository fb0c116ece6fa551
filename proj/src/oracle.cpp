// SPDX-License-Identifier: MIT
#include <map>

#include "seqprop/valuation.hpp"

namespace seqprop {

namespace {

struct NeedCell {
  Cell cell;
};

/// Reads free cells from a partial assignment and signals the first missing one.
class PartialModel {
 public:
  PartialModel(SemVariety v, const std::map<Cell, bool>& assigned) : v_(v), assigned_(assigned) {}

  bool yield(const History& h, const std::string& a) { return cell({canonicalize(v_, h), a}); }

  History derive_atom(const History& h, const std::string& a) const {
    History g = h;
    g.push_back(a);
    return canonicalize(v_, g);
  }

 private:
  bool cell(const Cell& c) {
    if (auto it = memo_.find(c); it != memo_.end()) return it->second;
    auto forced = forced_value(v_, c, [this](const Cell& s) { return cell(s); });
    bool b;
    if (forced) {
      b = *forced;
    } else if (auto it = assigned_.find(c); it != assigned_.end()) {
      b = it->second;
    } else {
      throw NeedCell{c};
    }
    memo_[c] = b;
    return b;
  }

  SemVariety v_;
  const std::map<Cell, bool>& assigned_;
  std::map<Cell, bool> memo_;
};

/// States that no valuation of the variety can tell apart share a key.
History state_key(SemVariety v, const Alphabet& alphabet, const History& h) {
  switch (v) {
    case SemVariety::St: return {};
    case SemVariety::Rp:
    case SemVariety::Cr:
    case SemVariety::Nr:
    case SemVariety::StatCounter:
      if (alphabet.size() == 1) return {};
      return h;
    default: return h;
  }
}

enum class Verdict { Same, Differ, Unknown };

template <class Model>
bool agree(SemVariety v, const Term& p, const Term& q, const Alphabet& alphabet, Model& m, bool states) {
  const Outcome op = run_in(p, m, {});
  const Outcome oq = run_in(q, m, {});
  if (op.value != oq.value) return false;
  return !states || state_key(v, alphabet, op.history) == state_key(v, alphabet, oq.history);
}

Verdict exhaustive(SemVariety v, const Term& p, const Term& q, const Alphabet& alphabet, bool states,
                   std::size_t budget) {
  std::vector<std::map<Cell, bool>> stack(1);
  std::size_t runs = 0;
  while (!stack.empty()) {
    std::map<Cell, bool> assigned = std::move(stack.back());
    stack.pop_back();
    if (++runs > budget) return Verdict::Unknown;
    try {
      PartialModel m(v, assigned);
      if (!agree(v, p, q, alphabet, m, states)) return Verdict::Differ;
    } catch (const NeedCell& need) {
      auto with_true = assigned;
      with_true[need.cell] = true;
      assigned[need.cell] = false;
      stack.push_back(std::move(with_true));
      stack.push_back(std::move(assigned));
    }
  }
  return Verdict::Same;
}

bool sampled(SemVariety v, const Term& p, const Term& q, const Alphabet& alphabet, bool states,
             const OracleOptions& opt) {
  for (std::size_t i = 0; i < opt.samples; ++i) {
    LazyValuation m(v, alphabet, opt.seed + i);
    if (!agree(v, p, q, alphabet, m, states)) return false;
  }
  return true;
}

bool compare(SemVariety v, const Term& p, const Term& q, const Alphabet& alphabet, bool states,
             const OracleOptions& opt) {
  require_closed(p, "oracle");
  require_closed(q, "oracle");
  require_alphabet(p, alphabet);
  require_alphabet(q, alphabet);
  switch (exhaustive(v, p, q, alphabet, states, opt.leaf_budget)) {
    case Verdict::Same: return true;
    case Verdict::Differ: return false;
    case Verdict::Unknown: break;
  }
  return sampled(v, p, q, alphabet, states, opt);
}

}  // namespace

bool equivalent(SemVariety v, const Term& p, const Term& q, const Alphabet& alphabet, const OracleOptions& opt) {
  return compare(v, p, q, alphabet, false, opt);
}

bool congruent_oracle(SemVariety v, const Term& p, const Term& q, const Alphabet& alphabet,
                      const OracleOptions& opt) {
  return compare(v, p, q, alphabet, true, opt);
}

bool congruent_oracle(Variety v, const Term& p, const Term& q, const Alphabet& alphabet, const OracleOptions& opt) {
  return congruent_oracle(sem_variety(v), p, q, alphabet, opt);
}

}  // namespace seqprop
