// SPDX-License-Identifier: MIT
#include "seqprop/valuation.hpp"

#include <algorithm>
#include <cctype>

namespace seqprop {

namespace {

constexpr std::pair<SemVariety, std::string_view> kNames[] = {
    {SemVariety::Free, "free"}, {SemVariety::Rp, "rp"},   {SemVariety::Cr, "cr"},   {SemVariety::St, "st"},
    {SemVariety::Nr, "nr"},     {SemVariety::Rp1, "rp1"}, {SemVariety::Rp2, "rp2"}, {SemVariety::Cr1, "cr1"},
    {SemVariety::Cr2, "cr2"},   {SemVariety::StatCounter, "statcounter"},
};

bool collapses_runs(SemVariety v) {
  return v == SemVariety::Cr || v == SemVariety::Cr1 || v == SemVariety::Cr2 || v == SemVariety::StatCounter;
}

bool ends_with(const History& h, const std::string& a) { return !h.empty() && h.back() == a; }

Cell previous(const Cell& c) { return {History(c.history.begin(), c.history.end() - 1), c.atom}; }

bool draw_bit(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

std::vector<Cell> all_cells(SemVariety v, const Alphabet& alphabet, std::size_t depth) {
  std::vector<Cell> cells;
  for (auto& h : canonical_histories(v, alphabet, depth)) {
    for (const auto& a : alphabet.names()) cells.push_back({h, a});
  }
  return cells;
}

Valuation::Table to_table(const std::map<Cell, bool>& values) {
  Valuation::Table table;
  for (const auto& [c, b] : values) table[c.history][c.atom] = b;
  return table;
}

}  // namespace

std::string_view sem_variety_name(SemVariety v) {
  for (const auto& [id, name] : kNames) {
    if (id == v) return name;
  }
  return "?";
}

std::optional<SemVariety> sem_variety_from_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "fr") return SemVariety::Free;
  for (const auto& [id, n] : kNames) {
    if (n == lower) return id;
  }
  return std::nullopt;
}

SemVariety sem_variety(Variety v) {
  switch (v) {
    case Variety::Fr: return SemVariety::Free;
    case Variety::Rp: return SemVariety::Rp;
    case Variety::Cr: return SemVariety::Cr;
    case Variety::St: return SemVariety::St;
  }
  return SemVariety::Free;
}

const std::vector<SemVariety>& all_sem_varieties() {
  static const std::vector<SemVariety> all = [] {
    std::vector<SemVariety> out;
    for (const auto& entry : kNames) out.push_back(entry.first);
    return out;
  }();
  return all;
}

std::string history_string(const History& h) {
  if (h.empty()) return "eps";
  std::string out;
  for (const auto& a : h) {
    if (!out.empty()) out += '.';
    out += a;
  }
  return out;
}

History canonicalize(SemVariety v, const History& h) {
  if (v == SemVariety::St) return {};
  History out;
  out.reserve(h.size());
  for (const auto& a : h) {
    if (collapses_runs(v) && ends_with(out, a)) continue;
    if (v == SemVariety::Nr && std::find(out.begin(), out.end(), a) != out.end()) continue;
    out.push_back(a);
  }
  return out;
}

std::vector<History> canonical_histories(SemVariety v, const Alphabet& alphabet, std::size_t depth) {
  std::vector<History> out{History{}};
  if (v == SemVariety::St) return out;
  std::vector<History> level{History{}};
  for (std::size_t len = 1; len <= depth; ++len) {
    std::vector<History> next;
    for (const auto& h : level) {
      for (const auto& a : alphabet.names()) {
        if (collapses_runs(v) && ends_with(h, a)) continue;
        if (v == SemVariety::Nr && std::find(h.begin(), h.end(), a) != h.end()) continue;
        History g = h;
        g.push_back(a);
        next.push_back(std::move(g));
      }
    }
    if (next.empty()) break;
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

std::optional<Cell> source_cell(SemVariety v, const Cell& cell) {
  switch (v) {
    case SemVariety::Rp:
    case SemVariety::Cr:
    case SemVariety::StatCounter:
      if (ends_with(cell.history, cell.atom)) return previous(cell);
      return std::nullopt;
    case SemVariety::Nr: {
      auto it = std::find(cell.history.begin(), cell.history.end(), cell.atom);
      if (it == cell.history.end()) return std::nullopt;
      return Cell{History(cell.history.begin(), it), cell.atom};
    }
    default: return std::nullopt;
  }
}

std::optional<bool> forced_value(SemVariety v, const Cell& cell,
                                 const std::function<bool(const Cell&)>& shorter) {
  if (auto src = source_cell(v, cell)) return shorter(*src);
  switch (v) {
    case SemVariety::Rp1:
    case SemVariety::Cr1:
      if (ends_with(cell.history, cell.atom) && !shorter(previous(cell))) return false;
      return std::nullopt;
    case SemVariety::Rp2:
    case SemVariety::Cr2:
      if (ends_with(cell.history, cell.atom) && shorter(previous(cell))) return true;
      return std::nullopt;
    default: return std::nullopt;
  }
}

// Valuation -------------------------------------------------------------------

Valuation::Valuation(SemVariety variety, Alphabet alphabet) : variety_(variety), alphabet_(std::move(alphabet)) {}

Valuation::Valuation(SemVariety variety, Alphabet alphabet, std::size_t depth, Table table)
    : variety_(variety), alphabet_(std::move(alphabet)), depth_(depth), table_(std::move(table)) {
  for (const auto& [h, row] : table_) {
    for (const auto& a : h) alphabet_.index_of(a);
    if (canonicalize(variety_, h) != h) {
      throw ConstraintError("history " + history_string(h) + " is not canonical for " +
                            std::string(sem_variety_name(variety_)));
    }
    if (h.size() > depth_) {
      throw ConstraintError("history " + history_string(h) + " exceeds depth " + std::to_string(depth_));
    }
    for (const auto& entry : row) alphabet_.index_of(entry.first);
  }
}

Valuation Valuation::constant(bool value, SemVariety variety, Alphabet alphabet) {
  Valuation v(variety, std::move(alphabet));
  v.special_ = value ? Special::ConstTrue : Special::ConstFalse;
  return v;
}

bool Valuation::yield(const History& h, const std::string& a) const {
  alphabet_.index_of(a);
  if (special_ != Special::None) return special_ == Special::ConstTrue;
  History c = canonicalize(variety_, h);
  if (c.size() > depth_) {
    throw DepthExceeded("history " + history_string(c) + " exceeds depth " + std::to_string(depth_));
  }
  auto row = table_.find(c);
  if (row == table_.end()) return false;
  auto it = row->second.find(a);
  return it != row->second.end() && it->second;
}

History Valuation::derive_atom(const History& h, const std::string& a) const {
  alphabet_.index_of(a);
  if (special_ != Special::None) return h;
  History g = h;
  g.push_back(a);
  History c = canonicalize(variety_, g);
  if (c.size() > depth_) {
    throw DepthExceeded("history " + history_string(c) + " exceeds depth " + std::to_string(depth_));
  }
  return c;
}

Outcome run(const Term& p, const Valuation& v, const History& h) {
  require_closed(p, "evaluation");
  History start = v.special() == Special::None ? canonicalize(v.variety(), h) : h;
  return run_in(p, v, std::move(start));
}

bool eval(const Term& p, const Valuation& v, const History& h) { return run(p, v, h).value; }

History derivative(const Term& p, const Valuation& v, const History& h) { return run(p, v, h).history; }

bool check_constraints(const Valuation& v) {
  if (v.special() != Special::None) return true;
  for (const auto& [h, row] : v.table()) {
    if (canonicalize(v.variety(), h) != h || h.size() > v.depth()) return false;
  }
  auto lookup = [&](const Cell& c) { return v.yield(c.history, c.atom); };
  for (const auto& c : all_cells(v.variety(), v.alphabet(), v.depth())) {
    auto forced = forced_value(v.variety(), c, lookup);
    if (forced && *forced != lookup(c)) return false;
  }
  return true;
}

bool check_constraints(const Valuation& v, const std::vector<Term>& probes) {
  if (!check_constraints(v)) return false;
  if (v.special() != Special::None) return true;
  for (const auto& q : probes) {
    for (const auto& h : canonical_histories(v.variety(), v.alphabet(), v.depth())) {
      try {
        const Outcome once = run(q, v, h);
        const Outcome twice = run(q, v, once.history);
        if (once.value != twice.value || once.history != twice.history) return false;
      } catch (const DepthExceeded&) {
        continue;
      }
    }
  }
  return true;
}

Valuation complete_valuation(SemVariety variety, const Alphabet& alphabet, std::size_t depth,
                             const std::map<Cell, bool>& partial) {
  std::map<Cell, bool> values;
  auto lookup = [&](const Cell& c) { return values.at(c); };
  for (auto& c : all_cells(variety, alphabet, depth)) {
    auto forced = forced_value(variety, c, lookup);
    bool b = false;
    if (forced) {
      b = *forced;
    } else if (auto it = partial.find(c); it != partial.end()) {
      b = it->second;
    }
    values.emplace(std::move(c), b);
  }
  return Valuation(variety, alphabet, depth, to_table(values));
}

Valuation random_valuation(SemVariety variety, const Alphabet& alphabet, std::size_t depth, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<Cell, bool> values;
  auto lookup = [&](const Cell& c) { return values.at(c); };
  for (auto& c : all_cells(variety, alphabet, depth)) {
    auto forced = forced_value(variety, c, lookup);
    const bool b = forced ? *forced : draw_bit(rng);
    values.emplace(std::move(c), b);
  }
  return Valuation(variety, alphabet, depth, to_table(values));
}

std::vector<Valuation> enumerate_valuations(SemVariety variety, const Alphabet& alphabet, std::size_t depth) {
  if (alphabet.size() > 2 || depth > 3) {
    throw SizeGuardError("exhaustive valuation enumeration needs |alphabet| <= 2 and depth <= 3");
  }
  const std::vector<Cell> cells = all_cells(variety, alphabet, depth);
  const bool equational = variety == SemVariety::Free || variety == SemVariety::Rp || variety == SemVariety::Cr ||
                          variety == SemVariety::St || variety == SemVariety::Nr ||
                          variety == SemVariety::StatCounter;
  std::vector<Cell> free_cells;
  for (const auto& c : cells) {
    if (!equational || !source_cell(variety, c)) free_cells.push_back(c);
  }
  if (free_cells.size() > 20) {
    throw SizeGuardError(std::to_string(free_cells.size()) + " free cells exceed the enumeration limit of 20");
  }
  std::vector<Valuation> out;
  const std::size_t n = free_cells.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::map<Cell, bool> partial;
    for (std::size_t i = 0; i < n; ++i) partial[free_cells[i]] = ((mask >> (n - 1 - i)) & 1U) != 0;
    if (equational) {
      out.push_back(complete_valuation(variety, alphabet, depth, partial));
    } else {
      Valuation v(variety, alphabet, depth, to_table(partial));
      if (check_constraints(v)) out.push_back(std::move(v));
    }
  }
  return out;
}

// LazyValuation ---------------------------------------------------------------

LazyValuation::LazyValuation(SemVariety variety, Alphabet alphabet, std::uint64_t seed,
                             std::optional<std::size_t> depth)
    : variety_(variety), alphabet_(std::move(alphabet)), rng_(seed), depth_(depth) {}

bool LazyValuation::cell(const Cell& c) {
  if (auto it = memo_.find(c); it != memo_.end()) return it->second;
  auto forced = forced_value(variety_, c, [this](const Cell& s) { return cell(s); });
  bool b;
  if (forced) {
    b = *forced;
  } else {
    b = draw_bit(rng_);
    drawn_[c] = b;
  }
  memo_[c] = b;
  return b;
}

bool LazyValuation::yield(const History& h, const std::string& a) {
  alphabet_.index_of(a);
  History c = canonicalize(variety_, h);
  if (depth_ && c.size() > *depth_) {
    throw DepthExceeded("history " + history_string(c) + " exceeds depth " + std::to_string(*depth_));
  }
  max_length_ = std::max(max_length_, c.size());
  return cell({std::move(c), a});
}

History LazyValuation::derive_atom(const History& h, const std::string& a) const {
  alphabet_.index_of(a);
  History g = h;
  g.push_back(a);
  History c = canonicalize(variety_, g);
  if (depth_ && c.size() > *depth_) {
    throw DepthExceeded("history " + history_string(c) + " exceeds depth " + std::to_string(*depth_));
  }
  max_length_ = std::max(max_length_, c.size());
  return c;
}

Valuation LazyValuation::snapshot() const { return complete_valuation(variety_, alphabet_, max_length_, drawn_); }

}  // namespace seqprop
