// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "seqprop/basic_forms.hpp"
#include "seqprop/errors.hpp"
#include "seqprop/term.hpp"

namespace seqprop {

/// Valuation varieties. Rp1, Rp2, Cr1, Cr2 and StatCounter only serve as
/// countermodels for independence.
enum class SemVariety { Free, Rp, Cr, St, Nr, Rp1, Rp2, Cr1, Cr2, StatCounter };

std::string_view sem_variety_name(SemVariety v);
std::optional<SemVariety> sem_variety_from_name(std::string_view name);
SemVariety sem_variety(Variety v);
const std::vector<SemVariety>& all_sem_varieties();

/// Atoms evaluated so far, oldest first.
using History = std::vector<std::string>;

/// "eps" for the empty history, otherwise the atoms joined by '.'.
std::string history_string(const History& h);

/// Canonical representative of the valuation state reached by h.
///   Free, Rp, Rp1, Rp2:        h itself
///   Cr, Cr1, Cr2, StatCounter: runs of one atom collapsed to a single copy
///   St:                        empty
///   Nr:                        first occurrence of each atom kept
History canonicalize(SemVariety v, const History& h);

/// All canonical histories of length <= depth, by length and then
/// lexicographically in alphabet order.
std::vector<History> canonical_histories(SemVariety v, const Alphabet& alphabet, std::size_t depth);

/// A table entry: the yield of `atom` in state `history`.
struct Cell {
  History history;
  std::string atom;
  friend bool operator<(const Cell& x, const Cell& y) {
    return std::tie(x.history, x.atom) < std::tie(y.history, y.atom);
  }
  friend bool operator==(const Cell& x, const Cell& y) { return x.history == y.history && x.atom == y.atom; }
};

/// Value a lawful table must give the cell (canonical history), given the
/// values of strictly shorter cells; nullopt when the cell is free.
std::optional<bool> forced_value(SemVariety v, const Cell& cell, const std::function<bool(const Cell&)>& shorter);

/// The shorter cell a forced cell copies, for varieties whose equations are
/// equalities; nullopt for free cells and for the implication varieties.
std::optional<Cell> source_cell(SemVariety v, const Cell& cell);

enum class Special { None, ConstTrue, ConstFalse };

/// A finite table over all canonical histories up to a depth bound.
/// Immutable; missing table entries read as false.
class Valuation {
 public:
  using Row = std::map<std::string, bool>;
  using Table = std::map<History, Row>;

  /// Throws AlphabetError for unknown atoms and ConstraintError for keys that
  /// are not canonical or exceed the depth. Equations are not enforced here.
  Valuation(SemVariety variety, Alphabet alphabet, std::size_t depth, Table table);

  /// T_RV or F_RV: constant yields, identity derivatives.
  static Valuation constant(bool value, SemVariety variety, Alphabet alphabet);

  SemVariety variety() const { return variety_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t depth() const { return depth_; }
  Special special() const { return special_; }
  const Table& table() const { return table_; }

  /// Lookup at canonicalize(h); DepthExceeded beyond the bound.
  bool yield(const History& h, const std::string& a) const;
  History derive_atom(const History& h, const std::string& a) const;

 private:
  Valuation(SemVariety variety, Alphabet alphabet);

  SemVariety variety_;
  Alphabet alphabet_;
  std::size_t depth_ = 0;
  Table table_;
  Special special_ = Special::None;
};

struct Outcome {
  bool value;
  History history;
};

/// Evaluates a closed term against any model exposing
/// `bool yield(const History&, const std::string&)` and
/// `History derive_atom(const History&, const std::string&)`.
template <class Model>
Outcome run_in(const Term& p, Model& model, History h) {
  switch (p.kind()) {
    case Kind::True: return {true, std::move(h)};
    case Kind::False: return {false, std::move(h)};
    case Kind::Atom: {
      const bool value = model.yield(h, p.name());
      return {value, model.derive_atom(h, p.name())};
    }
    case Kind::Var: throw OpenTermError("evaluation requires a closed term");
    case Kind::Cond: {
      Outcome c = run_in(p.ante(), model, std::move(h));
      return run_in(c.value ? p.left() : p.right(), model, std::move(c.history));
    }
  }
  return {false, std::move(h)};
}

/// P/H together with the derivative of H under P.
Outcome run(const Term& p, const Valuation& v, const History& h = {});
bool eval(const Term& p, const Valuation& v, const History& h = {});
History derivative(const Term& p, const Valuation& v, const History& h = {});

/// The variety's equations hold on every table entry.
bool check_constraints(const Valuation& v);

/// As above, and in addition Q/dQ(H) = Q/H and dQ(dQ(H)) = dQ(H) for every
/// probe Q and table history H. Checks that leave the depth bound are skipped.
bool check_constraints(const Valuation& v, const std::vector<Term>& probes);

/// Free cells drawn i.i.d. from a seeded mt19937_64; forced cells propagated
/// in canonical-history order.
Valuation random_valuation(SemVariety variety, const Alphabet& alphabet, std::size_t depth, std::uint64_t seed);

/// Every lawful table exactly once, in lexicographic order of the cell values
/// (cells ordered as canonical_histories, then alphabet order). Refused with
/// SizeGuardError unless |alphabet| <= 2, depth <= 3 and at most 20 cells are free.
std::vector<Valuation> enumerate_valuations(SemVariety variety, const Alphabet& alphabet, std::size_t depth);

/// Completes a partial assignment to a lawful table: forced cells follow the
/// equations, free cells take their listed value or false.
Valuation complete_valuation(SemVariety variety, const Alphabet& alphabet, std::size_t depth,
                             const std::map<Cell, bool>& partial);

/// A valuation whose cells are drawn on first use, for state spaces too large
/// to tabulate. Lawful by construction.
class LazyValuation {
 public:
  LazyValuation(SemVariety variety, Alphabet alphabet, std::uint64_t seed,
                std::optional<std::size_t> depth = std::nullopt);

  bool yield(const History& h, const std::string& a);
  History derive_atom(const History& h, const std::string& a) const;

  /// Cells drawn so far.
  const std::map<Cell, bool>& drawn() const { return drawn_; }
  std::size_t max_length() const { return max_length_; }
  /// The drawn cells completed to a table.
  Valuation snapshot() const;

 private:
  bool cell(const Cell& c);

  SemVariety variety_;
  Alphabet alphabet_;
  std::mt19937_64 rng_;
  std::optional<std::size_t> depth_;
  std::map<Cell, bool> drawn_;
  std::map<Cell, bool> memo_;
  mutable std::size_t max_length_ = 0;
};

// Text format ---------------------------------------------------------------

/// Reads the line-oriented table format:
///   variety <name>
///   alphabet <a1> <a2> ...
///   depth <d>
///   @<history> : <atom>=<0|1> ...
/// Optional `special true|false` selects a constant valuation. Throws
/// ParseError for malformed input, AlphabetError for undeclared atoms and
/// ConstraintError for unlawful tables.
Valuation load_valuation(std::string_view text);
std::string dump_valuation(const Valuation& v);

// Oracle --------------------------------------------------------------------

struct OracleOptions {
  /// Exhaustive search gives up after this many complete assignments and
  /// falls back to sampling.
  std::size_t leaf_budget = std::size_t{1} << 18;
  std::size_t samples = 10'000;
  std::uint64_t seed = 0x5eed;
};

/// P/H = Q/H in every lawful valuation, from the empty history.
bool equivalent(SemVariety v, const Term& p, const Term& q, const Alphabet& alphabet, const OracleOptions& opt = {});
/// Equivalence plus observationally equal derivative states.
bool congruent_oracle(SemVariety v, const Term& p, const Term& q, const Alphabet& alphabet,
                      const OracleOptions& opt = {});
bool congruent_oracle(Variety v, const Term& p, const Term& q, const Alphabet& alphabet, const OracleOptions& opt = {});

}  // namespace seqprop
