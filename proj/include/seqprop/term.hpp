// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace seqprop {

enum class Kind : std::uint8_t { True, False, Atom, Var, Cond };

/// Immutable term of the conditional-composition signature.
///
/// Nodes are shared; copying a Term is cheap. Equality is syntactic.
class Term {
 public:
  static Term t();
  static Term f();
  static Term atom(std::string name);
  static Term var(std::string name);
  static Term cond(Term left, Term ante, Term right);

  Kind kind() const;
  bool is_const() const { return kind() == Kind::True || kind() == Kind::False; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_cond() const { return kind() == Kind::Cond; }

  /// Identifier of an atom or variable; empty otherwise.
  const std::string& name() const;
  const Term& left() const;
  const Term& ante() const;
  const Term& right() const;

  /// Number of nodes.
  std::size_t size() const;
  std::size_t hash() const;
  bool same_node(const Term& other) const { return node_ == other.node_; }

 private:
  struct Node;
  Term() = default;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Kind kind, std::string name, const Term* kids);

  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind;
  std::string name;
  Term kids[3];
  std::size_t size;
  std::size_t hash;
};

inline Kind Term::kind() const { return node_->kind; }
inline const std::string& Term::name() const { return node_->name; }
inline const Term& Term::left() const { return node_->kids[0]; }
inline const Term& Term::ante() const { return node_->kids[1]; }
inline const Term& Term::right() const { return node_->kids[2]; }
inline std::size_t Term::size() const { return node_->size; }
inline std::size_t Term::hash() const { return node_->hash; }

bool syntactic_eq(const Term& s, const Term& t);
inline bool operator==(const Term& s, const Term& t) { return syntactic_eq(s, t); }
inline bool operator!=(const Term& s, const Term& t) { return !syntactic_eq(s, t); }

/// Total order, used for ordered containers; consistent with syntactic_eq.
bool term_less(const Term& s, const Term& t);

struct TermLess {
  bool operator()(const Term& s, const Term& t) const { return term_less(s, t); }
};

enum class Connective {
  LeftAnd,
  RightAnd,
  LeftOr,
  RightOr,
  LeftImp,
  RightImp,
  LeftBiimp,
  RightBiimp
};

/// Ordered, duplicate-free, non-empty list of atom identifiers.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  /// Atoms of the given terms in first-occurrence order; {"a"} when none occur.
  static Alphabet of_terms(const std::vector<Term>& terms);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  bool contains(std::string_view atom) const;
  /// Zero-based position; throws AlphabetError for unknown atoms.
  std::size_t index_of(std::string_view atom) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

bool is_atom_identifier(std::string_view s);
bool is_var_identifier(std::string_view s);

Term cond(Term left, Term ante, Term right);
Term negate(Term t);
Term apply_connective(Connective c, Term x, Term y);
Term seq_compose(Term x, Term y);

/// Termination measure: 1 for leaves, 2|c| + max(|l|,|r|) for conditionals.
boost::multiprecision::cpp_int norm(const Term& t);

std::set<std::string> atoms_of(const Term& t);
/// Atoms in first-occurrence (left, ante, right) order.
std::vector<std::string> atoms_in_order(const Term& t);
std::set<std::string> vars_of(const Term& t);
bool is_closed(const Term& t);
/// Throws OpenTermError when t contains a variable.
void require_closed(const Term& t, std::string_view what);
/// Throws AlphabetError when t uses an atom outside the alphabet.
void require_alphabet(const Term& t, const Alphabet& alphabet);

std::size_t atom_occurrences(const Term& t);
/// Longest chain of atom evaluations any evaluation of t can perform.
std::size_t max_path(const Term& t);

}  // namespace seqprop

template <>
struct std::hash<seqprop::Term> {
  std::size_t operator()(const seqprop::Term& t) const noexcept { return t.hash(); }
};
