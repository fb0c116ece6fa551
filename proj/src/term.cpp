// SPDX-License-Identifier: MIT
#include "seqprop/term.hpp"

#include <algorithm>
#include <cctype>

#include "seqprop/errors.hpp"

namespace seqprop {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::make(Kind kind, std::string name, const Term* kids) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->hash = mix(std::hash<std::string>{}(name), static_cast<std::size_t>(kind));
  node->size = 1;
  if (kids != nullptr) {
    for (int i = 0; i < 3; ++i) {
      node->kids[i] = kids[i];
      node->size += kids[i].size();
      node->hash = mix(node->hash, kids[i].hash());
    }
  }
  node->name = std::move(name);
  return Term(std::move(node));
}

Term Term::t() {
  static const Term value = make(Kind::True, "", nullptr);
  return value;
}

Term Term::f() {
  static const Term value = make(Kind::False, "", nullptr);
  return value;
}

Term Term::atom(std::string name) { return make(Kind::Atom, std::move(name), nullptr); }

Term Term::var(std::string name) { return make(Kind::Var, std::move(name), nullptr); }

Term Term::cond(Term left, Term ante, Term right) {
  const Term kids[3] = {std::move(left), std::move(ante), std::move(right)};
  return make(Kind::Cond, "", kids);
}

bool syntactic_eq(const Term& s, const Term& t) {
  if (s.same_node(t)) return true;
  if (s.hash() != t.hash() || s.size() != t.size() || s.kind() != t.kind()) return false;
  switch (s.kind()) {
    case Kind::True:
    case Kind::False:
      return true;
    case Kind::Atom:
    case Kind::Var:
      return s.name() == t.name();
    case Kind::Cond:
      return syntactic_eq(s.ante(), t.ante()) && syntactic_eq(s.left(), t.left()) &&
             syntactic_eq(s.right(), t.right());
  }
  return false;
}

bool term_less(const Term& s, const Term& t) {
  if (s.same_node(t)) return false;
  if (s.kind() != t.kind()) return s.kind() < t.kind();
  switch (s.kind()) {
    case Kind::True:
    case Kind::False:
      return false;
    case Kind::Atom:
    case Kind::Var:
      return s.name() < t.name();
    case Kind::Cond:
      if (!syntactic_eq(s.left(), t.left())) return term_less(s.left(), t.left());
      if (!syntactic_eq(s.ante(), t.ante())) return term_less(s.ante(), t.ante());
      return term_less(s.right(), t.right());
  }
  return false;
}

bool is_atom_identifier(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool is_var_identifier(std::string_view s) {
  if (s.empty() || !std::isupper(static_cast<unsigned char>(s[0]))) return false;
  if (s == "T" || s == "F") return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw AlphabetError("alphabet must not be empty");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_atom_identifier(names_[i])) throw AlphabetError("not an atom identifier: '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[j] == names_[i]) throw AlphabetError("duplicate atom in alphabet: " + names_[i]);
    }
  }
}

Alphabet Alphabet::of_terms(const std::vector<Term>& terms) {
  std::vector<std::string> names;
  for (const Term& t : terms) {
    for (std::string& a : atoms_in_order(t)) {
      if (std::find(names.begin(), names.end(), a) == names.end()) names.push_back(std::move(a));
    }
  }
  if (names.empty()) names.emplace_back("a");
  return Alphabet(std::move(names));
}

bool Alphabet::contains(std::string_view atom) const {
  return std::find(names_.begin(), names_.end(), atom) != names_.end();
}

std::size_t Alphabet::index_of(std::string_view atom) const {
  auto it = std::find(names_.begin(), names_.end(), atom);
  if (it == names_.end()) throw AlphabetError("atom '" + std::string(atom) + "' is not in the alphabet");
  return static_cast<std::size_t>(it - names_.begin());
}

Term cond(Term left, Term ante, Term right) {
  return Term::cond(std::move(left), std::move(ante), std::move(right));
}

Term negate(Term t) { return cond(Term::f(), std::move(t), Term::t()); }

Term apply_connective(Connective c, Term x, Term y) {
  switch (c) {
    case Connective::LeftAnd:
      return cond(y, x, Term::f());
    case Connective::RightAnd:
      return cond(x, y, Term::f());
    case Connective::LeftOr:
      return cond(Term::t(), x, y);
    case Connective::RightOr:
      return cond(Term::t(), y, x);
    case Connective::LeftImp:
      return cond(y, x, Term::t());
    case Connective::RightImp:
      return cond(Term::t(), y, negate(x));
    case Connective::LeftBiimp:
      return cond(y, x, negate(y));
    case Connective::RightBiimp:
      return cond(x, y, negate(x));
  }
  return x;
}

Term seq_compose(Term x, Term y) { return cond(y, std::move(x), y); }

boost::multiprecision::cpp_int norm(const Term& t) {
  if (!t.is_cond()) return 1;
  auto l = norm(t.left());
  auto r = norm(t.right());
  return 2 * norm(t.ante()) + (l < r ? r : l);
}

namespace {

void collect_atoms(const Term& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case Kind::Atom:
      if (std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
      break;
    case Kind::Cond:
      collect_atoms(t.left(), out);
      collect_atoms(t.ante(), out);
      collect_atoms(t.right(), out);
      break;
    default:
      break;
  }
}

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.is_var()) out.insert(t.name());
  if (t.is_cond()) {
    collect_vars(t.left(), out);
    collect_vars(t.ante(), out);
    collect_vars(t.right(), out);
  }
}

}  // namespace

std::set<std::string> atoms_of(const Term& t) {
  auto ordered = atoms_in_order(t);
  return {ordered.begin(), ordered.end()};
}

std::vector<std::string> atoms_in_order(const Term& t) {
  std::vector<std::string> out;
  collect_atoms(t, out);
  return out;
}

std::set<std::string> vars_of(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

bool is_closed(const Term& t) {
  switch (t.kind()) {
    case Kind::Var:
      return false;
    case Kind::Cond:
      return is_closed(t.left()) && is_closed(t.ante()) && is_closed(t.right());
    default:
      return true;
  }
}

void require_closed(const Term& t, std::string_view what) {
  if (!is_closed(t)) throw OpenTermError(std::string(what) + " requires a closed term");
}

void require_alphabet(const Term& t, const Alphabet& alphabet) {
  for (const auto& a : atoms_in_order(t)) {
    if (!alphabet.contains(a)) throw AlphabetError("atom '" + a + "' is not in the alphabet");
  }
}

std::size_t atom_occurrences(const Term& t) {
  switch (t.kind()) {
    case Kind::Atom:
      return 1;
    case Kind::Cond:
      return atom_occurrences(t.left()) + atom_occurrences(t.ante()) + atom_occurrences(t.right());
    default:
      return 0;
  }
}

std::size_t max_path(const Term& t) {
  switch (t.kind()) {
    case Kind::Atom:
      return 1;
    case Kind::Cond:
      return max_path(t.ante()) + std::max(max_path(t.left()), max_path(t.right()));
    default:
      return 0;
  }
}

}  // namespace seqprop
