// SPDX-License-Identifier: MIT
#include "seqprop/boolean_bridge.hpp"

#include <vector>

#include "seqprop/errors.hpp"

namespace seqprop {

// BATerm ----------------------------------------------------------------------

BATerm BATerm::make(BAKind kind, std::string name, const BATerm* a, const BATerm* b) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->size = 1;
  if (a) {
    node->kids[0] = *a;
    node->size += a->size();
  }
  if (b) {
    node->kids[1] = *b;
    node->size += b->size();
  }
  return BATerm(std::move(node));
}

BATerm BATerm::t() {
  static const BATerm v = make(BAKind::True, "", nullptr, nullptr);
  return v;
}

BATerm BATerm::f() {
  static const BATerm v = make(BAKind::False, "", nullptr, nullptr);
  return v;
}

BATerm BATerm::atom(std::string name) { return make(BAKind::Atom, std::move(name), nullptr, nullptr); }
BATerm BATerm::var(std::string name) { return make(BAKind::Var, std::move(name), nullptr, nullptr); }
BATerm BATerm::neg(BATerm x) { return make(BAKind::Not, "", &x, nullptr); }
BATerm BATerm::conj(BATerm x, BATerm y) { return make(BAKind::And, "", &x, &y); }
BATerm BATerm::disj(BATerm x, BATerm y) { return make(BAKind::Or, "", &x, &y); }

bool operator==(const BATerm& s, const BATerm& t) {
  if (s.kind() != t.kind() || s.size() != t.size()) return false;
  switch (s.kind()) {
    case BAKind::True:
    case BAKind::False: return true;
    case BAKind::Atom:
    case BAKind::Var: return s.name() == t.name();
    case BAKind::Not: return s.lhs() == t.lhs();
    default: return s.lhs() == t.lhs() && s.rhs() == t.rhs();
  }
}

// Translations ----------------------------------------------------------------

BATerm to_ba(const Term& t) {
  switch (t.kind()) {
    case Kind::True: return BATerm::t();
    case Kind::False: return BATerm::f();
    case Kind::Atom: return BATerm::atom(t.name());
    case Kind::Var: return BATerm::var(t.name());
    case Kind::Cond: {
      BATerm l = to_ba(t.left());
      BATerm c = to_ba(t.ante());
      BATerm r = to_ba(t.right());
      return BATerm::conj(BATerm::disj(BATerm::neg(c), l), BATerm::disj(c, r));
    }
  }
  return BATerm::f();
}

Term from_ba(const BATerm& t) {
  switch (t.kind()) {
    case BAKind::True: return Term::t();
    case BAKind::False: return Term::f();
    case BAKind::Atom: return Term::atom(t.name());
    case BAKind::Var: return Term::var(t.name());
    case BAKind::Not: return cond(Term::f(), from_ba(t.lhs()), Term::t());
    case BAKind::And: return cond(from_ba(t.rhs()), from_ba(t.lhs()), Term::f());
    case BAKind::Or: return cond(Term::t(), from_ba(t.lhs()), from_ba(t.rhs()));
  }
  return Term::f();
}

// Evaluation ------------------------------------------------------------------

namespace {

void collect(const BATerm& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case BAKind::Atom:
    case BAKind::Var: out.insert(t.name()); return;
    case BAKind::Not: collect(t.lhs(), out); return;
    case BAKind::And:
    case BAKind::Or:
      collect(t.lhs(), out);
      collect(t.rhs(), out);
      return;
    default: return;
  }
}

}  // namespace

std::set<std::string> ba_symbols(const BATerm& t) {
  std::set<std::string> out;
  collect(t, out);
  return out;
}

bool ba_eval(const BATerm& t, const Assignment& rho) {
  switch (t.kind()) {
    case BAKind::True: return true;
    case BAKind::False: return false;
    case BAKind::Atom:
    case BAKind::Var: return rho.at(t.name());
    case BAKind::Not: return !ba_eval(t.lhs(), rho);
    case BAKind::And: return ba_eval(t.lhs(), rho) && ba_eval(t.rhs(), rho);
    case BAKind::Or: return ba_eval(t.lhs(), rho) || ba_eval(t.rhs(), rho);
  }
  return false;
}

bool ba_equal(const BATerm& s, const BATerm& t) {
  std::set<std::string> symbols = ba_symbols(s);
  symbols.merge(ba_symbols(t));
  if (symbols.size() > 20) {
    throw SizeGuardError("truth table over " + std::to_string(symbols.size()) + " symbols exceeds the limit of 20");
  }
  const std::vector<std::string> names(symbols.begin(), symbols.end());
  Assignment rho;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << names.size()); ++mask) {
    for (std::size_t i = 0; i < names.size(); ++i) rho[names[i]] = ((mask >> i) & 1U) != 0;
    if (ba_eval(s, rho) != ba_eval(t, rho)) return false;
  }
  return true;
}

bool decide_st_via_ba(const Term& p, const Term& q) { return ba_equal(to_ba(p), to_ba(q)); }

}  // namespace seqprop
