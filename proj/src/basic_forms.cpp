// SPDX-License-Identifier: MIT
#include "seqprop/basic_forms.hpp"

#include "seqprop/errors.hpp"
#include "seqprop/rewrite.hpp"

namespace seqprop {

std::string_view variety_name(Variety v) {
  switch (v) {
    case Variety::Fr: return "fr";
    case Variety::Rp: return "rp";
    case Variety::Cr: return "cr";
    case Variety::St: return "st";
  }
  return "?";
}

namespace {

bool headed_by(const Term& t, const std::string& a) { return t.is_cond() && t.ante().name() == a; }

bool is_bf(const Term& t, const Alphabet& alphabet) {
  if (t.is_const()) return true;
  if (!t.is_cond() || !t.ante().is_atom() || !alphabet.contains(t.ante().name())) return false;
  return is_bf(t.left(), alphabet) && is_bf(t.right(), alphabet);
}

bool is_bf_rp(const Term& t, const Alphabet& alphabet) {
  if (t.is_const()) return true;
  if (!t.is_cond() || !t.ante().is_atom() || !alphabet.contains(t.ante().name())) return false;
  const std::string& a = t.ante().name();
  for (const Term* kid : {&t.left(), &t.right()}) {
    if (!is_bf_rp(*kid, alphabet)) return false;
    if (headed_by(*kid, a) && kid->left() != kid->right()) return false;
  }
  return true;
}

bool is_bf_cr(const Term& t, const Alphabet& alphabet) {
  if (t.is_const()) return true;
  if (!t.is_cond() || !t.ante().is_atom() || !alphabet.contains(t.ante().name())) return false;
  const std::string& a = t.ante().name();
  if (headed_by(t.left(), a) || headed_by(t.right(), a)) return false;
  return is_bf_cr(t.left(), alphabet) && is_bf_cr(t.right(), alphabet);
}

bool is_bf_st(const Term& t, const Alphabet& alphabet, std::size_t level) {
  if (level == alphabet.size()) return t.is_const();
  if (!t.is_cond() || !t.ante().is_atom() || t.ante().name() != alphabet[level]) return false;
  return is_bf_st(t.left(), alphabet, level + 1) && is_bf_st(t.right(), alphabet, level + 1);
}

Term push(const Term& x, const Term& c, const Term& y) {
  switch (c.kind()) {
    case Kind::True: return x;
    case Kind::False: return y;
    default: return cond(push(x, c.left(), y), c.ante(), push(x, c.right(), y));
  }
}

Term bf(const Term& t) {
  switch (t.kind()) {
    case Kind::True:
    case Kind::False: return t;
    case Kind::Atom: return cond(Term::t(), t, Term::f());
    default: return push(bf(t.left()), bf(t.ante()), bf(t.right()));
  }
}

Term rp(const Term& t) {
  if (!t.is_cond()) return t;
  const Term& atom = t.ante();
  Term l = rp(t.left());
  Term r = rp(t.right());
  // Children are canonical, so one CPrp1/CPrp2 step suffices; the repeated
  // read of the atom stays, only its unreachable branch is replaced.
  if (headed_by(l, atom.name())) l = cond(l.left(), atom, l.left());
  if (headed_by(r, atom.name())) r = cond(r.right(), atom, r.right());
  return cond(std::move(l), atom, std::move(r));
}

Term cr(const Term& t) {
  if (!t.is_cond()) return t;
  const Term& atom = t.ante();
  Term l = cr(t.left());
  Term r = cr(t.right());
  if (headed_by(l, atom.name())) l = l.left();
  if (headed_by(r, atom.name())) r = r.right();
  return cond(std::move(l), atom, std::move(r));
}

Term full_tree(const Term& leaf, const Alphabet& alphabet, std::size_t level) {
  if (level == alphabet.size()) return leaf;
  Term sub = full_tree(leaf, alphabet, level + 1);
  return cond(sub, Term::atom(alphabet[level]), sub);
}

Term merge(const Term& p, std::size_t i, const Term& r, const Alphabet& alphabet, std::size_t level) {
  const Term& label = p.ante();
  if (level == i) return cond(p.left(), label, r.right());
  return cond(merge(p.left(), i, r.left(), alphabet, level + 1), label,
              merge(p.right(), i, r.right(), alphabet, level + 1));
}

Term st(const Term& basic, const Alphabet& alphabet) {
  if (basic.is_const()) return full_tree(basic, alphabet, 0);
  return merge(st(basic.left(), alphabet), alphabet.index_of(basic.ante().name()), st(basic.right(), alphabet),
               alphabet, 0);
}

void require_closed_pair(const Term& p, const Term& q) {
  require_closed(p, "first term");
  require_closed(q, "second term");
}

}  // namespace

bool is_basic_form(const Term& p, Variety v, const Alphabet& alphabet) {
  require_closed(p, "basic-form candidate");
  switch (v) {
    case Variety::Fr: return is_bf(p, alphabet);
    case Variety::Rp: return is_bf_rp(p, alphabet);
    case Variety::Cr: return is_bf_cr(p, alphabet);
    case Variety::St: return is_bf_st(p, alphabet, 0);
  }
  return false;
}

Term to_basic_form(const Term& p) {
  require_closed(p, "basic form");
  return bf(p);
}

Term to_bf_rp(const Term& p, const Alphabet&) {
  require_closed(p, "rp basic form");
  return rp(bf(p));
}

Term to_bf_cr(const Term& p, const Alphabet&) {
  require_closed(p, "cr basic form");
  return cr(bf(p));
}

Term to_bf_st(const Term& p, const Alphabet& alphabet) {
  require_closed(p, "st basic form");
  require_alphabet(p, alphabet);
  return st(bf(p), alphabet);
}

bool decide(Variety v, const Term& p, const Term& q, const Alphabet& alphabet) {
  if (v == Variety::Fr) return prove_equal_cp(p, q);
  require_closed_pair(p, q);
  require_alphabet(p, alphabet);
  require_alphabet(q, alphabet);
  if (alphabet.size() == 1 && v != Variety::St) v = Variety::St;
  switch (v) {
    case Variety::Rp: return rp(bf(p)) == rp(bf(q));
    case Variety::Cr: return cr(bf(p)) == cr(bf(q));
    default: return st(bf(p), alphabet) == st(bf(q), alphabet);
  }
}

}  // namespace seqprop
