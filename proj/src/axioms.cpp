// SPDX-License-Identifier: MIT
#include "seqprop/axioms.hpp"

#include <algorithm>
#include <cctype>

namespace seqprop {

namespace {

Term X() { return Term::var("X"); }
Term Y() { return Term::var("Y"); }
Term Z() { return Term::var("Z"); }
Term U() { return Term::var("U"); }
Term V() { return Term::var("V"); }
Term W() { return Term::var("W"); }
Term A() { return Term::var(std::string(kAtomMeta)); }
Term C(Term l, Term c, Term r) { return cond(std::move(l), std::move(c), std::move(r)); }

std::vector<AxiomSchema> build() {
  const Term T = Term::t();
  const Term F = Term::f();
  std::vector<AxiomSchema> s;
  s.push_back({Axiom::CP1, C(X(), T, Y()), X(), {"X", "Y"}});
  s.push_back({Axiom::CP2, C(X(), F, Y()), Y(), {"X", "Y"}});
  s.push_back({Axiom::CP3, C(T, X(), F), X(), {"X"}});
  s.push_back({Axiom::CP4, C(X(), C(Y(), Z(), U()), V()), C(C(X(), Y(), V()), Z(), C(X(), U(), V())),
               {"X", "Y", "Z", "U", "V"}});
  s.push_back({Axiom::CPrp1, C(C(X(), A(), Y()), A(), Z()), C(C(X(), A(), X()), A(), Z()), {"X", "Y", "Z"}, true});
  s.push_back({Axiom::CPrp2, C(X(), A(), C(Y(), A(), Z())), C(X(), A(), C(Z(), A(), Z())), {"X", "Y", "Z"}, true});
  s.push_back({Axiom::CPcr1, C(C(X(), A(), Y()), A(), Z()), C(X(), A(), Z()), {"X", "Y", "Z"}, true});
  s.push_back({Axiom::CPcr2, C(X(), A(), C(Y(), A(), Z())), C(X(), A(), Z()), {"X", "Y", "Z"}, true});
  s.push_back({Axiom::CPstat, C(C(X(), Y(), Z()), U(), V()), C(C(X(), U(), V()), Y(), C(Z(), U(), V())),
               {"X", "Y", "Z", "U", "V"}});
  s.push_back({Axiom::CPcontr, C(C(X(), Y(), Z()), Y(), U()), C(X(), Y(), U()), {"X", "Y", "Z", "U"}});
  s.push_back({Axiom::CP5, C(X(), Y(), C(Z(), U(), C(V(), Y(), W()))), C(X(), Y(), C(Z(), U(), W())),
               {"X", "Y", "Z", "U", "V", "W"}});
  return s;
}

const std::vector<AxiomSchema>& schemas() {
  static const std::vector<AxiomSchema> all = build();
  return all;
}

}  // namespace

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> all = {Axiom::CP1,   Axiom::CP2,   Axiom::CP3,   Axiom::CP4,
                                         Axiom::CPrp1, Axiom::CPrp2, Axiom::CPcr1, Axiom::CPcr2,
                                         Axiom::CPstat, Axiom::CPcontr, Axiom::CP5};
  return all;
}

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::CP1: return "CP1";
    case Axiom::CP2: return "CP2";
    case Axiom::CP3: return "CP3";
    case Axiom::CP4: return "CP4";
    case Axiom::CPrp1: return "CPrp1";
    case Axiom::CPrp2: return "CPrp2";
    case Axiom::CPcr1: return "CPcr1";
    case Axiom::CPcr2: return "CPcr2";
    case Axiom::CPstat: return "CPstat";
    case Axiom::CPcontr: return "CPcontr";
    case Axiom::CP5: return "CP5";
  }
  return "?";
}

std::optional<Axiom> axiom_from_name(std::string_view name) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
  };
  const std::string wanted = lower(name);
  for (Axiom a : all_axioms()) {
    if (lower(axiom_name(a)) == wanted) return a;
  }
  return std::nullopt;
}

const AxiomSchema& schema(Axiom a) {
  for (const auto& s : schemas()) {
    if (s.id == a) return s;
  }
  return schemas().front();
}

Term substitute(const Term& t, const Substitution& sigma) {
  switch (t.kind()) {
    case Kind::Var: {
      auto it = sigma.find(t.name());
      return it == sigma.end() ? t : it->second;
    }
    case Kind::Cond:
      return cond(substitute(t.left(), sigma), substitute(t.ante(), sigma), substitute(t.right(), sigma));
    default:
      return t;
  }
}

}  // namespace seqprop
