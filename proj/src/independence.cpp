// SPDX-License-Identifier: MIT
#include "seqprop/independence.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "seqprop/generate.hpp"
#include "seqprop/syntax.hpp"

namespace seqprop {

std::string_view model_name(ModelId m) {
  switch (m) {
    case ModelId::Phi1: return "Phi1";
    case ModelId::Phi2: return "Phi2";
    case ModelId::Phi3: return "Phi3";
    case ModelId::Phi4: return "Phi4";
    case ModelId::PhiContr: return "PhiContr";
  }
  return "?";
}

namespace {

using Env = std::map<std::string, ModelValue>;

ModelValue combine(ModelId id, const ModelValue& p, const ModelValue& q, const ModelValue& r) {
  switch (id) {
    case ModelId::Phi1: return (q != 0 || r != 0) ? 1 : 0;
    case ModelId::Phi2: return (p != 0 && q != 0) ? 1 : 0;
    case ModelId::Phi3: return q <= 1 ? p : r;
    case ModelId::Phi4:
      if (q == 1) return p;
      if (q == 0) return r;
      return p * q;
    case ModelId::PhiContr: return q * p + (1 - q) * r;
  }
  return 0;
}

ModelValue leaf_value(const FiniteInterpretation& m, const Term& t) {
  const ModelValue n = m.alphabet.size();
  const bool boolean = m.id == ModelId::Phi1 || m.id == ModelId::Phi2;
  switch (t.kind()) {
    case Kind::True: return m.id == ModelId::Phi3 ? 0 : 1;
    case Kind::False: return m.id == ModelId::Phi3 ? n + 1 : ModelValue(0);
    default: {
      const ModelValue i = m.alphabet.index_of(t.name()) + 1;
      if (boolean) return 1;
      return m.id == ModelId::Phi3 ? i : i + 1;
    }
  }
}

ModelValue value_in(const FiniteInterpretation& m, const Term& t, const Env& env) {
  switch (t.kind()) {
    case Kind::Var: return env.at(t.name());
    case Kind::Cond:
      return combine(m.id, value_in(m, t.left(), env), value_in(m, t.ante(), env), value_in(m, t.right(), env));
    default: return leaf_value(m, t);
  }
}

}  // namespace

ModelValue interpret(const FiniteInterpretation& m, const Term& p) {
  require_closed(p, "interpretation");
  return value_in(m, p, {});
}

std::string format_value(ModelId m, const ModelValue& v) {
  if (m == ModelId::Phi1 || m == ModelId::Phi2) return v != 0 ? "T" : "F";
  return v.str();
}

InstanceCheck check_axiom_instances(const FiniteInterpretation& m, Axiom axiom, std::size_t k) {
  const AxiomSchema& s = schema(axiom);
  const std::vector<Term> pool = enumerate_closed_terms(m.alphabet, k);

  // Pool terms grouped by value, classes in order of first occurrence. Axiom
  // sides are compositional, so one value tuple decides every substitution
  // drawn from the same classes, and the first failing class tuple holds the
  // first failing substitution in pool order.
  struct Class {
    ModelValue value;
    std::size_t first;
    std::size_t size;
  };
  std::vector<Class> classes;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    ModelValue v = interpret(m, pool[i]);
    auto it = std::find_if(classes.begin(), classes.end(), [&](const Class& c) { return c.value == v; });
    if (it == classes.end()) {
      classes.push_back({std::move(v), i, 1});
    } else {
      ++it->size;
    }
  }
  const std::size_t nv = s.metavars.size();
  double product = s.has_atom_meta ? static_cast<double>(m.alphabet.size()) : 1.0;
  for (std::size_t i = 0; i < nv; ++i) product *= static_cast<double>(classes.size());
  if (product > 1e7) {
    throw SizeGuardError("instance space of " + std::string(axiom_name(axiom)) + " at bound " + std::to_string(k) +
                         " exceeds 10^7 value tuples");
  }

  InstanceCheck out;
  const std::size_t atom_choices = s.has_atom_meta ? m.alphabet.size() : 1;
  for (std::size_t a = 0; a < atom_choices; ++a) {
    std::vector<std::size_t> idx(nv, 0);
    Env env;
    if (s.has_atom_meta) env[std::string(kAtomMeta)] = interpret(m, Term::atom(m.alphabet[a]));
    for (;;) {
      std::size_t covered = 1;
      for (std::size_t i = 0; i < nv; ++i) {
        env[s.metavars[i]] = classes[idx[i]].value;
        covered *= classes[idx[i]].size;
      }
      out.checked += covered;
      ModelValue l = value_in(m, s.lhs, env);
      ModelValue r = value_in(m, s.rhs, env);
      if (l != r) {
        Substitution sigma;
        for (std::size_t i = 0; i < nv; ++i) sigma.insert_or_assign(s.metavars[i], pool[classes[idx[i]].first]);
        if (s.has_atom_meta) sigma.insert_or_assign(std::string(kAtomMeta), Term::atom(m.alphabet[a]));
        out.holds = false;
        out.counterexample = instantiate(axiom, sigma);
        out.lhs_value = std::move(l);
        out.rhs_value = std::move(r);
        return out;
      }
      std::size_t pos = nv;
      while (pos > 0) {
        if (++idx[pos - 1] < classes.size()) break;
        idx[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
  return out;
}

// Axiom sets ------------------------------------------------------------------

std::string_view axiom_set_name(AxiomSet s) {
  switch (s) {
    case AxiomSet::CP: return "CP";
    case AxiomSet::CPrp: return "CPrp";
    case AxiomSet::CPcr: return "CPcr";
    case AxiomSet::CPst: return "CPst";
  }
  return "?";
}

std::optional<AxiomSet> axiom_set_from_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "cp") return AxiomSet::CP;
  if (lower == "cprp") return AxiomSet::CPrp;
  if (lower == "cpcr") return AxiomSet::CPcr;
  if (lower == "cpst") return AxiomSet::CPst;
  return std::nullopt;
}

const std::vector<Axiom>& axioms_of(AxiomSet s) {
  static const std::vector<Axiom> cp = {Axiom::CP1, Axiom::CP2, Axiom::CP3, Axiom::CP4};
  static const std::vector<Axiom> rp = {Axiom::CP1, Axiom::CP2, Axiom::CP3, Axiom::CP4, Axiom::CPrp1, Axiom::CPrp2};
  static const std::vector<Axiom> cr = {Axiom::CP1, Axiom::CP2, Axiom::CP3, Axiom::CP4, Axiom::CPcr1, Axiom::CPcr2};
  static const std::vector<Axiom> st = {Axiom::CP1,   Axiom::CP2,   Axiom::CP3,
                                        Axiom::CP4,   Axiom::CPstat, Axiom::CPcontr};
  switch (s) {
    case AxiomSet::CP: return cp;
    case AxiomSet::CPrp: return rp;
    case AxiomSet::CPcr: return cr;
    case AxiomSet::CPst: return st;
  }
  return cp;
}

bool IndependenceReport::valid() const {
  if (!witness_fails) return false;
  for (const auto& v : verdicts) {
    if ((v.axiom == target) == v.holds) return false;
  }
  return true;
}

// Witnesses -------------------------------------------------------------------

std::vector<Term> statcounter_probes(const Term& lhs, const Term& rhs) {
  std::vector<Term> out;
  auto add = [&](const Term& t) {
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  };
  std::vector<Term> stack{lhs, rhs};
  while (!stack.empty()) {
    Term t = stack.back();
    stack.pop_back();
    if (t.is_atom()) add(t);
    if (!t.is_cond()) continue;
    add(t.ante());
    stack.push_back(t.left());
    stack.push_back(t.ante());
    stack.push_back(t.right());
  }
  return out;
}

StatCounterWitness statcounter_witness() {
  const Alphabet ab({"a", "b"});
  Valuation::Table table;
  table[{}] = {{"a", false}, {"b", true}};
  table[{"a"}] = {{"a", false}, {"b", true}};
  table[{"b"}] = {{"a", true}, {"b", true}};
  table[{"a", "b"}] = {{"a", false}, {"b", true}};
  table[{"b", "a"}] = {{"a", true}, {"b", false}};
  const Term a = Term::atom("a"), b = Term::atom("b"), T = Term::t(), F = Term::f();
  return {Valuation(SemVariety::StatCounter, ab, 2, std::move(table)), cond(cond(F, a, T), b, F),
          cond(cond(F, b, F), a, cond(T, b, F))};
}

namespace {

struct Plan {
  std::optional<ModelId> model;
  std::optional<SemVariety> variety;
};

Plan plan_for(AxiomSet set, Axiom target) {
  const auto& members = axioms_of(set);
  if (std::find(members.begin(), members.end(), target) == members.end()) {
    throw Error(std::string(axiom_name(target)) + " is not an axiom of " + std::string(axiom_set_name(set)));
  }
  if ((set == AxiomSet::CPcr && target == Axiom::CP4) ||
      (set == AxiomSet::CPst && (target == Axiom::CP1 || target == Axiom::CP4))) {
    throw UnresolvedIndependence("no countermodel is known for " + std::string(axiom_name(target)) + " in " +
                                 std::string(axiom_set_name(set)));
  }
  switch (target) {
    case Axiom::CP1: return {ModelId::Phi1, std::nullopt};
    case Axiom::CP2: return {ModelId::Phi2, std::nullopt};
    case Axiom::CP3: return {ModelId::Phi3, std::nullopt};
    case Axiom::CP4: return {ModelId::Phi4, std::nullopt};
    case Axiom::CPcontr: return {ModelId::PhiContr, std::nullopt};
    case Axiom::CPrp1: return {std::nullopt, SemVariety::Rp1};
    case Axiom::CPrp2: return {std::nullopt, SemVariety::Rp2};
    case Axiom::CPcr1: return {std::nullopt, SemVariety::Cr1};
    case Axiom::CPcr2: return {std::nullopt, SemVariety::Cr2};
    case Axiom::CPstat: return {std::nullopt, SemVariety::StatCounter};
    default: break;
  }
  throw UnresolvedIndependence("no countermodel is known for " + std::string(axiom_name(target)));
}

/// Witness instance for a finite model, with a_1 the first alphabet atom.
Substitution model_witness(ModelId id, const Term& a1) {
  const Term T = Term::t(), F = Term::f();
  switch (id) {
    case ModelId::Phi1: return {{"X", F}, {"Y", F}};
    case ModelId::Phi2: return {{"X", T}, {"Y", T}};
    case ModelId::Phi3: return {{"X", a1}};
    case ModelId::Phi4: return {{"X", T}, {"Y", F}, {"Z", a1}, {"U", T}, {"V", T}};
    case ModelId::PhiContr: return {{"X", T}, {"Y", a1}, {"Z", F}, {"U", F}};
  }
  return {};
}

/// Witness instance and the two cells a@eps, a@a for a valuation variety.
std::pair<Substitution, std::pair<bool, bool>> variety_witness(SemVariety v, const Term& a) {
  const Term T = Term::t(), F = Term::f();
  const std::string meta(kAtomMeta);
  switch (v) {
    case SemVariety::Rp1: return {{{"X", T}, {"Y", F}, {"Z", F}, {meta, a}}, {true, false}};
    case SemVariety::Rp2: return {{{"X", T}, {"Y", T}, {"Z", F}, {meta, a}}, {false, true}};
    case SemVariety::Cr1: return {{{"X", T}, {"Y", F}, {"Z", T}, {meta, a}}, {true, false}};
    default: return {{{"X", F}, {"Y", T}, {"Z", F}, {meta, a}}, {false, true}};
  }
}

IndependenceReport finite_report(AxiomSet set, Axiom target, ModelId id, const Alphabet& alphabet,
                                 const IndependenceOptions& opt) {
  const FiniteInterpretation m{id, alphabet};
  const Term a1 = Term::atom(alphabet[0]);
  AxiomInstance witness = instantiate(target, model_witness(id, a1));
  const ModelValue l = interpret(m, witness.lhs);
  const ModelValue r = interpret(m, witness.rhs);
  IndependenceReport rep{set,          target,       std::string(model_name(id)), Backend::FiniteModel,
                         opt.bound,    alphabet,     {},
                         witness,      format_value(id, l), format_value(id, r), l != r,
                         std::nullopt, std::nullopt};
  for (Axiom ax : axioms_of(set)) {
    InstanceCheck c = check_axiom_instances(m, ax, opt.bound);
    rep.verdicts.push_back({ax, c.holds, c.checked});
    if (ax == target) rep.first_counterexample = c.counterexample;
  }
  return rep;
}

IndependenceReport variety_report(AxiomSet set, Axiom target, SemVariety v, const Alphabet& given,
                                  const IndependenceOptions& opt) {
  Alphabet alphabet = given;
  AxiomInstance witness{target, {}, Term::t(), Term::t()};
  std::optional<Valuation> valuation;
  bool fails = false;
  std::string lhs_text, rhs_text;
  if (v == SemVariety::StatCounter) {
    StatCounterWitness w = statcounter_witness();
    alphabet = w.valuation.alphabet();
    const Term a = Term::atom("a"), b = Term::atom("b"), T = Term::t(), F = Term::f();
    witness = instantiate(target, {{"X", F}, {"Y", a}, {"Z", T}, {"U", b}, {"V", F}});
    const Outcome l = run(witness.lhs, w.valuation);
    const Outcome r = run(witness.rhs, w.valuation);
    fails = l.value != r.value && check_constraints(w.valuation, statcounter_probes(witness.lhs, witness.rhs));
    lhs_text = l.value ? "T" : "F";
    rhs_text = r.value ? "T" : "F";
    valuation = std::move(w.valuation);
  } else {
    const Term a = Term::atom(alphabet[0]);
    auto [sigma, cells] = variety_witness(v, a);
    witness = instantiate(target, sigma);
    std::map<Cell, bool> partial{{Cell{{}, alphabet[0]}, cells.first}, {Cell{{alphabet[0]}, alphabet[0]}, cells.second}};
    Valuation val = complete_valuation(v, alphabet, 2, partial);
    const Outcome l = run(witness.lhs, val);
    const Outcome r = run(witness.rhs, val);
    fails = check_constraints(val) && (l.value != r.value || l.history != r.history);
    lhs_text = l.value ? "T" : "F";
    rhs_text = r.value ? "T" : "F";
    valuation = std::move(val);
  }
  IndependenceReport rep{set,     target,   std::string(sem_variety_name(v)), Backend::Valuation,
                         opt.bound, alphabet, {},
                         witness, lhs_text, rhs_text, fails,
                         std::nullopt, valuation};
  for (Axiom ax : axioms_of(set)) {
    if (ax == target) {
      rep.verdicts.push_back({ax, !fails, 1});
      continue;
    }
    SoundnessOptions so;
    so.trials = opt.trials;
    so.seed = opt.seed;
    so.alphabet = alphabet;
    so.max_term_size = std::max<std::size_t>(opt.bound, 7);
    SoundnessResult s = check_axiom_soundness(v, ax, so);
    rep.verdicts.push_back({ax, s.holds, s.checked});
  }
  return rep;
}

}  // namespace

IndependenceReport independence_report(AxiomSet set, Axiom target, const Alphabet& alphabet,
                                       const IndependenceOptions& opt) {
  const Plan plan = plan_for(set, target);
  if (plan.model) return finite_report(set, target, *plan.model, alphabet, opt);
  return variety_report(set, target, *plan.variety, alphabet, opt);
}

std::string format_report(const IndependenceReport& r) {
  std::ostringstream out;
  out << "set " << axiom_set_name(r.set) << '\n';
  out << "target " << axiom_name(r.target) << '\n';
  out << "model " << r.model << '\n';
  out << "backend " << (r.backend == Backend::FiniteModel ? "finite-model" : "valuation") << '\n';
  out << "pool-bound " << r.bound << '\n';
  out << "alphabet";
  for (const auto& a : r.alphabet.names()) out << ' ' << a;
  out << '\n';
  for (const auto& v : r.verdicts) {
    out << "verdict " << axiom_name(v.axiom) << ' ' << (v.holds ? "holds" : "fails") << " checked=" << v.checked
        << '\n';
  }
  out << "witness " << print_term(r.witness.lhs) << " = " << print_term(r.witness.rhs) << '\n';
  out << "values " << r.witness_lhs << ' ' << r.witness_rhs << '\n';
  if (r.first_counterexample) {
    out << "first-counterexample " << print_term(r.first_counterexample->lhs) << " = "
        << print_term(r.first_counterexample->rhs) << '\n';
  }
  if (r.witness_valuation) {
    std::istringstream table(dump_valuation(*r.witness_valuation));
    for (std::string line; std::getline(table, line);) out << "valuation " << line << '\n';
  }
  out << "status " << (r.valid() ? "valid" : "invalid") << '\n';
  return out.str();
}

}  // namespace seqprop
