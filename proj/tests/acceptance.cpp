// SPDX-License-Identifier: MIT
// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "reference.hpp"
#include "seqprop/axioms.hpp"
#include "seqprop/boolean_bridge.hpp"
#include "seqprop/cli.hpp"
#include "seqprop/errors.hpp"
#include "seqprop/independence.hpp"
#include "seqprop/rewrite.hpp"
#include "seqprop/soundness.hpp"
#include "seqprop/valuation.hpp"
#include "support.hpp"

using namespace seqprop;
using testing_support::P;

namespace {

// Exhaustive pools: node count <= 7 is every term with at most five leaves,
// which contains the pools of node count <= 5.
constexpr std::size_t kPoolSize = 7;

struct Verdict {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

constexpr Variety kVarieties[] = {Variety::Fr, Variety::Rp, Variety::Cr, Variety::St};

// 1 ---------------------------------------------------------------------------

Verdict rewriting_convergence() {
  Verdict o;
  Rng rng(1);
  const Alphabet alphabets[] = {Alphabet({"a"}), Alphabet({"a", "b"}), Alphabet({"a", "b", "c"})};
  TermShape shape;
  shape.max_size = 40;
  shape.vars = {"X", "Y"};
  std::size_t steps = 0;
  std::size_t stalls = 0;
  std::string first_stall;
  std::size_t stall_size = 0;
  for (int i = 0; i < 10000; ++i) {
    const Term t = random_term(rng, alphabets[i % 3], shape);
    const NormalForm inner = normal_form(t);
    const NormalForm outer = normal_form_outermost(t, false);
    if (inner.term != outer.term) o.fail("strategies disagree on " + print_term(t));
    if (!o.pass) break;
    Term prev = t;
    for (const auto& s : inner.trace) {
      const auto before = ref::norm(prev);
      const auto after = ref::norm(s.term);
      if (!(ref::norm(subterm_at(s.term, s.position)) < ref::norm(subterm_at(prev, s.position)))) {
        o.fail("redex norm does not decrease on " + print_term(t));
      }
      if (after > before) o.fail("norm grows on " + print_term(t));
      if (after == before) {
        if (stalls == 0 || prev.size() < stall_size) {
          stall_size = prev.size();
          first_stall = print_term(prev) + " -> " + print_term(s.term);
        }
        ++stalls;
      }
      prev = s.term;
    }
    steps += inner.trace.size();
  }
  const auto cps = critical_pairs();
  if (cps.size() != 7) o.fail("expected 7 critical pairs");
  for (const auto& [u, v] : cps) {
    if (!join(u, v)) o.fail("critical pair does not join: " + print_term(u));
  }
  // Whole-term strict decrease is required literally. It cannot hold when the
  // redex sits in the smaller branch of a conditional, so stalls are counted
  // and reported rather than excused.
  if (stalls > 0) {
    o.fail("strategies agree and 7/7 critical pairs join, but " + std::to_string(stalls) + " of " + std::to_string(steps) +
           " steps keep the whole-term norm equal (redex norm still drops), smallest: " + first_stall);
  }
  if (o.pass) o.detail = "10000 terms, " + std::to_string(steps) + " traced steps, 7/7 critical pairs join";
  return o;
}

// 2 ---------------------------------------------------------------------------

Verdict decision_agreement() {
  Verdict o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t pairs = 0;
  for (const Alphabet& alphabet : {Alphabet({"a"}), Alphabet({"a", "b"})}) {
    const std::vector<Term> pool = enumerate_closed_terms(alphabet, kPoolSize);
    for (std::size_t i = 0; i < pool.size() && o.pass; ++i) {
      for (std::size_t j = i; j < pool.size() && o.pass; ++j) {
        for (Variety v : kVarieties) {
          if (decide(v, pool[i], pool[j], alphabet) != congruent_oracle(v, pool[i], pool[j], alphabet)) {
            o.fail(std::string(variety_name(v)) + ": " + print_term(pool[i]) + " vs " + print_term(pool[j]));
          }
        }
        ++pairs;
      }
    }
  }
  const auto split = std::chrono::steady_clock::now();
  const double exhaustive_secs = std::chrono::duration<double>(split - start).count();
  // Larger random pairs; half are paired with a congruent image.
  Rng rng(2);
  const Alphabet alphabets[] = {Alphabet({"a", "b"}), Alphabet({"a", "b", "c"})};
  TermShape shape;
  shape.max_size = 16;
  std::size_t random_pairs = 0;
  for (std::size_t attempt = 0; random_pairs < 2000 && attempt < 1'000'000 && o.pass; ++attempt) {
    const Alphabet& alphabet = alphabets[attempt % 2];
    const Term p = random_term(rng, alphabet, shape);
    if (p.size() <= kPoolSize) continue;
    Term q = random_term(rng, alphabet, shape);
    switch (random_pairs % 6) {
      case 0: q = to_bf_rp(p, alphabet); break;
      case 1: q = to_bf_cr(p, alphabet); break;
      case 2: q = to_bf_st(p, alphabet); break;
      default: break;
    }
    for (Variety v : kVarieties) {
      if (decide(v, p, q, alphabet) != congruent_oracle(v, p, q, alphabet)) {
        o.fail(std::string(variety_name(v)) + ": " + print_term(p) + " vs " + print_term(q));
      }
    }
    ++random_pairs;
  }
  if (random_pairs < 2000) o.fail("only " + std::to_string(random_pairs) + " random pairs");
  if (o.pass) {
    o.detail = std::to_string(pairs) + " exhaustive pairs (node count <= 7 over {a} and {a,b}) and " + std::to_string(random_pairs) +
               " random pairs, 4 varieties each, zero disagreements; exhaustive " + seconds(exhaustive_secs) + ", random " +
               seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - split).count());
  }
  return o;
}

// 3 ---------------------------------------------------------------------------

Verdict identities_prove() {
  Verdict o;
  struct Identity {
    const char* lhs;
    const char* rhs;
    bool also_fr;
  };
  const Identity ids[] = {
      {"~~X", "X", true},
      {"~(X <or Y)", "~X <& ~Y", true},
      {"X ; (Y ; Z)", "(X ; Y) ; Z", true},
      {"X <| (F <| Y |> T) |> Z", "Z <| Y |> X", false},
      {"X <| Y |> (Z <| U |> V)", "(X <| Y |> Z) <| U |> (X <| Y |> V)", false},
      {"X <| Y |> (Z <| Y |> U)", "X <| Y |> U", false},
  };
  int n = 0;
  for (const auto& id : ids) {
    const auto st = cli::run({"prove", "--variety", "st", id.lhs, id.rhs});
    if (st.code != 0 || st.out != "EQUAL\n") o.fail(std::string("st: ") + id.lhs + " = " + id.rhs);
    ++n;
    if (id.also_fr) {
      const auto fr = cli::run({"prove", "--variety", "fr", id.lhs, id.rhs});
      if (fr.code != 0 || fr.out != "EQUAL\n") o.fail(std::string("fr: ") + id.lhs + " = " + id.rhs);
      ++n;
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " prove runs returned EQUAL";
  return o;
}

// 4 ---------------------------------------------------------------------------

Verdict separation_witnesses() {
  Verdict o;
  const Alphabet ab({"a", "b"});
  const Alphabet abcde({"a", "b", "c", "d", "e"});
  const Alphabet abcd({"a", "b", "c", "d"});
  const Term faf = P("F <| a |> F"), f = P("F");
  const Term r1 = P("(b <| a |> c) <| a |> d"), r2 = P("(b <| a |> e) <| a |> d"), r3 = P("b <| a |> d");
  struct Check {
    const char* what;
    bool got;
    bool want;
  };
  const Check checks[] = {
      {"fr F<|a|>F = F", decide(Variety::Fr, faf, f, ab), false},
      {"st F<|a|>F = F", decide(Variety::St, faf, f, ab), true},
      {"rp (b<|a|>c)<|a|>d = (b<|a|>e)<|a|>d", decide(Variety::Rp, r1, r2, abcde), true},
      {"fr (b<|a|>c)<|a|>d = (b<|a|>e)<|a|>d", decide(Variety::Fr, r1, r2, abcde), false},
      {"cr (b<|a|>c)<|a|>d = b<|a|>d", decide(Variety::Cr, r1, r3, abcd), true},
      {"rp (b<|a|>c)<|a|>d = b<|a|>d", decide(Variety::Rp, r1, r3, abcd), false},
  };
  for (const auto& c : checks) {
    if (c.got != c.want) o.fail(c.what);
  }
  if (o.pass) o.detail = "6/6 exact matches";
  return o;
}

// 5 ---------------------------------------------------------------------------

Verdict single_atom_collapse() {
  Verdict o;
  const Alphabet a({"a"});
  const std::vector<Term> pool = enumerate_closed_terms(a, kPoolSize);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < pool.size() && o.pass; ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      const bool rp = decide(Variety::Rp, pool[i], pool[j], a);
      const bool cr = decide(Variety::Cr, pool[i], pool[j], a);
      const bool st = decide(Variety::St, pool[i], pool[j], a);
      if (rp != cr || cr != st) o.fail(print_term(pool[i]) + " vs " + print_term(pool[j]));
      ++pairs;
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " ordered pairs over {a}, node count <= 7";
  return o;
}

// 6 ---------------------------------------------------------------------------

Verdict boolean_bridge() {
  Verdict o;
  Rng rng(6);
  const Alphabet ab({"a", "b"});
  TermShape shape;
  shape.max_size = 15;
  TermShape open = shape;
  open.vars = {"X", "Y"};
  for (int i = 0; i < 2000 && o.pass; ++i) {
    const Term s = random_term(rng, ab, i % 2 ? shape : open);
    const Term back = from_ba(to_ba(s));
    const bool ok = is_closed(s) ? decide(Variety::St, s, back, ab) : decide_st_via_ba(s, back);
    if (!ok) o.fail("(s')* differs for " + print_term(s));
  }
  for (int i = 0; i < 2000 && o.pass; ++i) {
    const BATerm s = random_ba_term(rng, {"a", "b"}, {"X", "Y"}, 15);
    if (!ba_equal(to_ba(from_ba(s)), s)) o.fail("(s*)' differs for " + print_ba(s));
  }
  const std::vector<Term> pool = enumerate_closed_terms(ab, kPoolSize);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < pool.size() && o.pass; ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      if (decide_st_via_ba(pool[i], pool[j]) != decide(Variety::St, pool[i], pool[j], ab)) {
        o.fail("bridge disagrees: " + print_term(pool[i]) + " vs " + print_term(pool[j]));
      }
      ++pairs;
    }
  }
  const std::pair<const char*, const char*> axioms[] = {
      {"X | Y", "Y | X"},       {"X & Y", "Y & X"},         {"X | (Y | Z)", "(X | Y) | Z"},
      {"X & (X | Y)", "X"},     {"X | (X & Y)", "X"},       {"X | (Y & Z)", "(X | Y) & (X | Z)"},
      {"F | X", "X"},           {"X & T", "X"},             {"X & !X", "F"},
      {"!X | X", "T"},          {"!(X & Y)", "!X | !Y"},
  };
  for (const auto& [l, r] : axioms) {
    if (!ba_equal(parse_ba(l), parse_ba(r))) o.fail(std::string("BA axiom fails: ") + l + " = " + r);
  }
  if (o.pass) {
    o.detail = "2000+2000 round trips, " + std::to_string(pairs) + " exhaustive pairs over {a,b} (node count <= 7), 11/11 BA axioms";
  }
  return o;
}

// 7 ---------------------------------------------------------------------------

Verdict independence_suite() {
  Verdict o;
  IndependenceOptions opt;
  opt.bound = 3;
  const Alphabet a({"a"});
  struct Target {
    AxiomSet set;
    Axiom axiom;
    const char* model;
    const char* lhs;
    const char* rhs;
  };
  const Target targets[] = {
      {AxiomSet::CP, Axiom::CP1, "Phi1", "T", "F"},
      {AxiomSet::CP, Axiom::CP2, "Phi2", "F", "T"},
      {AxiomSet::CP, Axiom::CP3, "Phi3", "0", "1"},
      {AxiomSet::CP, Axiom::CP4, "Phi4", "1", "2"},
      {AxiomSet::CPrp, Axiom::CPrp1, "rp1", nullptr, nullptr},
      {AxiomSet::CPrp, Axiom::CPrp2, "rp2", nullptr, nullptr},
      {AxiomSet::CPcr, Axiom::CPcr1, "cr1", nullptr, nullptr},
      {AxiomSet::CPcr, Axiom::CPcr2, "cr2", nullptr, nullptr},
      {AxiomSet::CPst, Axiom::CPstat, "statcounter", "F", "T"},
      {AxiomSet::CPst, Axiom::CPcontr, "PhiContr", "4", "2"},
  };
  int valid = 0;
  for (const auto& t : targets) {
    const IndependenceReport r = independence_report(t.set, t.axiom, a, opt);
    const std::string name = std::string(axiom_set_name(t.set)) + "/" + std::string(axiom_name(t.axiom));
    if (!r.valid()) o.fail(name + " report invalid");
    if (r.model != t.model) o.fail(name + " used model " + r.model);
    if (t.lhs && (r.witness_lhs != t.lhs || r.witness_rhs != t.rhs)) {
      o.fail(name + " witness values " + r.witness_lhs + " vs " + r.witness_rhs);
    }
    valid += r.valid();
    // Node count <= 7 pools hold every term with up to five leaves.
    IndependenceOptions wide = opt;
    wide.bound = 7;
    if (!independence_report(t.set, t.axiom, a, wide).valid()) o.fail(name + " report invalid at k=7");
  }
  // Specific witness terms behind the numbers.
  if (interpret({ModelId::Phi1, a}, P("F <| T |> F")) != 1 || interpret({ModelId::Phi1, a}, P("F")) != 0) {
    o.fail("Phi1 witness");
  }
  if (interpret({ModelId::Phi2, a}, P("T <| F |> T")) != 0) o.fail("Phi2 witness");
  if (interpret({ModelId::Phi3, a}, P("T <| a |> F")) != 0 || interpret({ModelId::Phi3, a}, P("a")) != 1) {
    o.fail("Phi3 witness");
  }
  if (interpret({ModelId::Phi4, a}, P("T <| (F <| a |> T) |> T")) != 1 ||
      interpret({ModelId::Phi4, a}, P("(T <| F |> T) <| a |> (T <| T |> T)")) != 2) {
    o.fail("Phi4 witness");
  }
  if (interpret({ModelId::PhiContr, a}, P("(T <| a |> F) <| a |> F")) != 4 ||
      interpret({ModelId::PhiContr, a}, P("T <| a |> F")) != 2) {
    o.fail("PhiContr witness");
  }
  const StatCounterWitness w = statcounter_witness();
  if (eval(w.lhs, w.valuation) || !eval(w.rhs, w.valuation) ||
      !check_constraints(w.valuation, statcounter_probes(w.lhs, w.rhs))) {
    o.fail("StatCounter witness");
  }
  // rp1 and cr1 witness tables break their target and keep the mirror axiom.
  const std::pair<Axiom, Axiom> mirrors[] = {{Axiom::CPrp1, Axiom::CPrp2}, {Axiom::CPcr1, Axiom::CPcr2}};
  for (const auto& [target, mirror] : mirrors) {
    const AxiomSet set = target == Axiom::CPrp1 ? AxiomSet::CPrp : AxiomSet::CPcr;
    const IndependenceReport r = independence_report(set, target, a, opt);
    if (!r.witness_valuation) {
      o.fail("missing witness valuation");
      continue;
    }
    const Valuation& v = *r.witness_valuation;
    if (!check_constraints(v) || instance_holds(r.witness.lhs, r.witness.rhs, v)) {
      o.fail(std::string(axiom_name(target)) + " witness table does not refute it");
    }
    const std::vector<Term> leaves = {Term::t(), Term::f()};
    for (const Term& x : leaves) {
      for (const Term& y : leaves) {
        for (const Term& z : leaves) {
          const AxiomInstance inst =
              instantiate(mirror, {{"X", x}, {"Y", y}, {"Z", z}, {std::string(kAtomMeta), Term::atom("a")}});
          if (!instance_holds(inst.lhs, inst.rhs, v)) {
            o.fail(std::string(axiom_name(mirror)) + " fails on the " + std::string(axiom_name(target)) + " table");
          }
        }
      }
    }
  }
  const std::pair<AxiomSet, Axiom> open[] = {
      {AxiomSet::CPcr, Axiom::CP4}, {AxiomSet::CPst, Axiom::CP1}, {AxiomSet::CPst, Axiom::CP4}};
  int unresolved = 0;
  for (const auto& [set, ax] : open) {
    try {
      independence_report(set, ax, a, opt);
      o.fail(std::string(axiom_name(ax)) + " in " + std::string(axiom_set_name(set)) + " was not refused");
    } catch (const UnresolvedIndependence&) {
      ++unresolved;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(valid) + "/10 reports valid at k=3 (and at k=7), " + std::to_string(unresolved) + "/3 unresolved";
  }
  return o;
}

// 8 ---------------------------------------------------------------------------

Verdict nonreplicating_soundness() {
  Verdict o;
  const Alphabet abc({"a", "b", "c"});
  SoundnessOptions opt;
  opt.trials = 10000;
  opt.seed = 8;
  opt.alphabet = abc;
  opt.depth = 4;
  const SoundnessResult r = check_axiom_soundness(SemVariety::Nr, Axiom::CP5, opt);
  if (!r.holds) o.fail("CP5 counterexample " + print_term(r.counterexample->instance.lhs));
  if (r.checked != opt.trials) o.fail("CP5 checked " + std::to_string(r.checked) + " of 10000");

  Rng rng(88);
  TermShape shape;
  shape.max_size = 11;
  std::size_t property_checks = 0;
  for (int i = 0; i < 10000 && o.pass; ++i) {
    const Valuation v = random_valuation(SemVariety::Nr, abc, 4, rng());
    const Term p = random_term(rng, abc, shape);
    const Term q = random_term(rng, abc, shape);
    const std::string a = abc[rng() % abc.size()];
    History h;
    for (std::size_t k = rng() % 3; k > 0; --k) h = v.derive_atom(h, abc[rng() % abc.size()]);
    const History pa = derivative(p, v, v.derive_atom(h, a));
    if (v.derive_atom(pa, a) != pa) o.fail("repeat after derivative not absorbed for " + print_term(p));
    if (eval(p, v, derivative(q, v, derivative(p, v, h))) != eval(p, v, h)) o.fail("value changes after a derivative for " + print_term(p));
    const History ph = derivative(p, v, h);
    if (derivative(p, v, derivative(q, v, ph)) != derivative(q, v, ph)) o.fail("derivative not idempotent over " + print_term(q));
    property_checks += 3;
  }
  if (o.pass) o.detail = "CP5 holds on 10000 trials; " + std::to_string(property_checks) + " derivative property instances";
  return o;
}

// 9 ---------------------------------------------------------------------------

Verdict omega_completeness_smoke() {
  Verdict o;
  Rng rng(9);
  const Alphabet ab({"a", "b"});
  TermShape shape;
  shape.max_size = 11;
  shape.vars = {"X", "Y"};
  int pairs = 0;
  for (int guard = 0; pairs < 500 && guard < 100000 && o.pass; ++guard) {
    const Term s = random_term(rng, ab, shape);
    const Term t = random_term(rng, ab, shape);
    if (is_closed(s) && is_closed(t)) continue;
    if (prove_equal_cp(s, t)) continue;
    ++pairs;
    std::vector<std::string> vars;
    for (const auto& v : vars_of(s)) vars.push_back(v);
    for (const auto& v : vars_of(t)) {
      if (!vars_of(s).count(v)) vars.push_back(v);
    }
    bool separated = false;
    for (std::size_t mask = 0; mask < (std::size_t{1} << vars.size()) && !separated; ++mask) {
      Substitution sigma;
      for (std::size_t k = 0; k < vars.size(); ++k) sigma.insert_or_assign(vars[k], Term::atom(ab[(mask >> k) & 1U]));
      separated = !decide(Variety::Fr, substitute(s, sigma), substitute(t, sigma), ab);
    }
    if (!separated) o.fail("no separating substitution for " + print_term(s) + " vs " + print_term(t));
  }
  if (pairs < 500) o.fail("only " + std::to_string(pairs) + " pairs generated");
  if (o.pass) o.detail = "500/500 unequal open pairs separated by an atom substitution";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"rewriting convergence", rewriting_convergence},
      {"decision procedures agree with the valuation oracle", decision_agreement},
      {"identities prove", identities_prove},
      {"variety separation witnesses", separation_witnesses},
      {"single-atom collapse", single_atom_collapse},
      {"boolean bridge", boolean_bridge},
      {"independence suite", independence_suite},
      {"non-replicating soundness", nonreplicating_soundness},
      {"omega-completeness smoke", omega_completeness_smoke},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    const auto start = std::chrono::steady_clock::now();
    Verdict o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s - %s (%s) [%.1fs]\n", n, o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
