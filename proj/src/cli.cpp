// SPDX-License-Identifier: MIT
#include "seqprop/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "seqprop/basic_forms.hpp"
#include "seqprop/boolean_bridge.hpp"
#include "seqprop/errors.hpp"
#include "seqprop/independence.hpp"
#include "seqprop/rewrite.hpp"
#include "seqprop/soundness.hpp"
#include "seqprop/syntax.hpp"
#include "seqprop/valuation.hpp"

namespace seqprop::cli {

namespace {

struct Args {
  std::string variety = "fr";
  std::vector<std::string> alphabet;
  std::vector<std::string> terms;
  bool trace = false;
  std::string valuation_file;
  std::optional<std::size_t> depth;
  std::string set;
  std::string target;
  std::size_t bound = 3;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 1'000;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string input(const std::string& arg, std::string_view stdin_text) {
  if (arg != "-") return arg;
  std::string s(stdin_text);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

std::optional<Alphabet> alphabet_option(const Args& a) {
  if (a.alphabet.empty()) return std::nullopt;
  return Alphabet(a.alphabet);
}

Variety variety_option(const std::string& name) {
  std::string v = name;
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (v == "fr" || v == "free") return Variety::Fr;
  if (v == "rp") return Variety::Rp;
  if (v == "cr") return Variety::Cr;
  if (v == "st") return Variety::St;
  throw UsageError("unknown variety '" + name + "' (expected fr, rp, cr or st)");
}

SemVariety sem_variety_option(const std::string& name) {
  auto v = sem_variety_from_name(name);
  if (!v) throw UsageError("unknown variety '" + name + "'");
  return *v;
}

std::uint64_t seed_of(const Args& a) {
  if (a.seed) return *a.seed;
  if (const char* env = std::getenv("SEQPROP_SEED")) {
    try {
      std::size_t used = 0;
      const std::uint64_t s = std::stoull(env, &used);
      if (used == std::string_view(env).size()) return s;
    } catch (const std::logic_error&) {
    }
    throw UsageError("SEQPROP_SEED must be a non-negative integer");
  }
  return 0;
}

int cmd_normalize(const Args& a, std::string_view in, std::ostream& out) {
  const Term t = parse_term(input(a.terms.at(0), in));
  NormalForm n = normal_form(t, a.trace);
  if (a.trace) out << format_trace(n.trace);
  out << print_term(n.term) << '\n';
  return 0;
}

int cmd_prove(const Args& a, std::string_view in, std::ostream& out) {
  const Variety v = variety_option(a.variety);
  const auto given = alphabet_option(a);
  const Term p = parse_term(input(a.terms.at(0), in), given);
  const Term q = parse_term(input(a.terms.at(1), in), given);
  const Alphabet alphabet = given ? *given : Alphabet::of_terms({p, q});
  bool equal;
  if (v == Variety::St && (!is_closed(p) || !is_closed(q))) {
    equal = decide_st_via_ba(p, q);
  } else {
    equal = decide(v, p, q, alphabet);
  }
  out << (equal ? "EQUAL" : "NOT EQUAL") << '\n';
  return equal ? 0 : 1;
}

int cmd_basic_form(const Args& a, std::string_view in, std::ostream& out) {
  const Variety v = variety_option(a.variety);
  const auto given = alphabet_option(a);
  const Term p = parse_term(input(a.terms.at(0), in), given);
  const Alphabet alphabet = given ? *given : Alphabet::of_terms({p});
  Term r = p;
  switch (v) {
    case Variety::Fr: r = to_basic_form(p); break;
    case Variety::Rp: r = to_bf_rp(p, alphabet); break;
    case Variety::Cr: r = to_bf_cr(p, alphabet); break;
    case Variety::St: r = to_bf_st(p, alphabet); break;
  }
  out << print_term(r) << '\n';
  return 0;
}

std::string read_file(const std::string& path, std::string_view in) {
  if (path == "-") return std::string(in);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read valuation file '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int cmd_eval(const Args& a, std::string_view in, std::ostream& out) {
  const Valuation v = load_valuation(read_file(a.valuation_file, in));
  const std::string text = a.valuation_file == "-" ? a.terms.at(0) : input(a.terms.at(0), in);
  const Term p = parse_term(text, v.alphabet());
  const Outcome o = run(p, v);
  out << (o.value ? 'T' : 'F') << " @" << history_string(o.history) << '\n';
  return 0;
}

int cmd_truth_table(const Args& a, std::string_view in, std::ostream& out) {
  const SemVariety v = sem_variety_option(a.variety);
  const auto given = alphabet_option(a);
  const Term p = parse_term(input(a.terms.at(0), in), given);
  require_closed(p, "truth table");
  const Alphabet alphabet = given ? *given : Alphabet::of_terms({p});
  const std::size_t depth = a.depth ? *a.depth : max_path(p);
  const auto histories = canonical_histories(v, alphabet, depth);
  for (const Valuation& val : enumerate_valuations(v, alphabet, depth)) {
    for (const auto& h : histories) {
      for (const auto& atom : alphabet.names()) {
        out << '@' << history_string(h) << ':' << atom << '=' << (val.yield(h, atom) ? 1 : 0) << ' ';
      }
    }
    out << "=> " << (eval(p, val) ? 'T' : 'F') << '\n';
  }
  return 0;
}

int cmd_to_ba(const Args& a, std::string_view in, std::ostream& out) {
  out << print_ba(to_ba(parse_term(input(a.terms.at(0), in)))) << '\n';
  return 0;
}

int cmd_from_ba(const Args& a, std::string_view in, std::ostream& out) {
  out << print_term(from_ba(parse_ba(input(a.terms.at(0), in)))) << '\n';
  return 0;
}

int cmd_independence(const Args& a, std::ostream& out) {
  const auto set = axiom_set_from_name(a.set);
  if (!set) throw UsageError("unknown axiom set '" + a.set + "' (expected cp, cprp, cpcr or cpst)");
  const auto target = axiom_from_name(a.target);
  if (!target) throw UsageError("unknown axiom '" + a.target + "'");
  const Alphabet alphabet = a.alphabet.empty() ? Alphabet({"a"}) : Alphabet(a.alphabet);
  IndependenceOptions opt;
  opt.bound = a.bound;
  opt.seed = seed_of(a);
  opt.trials = a.trials;
  try {
    const IndependenceReport r = independence_report(*set, *target, alphabet, opt);
    out << format_report(r);
    return r.valid() ? 0 : 1;
  } catch (const UnresolvedIndependence&) {
    out << "OPEN (unresolved)\n";
    return 3;
  }
}

int cmd_check_laws(const Args& a, std::ostream& out) {
  const SemVariety v = sem_variety_option(a.variety);
  SoundnessOptions opt;
  opt.trials = a.trials;
  opt.seed = seed_of(a);
  if (!a.alphabet.empty()) opt.alphabet = Alphabet(a.alphabet);
  opt.depth = a.depth;
  for (Axiom ax : all_axioms()) {
    const SoundnessResult r = check_axiom_soundness(v, ax, opt);
    out << axiom_name(ax) << ' ' << (r.holds ? "holds" : "fails") << " checked=" << r.checked;
    if (r.counterexample) {
      const auto& cx = *r.counterexample;
      out << " instance " << print_term(cx.instance.lhs) << " = " << print_term(cx.instance.rhs) << " values "
          << (cx.lhs.value ? 'T' : 'F') << ' ' << (cx.rhs.value ? 'T' : 'F');
    }
    out << '\n';
  }
  return 0;
}

}  // namespace

Result run(const std::vector<std::string>& argv, std::string_view stdin_text) {
  CLI::App app{"Conditional composition toolkit", "seqprop"};
  app.require_subcommand(1);
  Args a;
  std::optional<Command> chosen;

  auto add = [&](const char* name, const char* help, Command c) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&chosen, c] { chosen = c; });
    return sub;
  };
  auto alphabet_opt = [&](CLI::App* sub) {
    sub->add_option("--alphabet", a.alphabet, "Comma-separated atoms")->delimiter(',');
  };

  CLI::App* normalize = add("normalize", "Normal form under the four rewrite rules", Command::Normalize);
  normalize->add_option("term", a.terms)->required()->expected(1);
  normalize->add_flag("--trace", a.trace, "Print every rewrite step");

  CLI::App* prove = add("prove", "Decide equality in a variety", Command::Prove);
  prove->add_option("--variety", a.variety, "fr, rp, cr or st");
  alphabet_opt(prove);
  prove->add_option("terms", a.terms)->required()->expected(2);

  CLI::App* basic = add("basic-form", "Basic form of a closed term", Command::BasicForm);
  basic->add_option("--variety", a.variety, "fr, rp, cr or st");
  alphabet_opt(basic);
  basic->add_option("term", a.terms)->required()->expected(1);

  CLI::App* ev = add("eval", "Evaluate a closed term under a valuation file", Command::Eval);
  ev->add_option("--valuation", a.valuation_file, "Valuation file, or - for stdin")->required();
  ev->add_option("term", a.terms)->required()->expected(1);

  CLI::App* tt = add("truth-table", "Evaluate under every lawful table", Command::TruthTable);
  tt->add_option("--variety", a.variety, "Valuation variety");
  alphabet_opt(tt);
  tt->add_option("--depth", a.depth, "History bound (default: longest evaluation path)");
  tt->add_option("term", a.terms)->required()->expected(1);

  CLI::App* toba = add("to-ba", "Translate a term to Boolean algebra", Command::ToBA);
  toba->add_option("term", a.terms)->required()->expected(1);

  CLI::App* fromba = add("from-ba", "Translate a Boolean-algebra term", Command::FromBA);
  fromba->add_option("term", a.terms)->required()->expected(1);

  CLI::App* ind = add("independence", "Independence report for one axiom", Command::Independence);
  ind->add_option("--set", a.set, "cp, cprp, cpcr or cpst")->required();
  ind->add_option("--target", a.target, "Axiom name, e.g. cp3")->required();
  ind->add_option("--bound", a.bound, "Closed-term pool bound (nodes)");
  alphabet_opt(ind);
  ind->add_option("--seed", a.seed, "Seed for sampled checks");
  ind->add_option("--trials", a.trials, "Trials per axiom for sampled checks");

  CLI::App* laws = add("check-laws", "Sampled soundness check of every axiom", Command::CheckLaws);
  laws->add_option("--variety", a.variety, "Valuation variety");
  alphabet_opt(laws);
  laws->add_option("--seed", a.seed, "Seed");
  laws->add_option("--trials", a.trials, "Trials per axiom");
  laws->add_option("--depth", a.depth, "Tabulate valuations of this depth");

  std::ostringstream out, err;
  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? 0 : 2, out.str(), err.str()};
  }

  try {
    int code = 0;
    switch (*chosen) {
      case Command::Normalize: code = cmd_normalize(a, stdin_text, out); break;
      case Command::Prove: code = cmd_prove(a, stdin_text, out); break;
      case Command::BasicForm: code = cmd_basic_form(a, stdin_text, out); break;
      case Command::Eval: code = cmd_eval(a, stdin_text, out); break;
      case Command::TruthTable: code = cmd_truth_table(a, stdin_text, out); break;
      case Command::ToBA: code = cmd_to_ba(a, stdin_text, out); break;
      case Command::FromBA: code = cmd_from_ba(a, stdin_text, out); break;
      case Command::Independence: code = cmd_independence(a, out); break;
      case Command::CheckLaws: code = cmd_check_laws(a, out); break;
    }
    return {code, out.str(), err.str()};
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << '\n';
    return {3, out.str(), err.str()};
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return {2, out.str(), err.str()};
  }
}

}  // namespace seqprop::cli
