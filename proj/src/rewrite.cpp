// SPDX-License-Identifier: MIT
#include "seqprop/rewrite.hpp"

#include <sstream>

#include "seqprop/syntax.hpp"

namespace seqprop {

const std::vector<RewriteRule>& rewrite_rules() {
  static const std::vector<RewriteRule> rules = [] {
    const Term x = Term::var("X"), y = Term::var("Y"), z = Term::var("Z");
    const Term v = Term::var("V"), w = Term::var("W");
    return std::vector<RewriteRule>{
        {RuleId::R1, cond(x, Term::t(), y), x},
        {RuleId::R2, cond(x, Term::f(), y), y},
        {RuleId::R3, cond(Term::t(), x, Term::f()), x},
        {RuleId::R4, cond(x, cond(y, z, v), w), cond(cond(x, y, w), z, cond(x, v, w))},
    };
  }();
  return rules;
}

std::string rule_name(RuleId id) {
  switch (id) {
    case RuleId::R1: return "R1";
    case RuleId::R2: return "R2";
    case RuleId::R3: return "R3";
    case RuleId::R4: return "R4";
  }
  return "R?";
}

std::string position_string(const Position& p) {
  if (p.empty()) return "root";
  std::string out;
  for (Dir d : p) {
    if (!out.empty()) out += '.';
    out += d == Dir::Left ? "left" : d == Dir::Ante ? "ante" : "right";
  }
  return out;
}

namespace {

const Term& child(const Term& t, Dir d) {
  return d == Dir::Left ? t.left() : d == Dir::Ante ? t.ante() : t.right();
}

Term replace_from(const Term& t, const Position& p, std::size_t i, Term replacement) {
  if (i == p.size()) return replacement;
  Term l = t.left(), c = t.ante(), r = t.right();
  switch (p[i]) {
    case Dir::Left: l = replace_from(l, p, i + 1, std::move(replacement)); break;
    case Dir::Ante: c = replace_from(c, p, i + 1, std::move(replacement)); break;
    case Dir::Right: r = replace_from(r, p, i + 1, std::move(replacement)); break;
  }
  return cond(std::move(l), std::move(c), std::move(r));
}

constexpr Dir kOrder[3] = {Dir::Left, Dir::Ante, Dir::Right};

bool find_innermost(const Term& t, Position& path, std::optional<RewriteStep>& found) {
  if (!t.is_cond()) return false;
  for (Dir d : kOrder) {
    path.push_back(d);
    if (find_innermost(child(t, d), path, found)) return true;
    path.pop_back();
  }
  if (auto r = rewrite_root(t)) {
    found = RewriteStep{std::move(r->first), r->second, path};
    return true;
  }
  return false;
}

bool find_outermost(const Term& t, Position& path, std::optional<RewriteStep>& found) {
  if (!t.is_cond()) return false;
  if (auto r = rewrite_root(t)) {
    found = RewriteStep{std::move(r->first), r->second, path};
    return true;
  }
  for (Dir d : kOrder) {
    path.push_back(d);
    if (find_outermost(child(t, d), path, found)) return true;
    path.pop_back();
  }
  return false;
}

/// Root rewrite for a conditional whose arguments are already normal.
Term settle(const Term& l, const Term& c, const Term& r) {
  switch (c.kind()) {
    case Kind::True: return l;
    case Kind::False: return r;
    case Kind::Cond: {
      Term a = settle(l, c.left(), r);
      Term b = settle(l, c.right(), r);
      return settle(a, c.ante(), b);
    }
    default:
      if (l.kind() == Kind::True && r.kind() == Kind::False) return c;
      return cond(l, c, r);
  }
}

struct InnermostRun {
  Term root;
  RewriteTrace trace;

  Term go(Term t, Position& path) {
    for (;;) {
      if (!t.is_cond()) return t;
      Term kids[3] = {t.left(), t.ante(), t.right()};
      bool changed = false;
      for (int i = 0; i < 3; ++i) {
        path.push_back(kOrder[i]);
        Term k = go(kids[i], path);
        path.pop_back();
        if (!k.same_node(kids[i])) {
          kids[i] = std::move(k);
          changed = true;
        }
      }
      if (changed) t = cond(kids[0], kids[1], kids[2]);
      auto r = rewrite_root(t);
      if (!r) return t;
      t = r->first;
      root = replace_at(root, path, t);
      trace.push_back({root, r->second, path});
    }
  }
};

}  // namespace

const Term& subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (Dir d : p) cur = &child(*cur, d);
  return *cur;
}

Term replace_at(const Term& t, const Position& p, Term replacement) {
  return replace_from(t, p, 0, std::move(replacement));
}

std::optional<std::pair<Term, RuleId>> rewrite_root(const Term& t) {
  if (!t.is_cond()) return std::nullopt;
  const Term& c = t.ante();
  if (c.kind() == Kind::True) return std::make_pair(t.left(), RuleId::R1);
  if (c.kind() == Kind::False) return std::make_pair(t.right(), RuleId::R2);
  if (t.left().kind() == Kind::True && t.right().kind() == Kind::False) return std::make_pair(c, RuleId::R3);
  if (c.is_cond()) {
    const Term& x = t.left();
    const Term& w = t.right();
    return std::make_pair(cond(cond(x, c.left(), w), c.ante(), cond(x, c.right(), w)), RuleId::R4);
  }
  return std::nullopt;
}

std::optional<RewriteStep> rewrite_step(const Term& t) {
  std::optional<RewriteStep> found;
  Position path;
  if (!find_innermost(t, path, found)) return std::nullopt;
  found->term = replace_at(t, found->position, found->term);
  return found;
}

std::optional<RewriteStep> rewrite_step_outermost(const Term& t) {
  std::optional<RewriteStep> found;
  Position path;
  if (!find_outermost(t, path, found)) return std::nullopt;
  found->term = replace_at(t, found->position, found->term);
  return found;
}

std::string format_trace(const RewriteTrace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    out << "step " << (i + 1) << ": " << rule_name(trace[i].rule) << " at " << position_string(trace[i].position)
        << " => " << print_term(trace[i].term) << '\n';
  }
  return out.str();
}

Term nf(const Term& t) {
  if (!t.is_cond()) return t;
  return settle(nf(t.left()), nf(t.ante()), nf(t.right()));
}

NormalForm normal_form(const Term& t, bool record_trace) {
  if (!record_trace) return {nf(t), {}};
  InnermostRun run{t, {}};
  Position path;
  Term result = run.go(t, path);
  return {std::move(result), std::move(run.trace)};
}

NormalForm normal_form_outermost(const Term& t, bool record_trace) {
  NormalForm out{t, {}};
  while (auto step = rewrite_step_outermost(out.term)) {
    out.term = step->term;
    if (record_trace) out.trace.push_back(std::move(*step));
  }
  return out;
}

bool is_normal(const Term& t) {
  if (!t.is_cond()) return true;
  return !rewrite_root(t) && is_normal(t.left()) && is_normal(t.ante()) && is_normal(t.right());
}

bool prove_equal_cp(const Term& s, const Term& t) { return nf(s) == nf(t); }

std::vector<std::pair<Term, Term>> critical_pairs() {
  auto V = [](const char* n) { return Term::var(n); };
  const Term T = Term::t(), F = Term::f();
  const Term x1 = V("X1"), y1 = V("Y1"), x2 = V("X2"), y2 = V("Y2"), x3 = V("X3");
  const Term x4 = V("X4"), y4 = V("Y4"), z4 = V("Z4"), v4 = V("V4"), w4 = V("W4");
  const Term x4p = V("X4p"), y4p = V("Y4p"), z4p = V("Z4p"), v4p = V("V4p"), w4p = V("W4p");
  return {
      {cond(x4, x1, w4), cond(cond(x4, x1, w4), T, cond(x4, y1, w4))},
      {cond(x4, y2, w4), cond(cond(x4, x2, w4), F, cond(x4, y2, w4))},
      {cond(x4, x3, w4), cond(cond(x4, T, w4), x3, cond(x4, F, w4))},
      {T, T},
      {F, F},
      {cond(y4, z4, v4), cond(cond(T, y4, F), z4, cond(T, v4, F))},
      {cond(x4, cond(cond(x4p, y4p, w4p), z4p, cond(x4p, v4p, w4p)), w4),
       cond(cond(x4, x4p, w4), cond(y4p, z4p, v4p), cond(x4, w4p, w4))},
  };
}

bool join(const Term& u, const Term& v) { return nf(u) == nf(v); }

}  // namespace seqprop
