// SPDX-License-Identifier: MIT
#include "seqprop/syntax.hpp"

#include <cctype>
#include <vector>

#include "seqprop/errors.hpp"

namespace seqprop {

namespace {

enum class Tok {
  LParen,
  RParen,
  Tilde,
  CondOpen,
  CondClose,
  Semi,
  LBiimp,
  RBiimp,
  LImp,
  RImp,
  LOr,
  ROr,
  LAnd,
  RAnd,
  Bang,
  Amp,
  Bar,
  Ident,
  End
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool starts_with(std::string_view s, std::size_t i, std::string_view p) { return s.substr(i, p.size()) == p; }

std::vector<Token> lex_term(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto emit = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(s.substr(i, len)), {i, i + len}});
    i += len;
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    switch (c) {
      case '(': emit(Tok::LParen, 1); continue;
      case ')': emit(Tok::RParen, 1); continue;
      case '~': emit(Tok::Tilde, 1); continue;
      case ';': emit(Tok::Semi, 1); continue;
      default: break;
    }
    if (c == '<') {
      if (starts_with(s, i, "<->")) { emit(Tok::LBiimp, 3); continue; }
      if (starts_with(s, i, "<|")) { emit(Tok::CondOpen, 2); continue; }
      if (starts_with(s, i, "<&")) { emit(Tok::RAnd, 2); continue; }
      if (starts_with(s, i, "<or") && (i + 3 == s.size() || !ident_char(s[i + 3]))) { emit(Tok::ROr, 3); continue; }
      if (starts_with(s, i, "<-")) { emit(Tok::RImp, 2); continue; }
    } else if (c == '|' && starts_with(s, i, "|>")) {
      emit(Tok::CondClose, 2);
      continue;
    } else if (c == '&' && starts_with(s, i, "&>")) {
      emit(Tok::LAnd, 2);
      continue;
    } else if (c == '-' && starts_with(s, i, "->")) {
      emit(Tok::LImp, 2);
      continue;
    } else if (c == '>' && starts_with(s, i, ">-<")) {
      emit(Tok::RBiimp, 3);
      continue;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      if (starts_with(s, i, "or>")) {
        emit(Tok::LOr, 3);
        continue;
      }
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      emit(Tok::Ident, j - i);
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", {i, i + 1});
  }
  out.push_back({Tok::End, "", {s.size(), s.size()}});
  return out;
}

std::vector<Token> lex_ba(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Tok k = Tok::End;
    switch (c) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '!': k = Tok::Bang; break;
      case '&': k = Tok::Amp; break;
      case '|': k = Tok::Bar; break;
      default: break;
    }
    if (k != Tok::End) {
      out.push_back({k, std::string(1, c), {i, i + 1}});
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), {i, j}});
      i = j;
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", {i, i + 1});
  }
  out.push_back({Tok::End, "", {s.size(), s.size()}});
  return out;
}

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

class TermParser {
 public:
  TermParser(std::vector<Token> toks, const std::optional<Alphabet>& alphabet)
      : toks_(std::move(toks)), alphabet_(alphabet) {}

  Term parse() {
    Term t = seq();
    if (peek().kind != Tok::End) fail("unexpected " + describe(peek()));
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().span); }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what + ", found " + describe(peek()));
    ++pos_;
  }

  Term seq() {
    Term t = biimp();
    while (peek().kind == Tok::Semi) {
      next();
      t = seq_compose(t, biimp());
    }
    return t;
  }

  Term biimp() {
    Term t = imp();
    while (peek().kind == Tok::LBiimp || peek().kind == Tok::RBiimp) {
      const Tok k = next().kind;
      t = apply_connective(k == Tok::LBiimp ? Connective::LeftBiimp : Connective::RightBiimp, t, imp());
    }
    return t;
  }

  Term imp() {
    Term t = disj();
    while (peek().kind == Tok::LImp || peek().kind == Tok::RImp) {
      const Tok k = next().kind;
      t = apply_connective(k == Tok::LImp ? Connective::LeftImp : Connective::RightImp, t, disj());
    }
    return t;
  }

  Term disj() {
    Term t = conj();
    while (peek().kind == Tok::LOr || peek().kind == Tok::ROr) {
      const Tok k = next().kind;
      t = apply_connective(k == Tok::LOr ? Connective::LeftOr : Connective::RightOr, t, conj());
    }
    return t;
  }

  Term conj() {
    Term t = conditional();
    while (peek().kind == Tok::LAnd || peek().kind == Tok::RAnd) {
      const Tok k = next().kind;
      t = apply_connective(k == Tok::LAnd ? Connective::LeftAnd : Connective::RightAnd, t, conditional());
    }
    return t;
  }

  Term conditional() {
    Term l = unary();
    if (peek().kind != Tok::CondOpen) return l;
    next();
    Term c = unary();
    if (peek().kind == Tok::CondOpen) fail("nested conditional needs parentheses");
    expect(Tok::CondClose, "'|>'");
    Term r = unary();
    if (peek().kind == Tok::CondOpen) fail("conditional composition is not associative; add parentheses");
    return cond(std::move(l), std::move(c), std::move(r));
  }

  Term unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Tilde:
        next();
        return negate(unary());
      case Tok::LParen: {
        next();
        Term inner = seq();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident:
        next();
        return leaf(t);
      default:
        fail("expected a term, found " + describe(t));
    }
  }

  Term leaf(const Token& t) {
    if (t.text == "T") return Term::t();
    if (t.text == "F") return Term::f();
    if (is_var_identifier(t.text)) return Term::var(t.text);
    if (is_atom_identifier(t.text)) {
      if (alphabet_ && !alphabet_->contains(t.text)) {
        throw AlphabetError("atom '" + t.text + "' at " + std::to_string(t.span.start) + " is not in the alphabet");
      }
      return Term::atom(t.text);
    }
    throw ParseError("malformed identifier '" + t.text + "'", t.span);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const std::optional<Alphabet>& alphabet_;
};

class BAParser {
 public:
  explicit BAParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  BATerm parse() {
    BATerm t = disj();
    if (peek().kind != Tok::End) fail("unexpected " + describe(peek()));
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().span); }

  BATerm disj() {
    BATerm t = conj();
    while (peek().kind == Tok::Bar) {
      ++pos_;
      t = BATerm::disj(t, conj());
    }
    return t;
  }

  BATerm conj() {
    BATerm t = unary();
    while (peek().kind == Tok::Amp) {
      ++pos_;
      t = BATerm::conj(t, unary());
    }
    return t;
  }

  BATerm unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Bang:
        ++pos_;
        return BATerm::neg(unary());
      case Tok::LParen: {
        ++pos_;
        BATerm inner = disj();
        if (peek().kind != Tok::RParen) fail("expected ')', found " + describe(peek()));
        ++pos_;
        return inner;
      }
      case Tok::Ident:
        ++pos_;
        if (t.text == "T") return BATerm::t();
        if (t.text == "F") return BATerm::f();
        if (is_var_identifier(t.text)) return BATerm::var(t.text);
        if (is_atom_identifier(t.text)) return BATerm::atom(t.text);
        throw ParseError("malformed identifier '" + t.text + "'", t.span);
      default:
        fail("expected a term, found " + describe(t));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void print_into(const Term& t, std::string& out, bool nested) {
  switch (t.kind()) {
    case Kind::True: out += 'T'; return;
    case Kind::False: out += 'F'; return;
    case Kind::Atom:
    case Kind::Var: out += t.name(); return;
    case Kind::Cond:
      if (nested) out += '(';
      print_into(t.left(), out, true);
      out += " <| ";
      print_into(t.ante(), out, true);
      out += " |> ";
      print_into(t.right(), out, true);
      if (nested) out += ')';
      return;
  }
}

int ba_prec(const BATerm& t) {
  switch (t.kind()) {
    case BAKind::Or: return 1;
    case BAKind::And: return 2;
    case BAKind::Not: return 3;
    default: return 4;
  }
}

void print_ba_into(const BATerm& t, std::string& out, int min_prec) {
  const bool wrap = ba_prec(t) < min_prec;
  if (wrap) out += '(';
  switch (t.kind()) {
    case BAKind::True: out += 'T'; break;
    case BAKind::False: out += 'F'; break;
    case BAKind::Atom:
    case BAKind::Var: out += t.name(); break;
    case BAKind::Not:
      out += '!';
      print_ba_into(t.lhs(), out, 3);
      break;
    case BAKind::And:
      print_ba_into(t.lhs(), out, 2);
      out += " & ";
      print_ba_into(t.rhs(), out, 3);
      break;
    case BAKind::Or:
      print_ba_into(t.lhs(), out, 1);
      out += " | ";
      print_ba_into(t.rhs(), out, 2);
      break;
  }
  if (wrap) out += ')';
}

}  // namespace

Term parse_term(std::string_view text, const std::optional<Alphabet>& alphabet) {
  return TermParser(lex_term(text), alphabet).parse();
}

std::string print_term(const Term& t) {
  std::string out;
  print_into(t, out, false);
  return out;
}

BATerm parse_ba(std::string_view text) { return BAParser(lex_ba(text)).parse(); }

std::string print_ba(const BATerm& t) {
  std::string out;
  print_ba_into(t, out, 1);
  return out;
}

}  // namespace seqprop
