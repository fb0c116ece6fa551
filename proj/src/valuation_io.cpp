// SPDX-License-Identifier: MIT
#include <sstream>

#include "seqprop/valuation.hpp"

namespace seqprop {

namespace {

struct Line {
  std::string_view text;
  std::size_t offset;
};

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void bad(const Line& line, const std::string& msg) {
  throw ParseError(msg, {line.offset, line.offset + line.text.size()});
}

History parse_history(const Line& line, std::string_view s) {
  if (s == "eps") return {};
  History h;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = s.find('.', start);
    std::string_view part = s.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    if (!is_atom_identifier(part)) bad(line, "malformed history '" + std::string(s) + "'");
    h.emplace_back(part);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return h;
}

}  // namespace

Valuation load_valuation(std::string_view text) {
  std::optional<SemVariety> variety;
  std::optional<Alphabet> alphabet;
  std::optional<std::size_t> depth;
  std::optional<bool> special;
  std::vector<std::pair<Line, std::string_view>> entries;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    Line line{text.substr(pos, end - pos), pos};
    if (!line.text.empty() && line.text.back() == '\r') line.text.remove_suffix(1);
    pos = end + 1;
    auto w = words(line.text);
    if (w.empty() || w[0].front() == '#') continue;
    if (w[0].front() == '@') {
      entries.emplace_back(line, line.text);
      continue;
    }
    if (w.size() < 2) bad(line, "expected a value after '" + std::string(w[0]) + "'");
    if (w[0] == "variety") {
      variety = sem_variety_from_name(w[1]);
      if (!variety || w.size() != 2) bad(line, "unknown variety '" + std::string(w[1]) + "'");
    } else if (w[0] == "alphabet") {
      std::vector<std::string> names(w.begin() + 1, w.end());
      try {
        alphabet = Alphabet(std::move(names));
      } catch (const AlphabetError& e) {
        bad(line, e.what());
      }
    } else if (w[0] == "depth") {
      try {
        std::size_t used = 0;
        depth = std::stoul(std::string(w[1]), &used);
        if (used != w[1].size() || w.size() != 2) bad(line, "malformed depth");
      } catch (const std::logic_error&) {
        bad(line, "malformed depth");
      }
    } else if (w[0] == "special") {
      if (w[1] != "true" && w[1] != "false") bad(line, "special must be true or false");
      special = w[1] == "true";
    } else {
      bad(line, "unknown directive '" + std::string(w[0]) + "'");
    }
  }
  if (!variety) throw ParseError("missing 'variety' line", {0, 0});
  if (!alphabet) throw ParseError("missing 'alphabet' line", {0, 0});
  if (special) return Valuation::constant(*special, *variety, *alphabet);
  if (!depth) throw ParseError("missing 'depth' line", {0, 0});

  Valuation::Table table;
  for (const auto& [line, body] : entries) {
    const std::size_t colon = body.find(':');
    if (colon == std::string_view::npos) bad(line, "expected ':' after history");
    auto head = words(body.substr(1, colon - 1));
    if (head.size() != 1) bad(line, "expected one history before ':'");
    History h = parse_history(line, head[0]);
    auto& row = table[h];
    for (std::string_view item : words(body.substr(colon + 1))) {
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) bad(line, "expected <atom>=<0|1>");
      std::string_view atom = item.substr(0, eq);
      std::string_view bit = item.substr(eq + 1);
      if (!alphabet->contains(atom)) {
        throw AlphabetError("atom '" + std::string(atom) + "' at offset " + std::to_string(line.offset) +
                            " is not in the alphabet");
      }
      if (bit != "0" && bit != "1") bad(line, "value must be 0 or 1");
      row[std::string(atom)] = bit == "1";
    }
  }
  Valuation v(*variety, *alphabet, *depth, std::move(table));
  if (!check_constraints(v)) {
    throw ConstraintError("table violates the equations of " + std::string(sem_variety_name(*variety)));
  }
  return v;
}

std::string dump_valuation(const Valuation& v) {
  std::ostringstream out;
  out << "variety " << sem_variety_name(v.variety()) << '\n';
  out << "alphabet";
  for (const auto& a : v.alphabet().names()) out << ' ' << a;
  out << '\n';
  if (v.special() != Special::None) {
    out << "special " << (v.special() == Special::ConstTrue ? "true" : "false") << '\n';
    return out.str();
  }
  out << "depth " << v.depth() << '\n';
  for (const auto& h : canonical_histories(v.variety(), v.alphabet(), v.depth())) {
    out << '@' << history_string(h) << " :";
    for (const auto& a : v.alphabet().names()) out << ' ' << a << '=' << (v.yield(h, a) ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

}  // namespace seqprop
