// SPDX-License-Identifier: MIT
#include "seqprop/generate.hpp"

#include "seqprop/errors.hpp"

namespace seqprop {

std::vector<Term> enumerate_closed_terms(const Alphabet& alphabet, std::size_t max_size, std::size_t limit) {
  std::vector<std::vector<Term>> by_size(max_size + 1);
  std::vector<Term> out;
  if (max_size == 0) return out;
  by_size[1].push_back(Term::f());
  by_size[1].push_back(Term::t());
  for (const auto& a : alphabet.names()) by_size[1].push_back(Term::atom(a));
  out = by_size[1];
  for (std::size_t n = 4; n <= max_size; ++n) {
    std::size_t count = 0;
    for (std::size_t sl = 1; sl + 2 < n; ++sl) {
      for (std::size_t sc = 1; sl + sc + 1 < n; ++sc) {
        const std::size_t sr = n - 1 - sl - sc;
        count += by_size[sl].size() * by_size[sc].size() * by_size[sr].size();
      }
    }
    if (out.size() + count > limit) {
      throw SizeGuardError("closed-term pool of size <= " + std::to_string(max_size) + " exceeds " +
                           std::to_string(limit) + " terms");
    }
    for (std::size_t sl = 1; sl + 2 < n; ++sl) {
      for (std::size_t sc = 1; sl + sc + 1 < n; ++sc) {
        const std::size_t sr = n - 1 - sl - sc;
        for (const Term& l : by_size[sl]) {
          for (const Term& c : by_size[sc]) {
            for (const Term& r : by_size[sr]) by_size[n].push_back(cond(l, c, r));
          }
        }
      }
    }
    out.insert(out.end(), by_size[n].begin(), by_size[n].end());
  }
  return out;
}

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Term random_leaf(Rng& rng, const Alphabet& alphabet, const TermShape& shape) {
  if (std::bernoulli_distribution(shape.const_weight)(rng)) {
    return pick(rng, 0, 1) == 0 ? Term::t() : Term::f();
  }
  const std::size_t n = alphabet.size() + shape.vars.size();
  const std::size_t i = pick(rng, 0, n - 1);
  if (i < alphabet.size()) return Term::atom(alphabet[i]);
  return Term::var(shape.vars[i - alphabet.size()]);
}

Term build(Rng& rng, const Alphabet& alphabet, const TermShape& shape, std::size_t budget) {
  if (budget < 4) return random_leaf(rng, alphabet, shape);
  // Split budget - 1 into three positive parts.
  const std::size_t rest = budget - 1;
  std::size_t cut1 = pick(rng, 1, rest - 1);
  std::size_t cut2 = pick(rng, 1, rest - 2);
  if (cut2 >= cut1) {
    ++cut2;
  } else {
    std::swap(cut1, cut2);
  }
  const std::size_t sl = cut1;
  const std::size_t sc = cut2 - cut1;
  const std::size_t sr = rest - cut2;
  return cond(build(rng, alphabet, shape, sl), build(rng, alphabet, shape, sc), build(rng, alphabet, shape, sr));
}

BATerm build_ba(Rng& rng, const std::vector<std::string>& atoms, const std::vector<std::string>& vars,
                std::size_t budget) {
  if (budget < 2 || pick(rng, 0, 5) == 0) {
    const std::size_t n = atoms.size() + vars.size() + 2;
    const std::size_t i = pick(rng, 0, n - 1);
    if (i == 0) return BATerm::t();
    if (i == 1) return BATerm::f();
    if (i - 2 < atoms.size()) return BATerm::atom(atoms[i - 2]);
    return BATerm::var(vars[i - 2 - atoms.size()]);
  }
  const std::size_t op = pick(rng, 0, 2);
  if (op == 0 || budget < 3) return BATerm::neg(build_ba(rng, atoms, vars, budget - 1));
  const std::size_t left = pick(rng, 1, budget - 2);
  BATerm a = build_ba(rng, atoms, vars, left);
  BATerm b = build_ba(rng, atoms, vars, budget - 1 - left);
  return op == 1 ? BATerm::conj(std::move(a), std::move(b)) : BATerm::disj(std::move(a), std::move(b));
}

}  // namespace

Term random_term(Rng& rng, const Alphabet& alphabet, const TermShape& shape) {
  const std::size_t budget = pick(rng, 1, std::max<std::size_t>(shape.max_size, 1));
  return build(rng, alphabet, shape, budget);
}

BATerm random_ba_term(Rng& rng, const std::vector<std::string>& atoms, const std::vector<std::string>& vars,
                      std::size_t max_size) {
  return build_ba(rng, atoms, vars, pick(rng, 1, std::max<std::size_t>(max_size, 1)));
}

}  // namespace seqprop
