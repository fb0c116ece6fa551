// SPDX-License-Identifier: MIT
#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "seqprop/cli.hpp"
#include "seqprop/rewrite.hpp"
#include "support.hpp"

using namespace seqprop;
using cli::run;

namespace {

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST(Cli, ProveFreeDoubleNegation) {
  const auto r = run({"prove", "--variety", "fr", "F <| (F <| x |> T) |> T", "x"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "EQUAL\n");
}

TEST(Cli, ProveStaticVersusFree) {
  auto r = run({"prove", "--variety", "st", "--alphabet", "a,b", "b <| a |> b", "b"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "EQUAL\n");
  r = run({"prove", "--variety", "fr", "b <| a |> b", "b"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "NOT EQUAL\n");
}

TEST(Cli, ProveStaticOpenTerms) {
  const auto r = run({"prove", "--variety", "st", "X ; Y", "Y"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run({"prove", "--variety", "rp", "X", "X"}).code, 2);
}

TEST(Cli, IndependenceOpenTarget) {
  const auto r = run({"independence", "--set", "cpst", "--target", "cp4"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.out, "OPEN (unresolved)\n");
}

TEST(Cli, IndependenceReport) {
  const auto r = run({"independence", "--set", "cp", "--target", "cp3", "--bound", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("model Phi3\n"), std::string::npos);
  EXPECT_NE(r.out.find("values 0 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("status valid\n"), std::string::npos);
}

TEST(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"prove", "--variety", "xx", "a", "a"}).code, 2);
  const auto r = run({"normalize", "T <| a"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("at 6..6"), std::string::npos) << r.err;
  EXPECT_EQ(run({"prove", "--variety", "fr", "--alphabet", "a", "a", "b"}).code, 2);
}

TEST(Cli, NormalizeWithTrace) {
  const auto r = run({"normalize", "--trace", "T <| (T <| b |> F) |> F"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "step 1: R3 at ante => T <| b |> F\nstep 2: R3 at root => b\nb\n");
  EXPECT_EQ(run({"normalize", "a <| (b <| c |> d) |> e"}).out, "(a <| b |> e) <| c |> (a <| d |> e)\n");
}

TEST(Cli, StdinTerm) {
  const auto r = run({"normalize", "-"}, "T <| a |> F\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "a\n");
}

TEST(Cli, BasicForm) {
  EXPECT_EQ(run({"basic-form", "--variety", "st", "--alphabet", "a,b", "a"}).out,
            "(T <| b |> T) <| a |> (F <| b |> F)\n");
  EXPECT_EQ(run({"basic-form", "--variety", "fr", "F <| (a <| b |> c) |> T"}).out,
            "(F <| a |> T) <| b |> (F <| c |> T)\n");
  EXPECT_EQ(run({"basic-form", "--variety", "cr", "--alphabet", "a,b", "(T <| a |> T) <| a |> F"}).out,
            "T <| a |> F\n");
}

TEST(Cli, EvalFromStdin) {
  const std::string file = "variety fr\nalphabet a b\ndepth 2\n@eps : a=1\n@a : a=0 b=1\n";
  const auto r = run({"eval", "--valuation", "-", "a <| a |> b"}, file);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "F @a.a\n");
  const auto bad = run({"eval", "--valuation", "-", "a"}, "variety rp\nalphabet a\ndepth 1\n@eps : a=1\n");
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, TruthTable) {
  const auto r = run({"truth-table", "--variety", "fr", "a <| a |> F"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 8u);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "@eps:a=0 @a:a=0 @a.a:a=0 => F");
  EXPECT_NE(r.out.find("@eps:a=1 @a:a=1 @a.a:a=0 => T\n"), std::string::npos);
  EXPECT_EQ(count_lines(run({"truth-table", "--variety", "rp", "a <| a |> F"}).out), 2u);
  EXPECT_EQ(run({"truth-table", "--variety", "fr", "--alphabet", "a,b,c", "a"}).code, 3);
}

TEST(Cli, BooleanTranslations) {
  EXPECT_EQ(run({"to-ba", "a <| b |> c"}).out, "(!b | a) & (b | c)\n");
  EXPECT_EQ(run({"from-ba", "X | Y"}).out, "T <| X |> Y\n");
  EXPECT_EQ(run({"from-ba", "a &"}).code, 2);
}

TEST(Cli, CheckLaws) {
  const auto r = run({"check-laws", "--variety", "st", "--trials", "50", "--seed", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 11u);
  EXPECT_NE(r.out.find("CP4 holds checked=50\n"), std::string::npos);
  EXPECT_NE(r.out.find("CPcontr holds"), std::string::npos);
  const auto fr = run({"check-laws", "--variety", "fr", "--trials", "200", "--seed", "3"});
  EXPECT_NE(fr.out.find("CPrp1 fails"), std::string::npos);
  EXPECT_NE(fr.out.find(" values "), std::string::npos);
}

TEST(Cli, SeedFromEnvironmentIsDeterministic) {
  ::setenv("SEQPROP_SEED", "17", 1);
  const auto a = run({"check-laws", "--variety", "fr", "--trials", "100"});
  const auto b = run({"check-laws", "--variety", "fr", "--trials", "100"});
  const auto c = run({"check-laws", "--variety", "fr", "--trials", "100", "--seed", "17"});
  ::setenv("SEQPROP_SEED", "x", 1);
  const auto bad = run({"check-laws", "--variety", "fr", "--trials", "1"});
  ::unsetenv("SEQPROP_SEED");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  EXPECT_EQ(bad.code, 2);
}

TEST(CliProperties, ProveAgreesWithNormalize) {
  Rng rng(81);
  const Alphabet ab({"a", "b"});
  TermShape shape;
  shape.max_size = 13;
  shape.vars = {"X", "Y"};
  for (int i = 0; i < 1000; ++i) {
    const Term p = random_term(rng, ab, shape);
    const Term q = i % 3 == 0 ? nf(p) : random_term(rng, ab, shape);
    const auto r = run({"prove", "--variety", "fr", print_term(p), print_term(q)});
    const std::string np = run({"normalize", print_term(p)}).out;
    const std::string nq = run({"normalize", print_term(q)}).out;
    ASSERT_EQ(r.code == 0, np == nq) << print_term(p) << " vs " << print_term(q);
    ASSERT_EQ(r.out, np == nq ? "EQUAL\n" : "NOT EQUAL\n");
  }
}
