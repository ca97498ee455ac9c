#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "oseq/osequence.hpp"
#include "oseq/properties.hpp"
#include "test_util.hpp"

using namespace oseq;

TEST(DivisorCount, Examples) {
  EXPECT_EQ(divisor_count(Monomial({2, 1}), 2), 2);  // x^2, xy
  for (unsigned i = 0; i <= 9; ++i) EXPECT_EQ(divisor_count(Monomial({9}), i), 1);
  EXPECT_EQ(divisor_count(Monomial({1, 1, 1}), 2), 3);
}

TEST(DivisorCount, OutOfRange) {
  try {
    divisor_count(Monomial({2, 1}), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
  }
  EXPECT_THROW(divisor_count(Monomial({2, 1}), -1), Error);
  EXPECT_EQ(divisor_count_or_zero(Monomial({2, 1}), 4), 0);
  EXPECT_EQ(divisor_count_or_zero(Monomial({2, 1}), -1), 0);
}

TEST(PureOSequence, IntroductoryExample) {
  GeneratorSet g(3, {Monomial({1, 1, 1}), Monomial({1, 0, 2})});
  EXPECT_EQ(pure_o_sequence(g), HilbertSequence::of({1, 3, 4, 2}));
  EXPECT_EQ(pure_o_sequence_bruteforce(g), HilbertSequence::of({1, 3, 4, 2}));
}

TEST(PureOSequence, FourMonomialTail) {
  GeneratorSet g(3, {Monomial({4, 4, 4}), Monomial({10, 1, 1}), Monomial({1, 10, 1}), Monomial({1, 1, 10})});
  auto h = pure_o_sequence(g);
  ASSERT_EQ(h.socle_degree(), 12u);
  EXPECT_TRUE(test::tail_is(h, {27, 22, 18, 12, 4}));
}

TEST(PureOSequence, TwoCubicsInTwoVariables) {
  GeneratorSet g(2, {Monomial({2, 1}), Monomial({1, 2})});
  EXPECT_EQ(oracle::divisor_counts_by_scan({{2, 1}, {1, 2}}), (std::vector<BigInt>{1, 2, 3, 2}));
  EXPECT_EQ(pure_o_sequence(g), HilbertSequence::of({1, 2, 3, 2}));
  EXPECT_EQ(pure_o_sequence_bruteforce(g), HilbertSequence::of({1, 2, 3, 2}));
}

TEST(PureOSequence, InvalidGenerators) {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  EXPECT_EQ(code_of([] { GeneratorSet(2, {Monomial({2, 1}), Monomial({1, 1})}); }), ErrorCode::InvalidGenerators);
  EXPECT_EQ(code_of([] { GeneratorSet(2, {Monomial({2, 1}), Monomial({2, 1})}); }), ErrorCode::InvalidGenerators);
  EXPECT_EQ(code_of([] { GeneratorSet(2, {}); }), ErrorCode::InvalidGenerators);
  EXPECT_EQ(code_of([] { GeneratorSet(3, {Monomial({2, 1})}); }), ErrorCode::InvalidGenerators);
  EXPECT_EQ(code_of([] { GeneratorSet(3, {Monomial({2, 1, 0})}, true); }), ErrorCode::InvalidGenerators);
  EXPECT_NO_THROW(GeneratorSet(3, {Monomial({2, 1, 0})}));
}

TEST(PureOSequence, TooManyGeneratorsForInclusionExclusion) {
  std::vector<Monomial> ms;
  for (auto& m : monomials_of_degree(3, 8)) {
    ms.push_back(m);
    if (ms.size() == kMaxInclusionExclusionType + 1) break;
  }
  GeneratorSet g(3, ms);
  try {
    pure_o_sequence(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(Bruteforce, SingleVariable) {
  auto h = pure_o_sequence_bruteforce(GeneratorSet(1, {Monomial({7})}));
  EXPECT_EQ(h, HilbertSequence::of({1, 1, 1, 1, 1, 1, 1, 1}));
}

TEST(Bruteforce, BudgetExceeded) {
  GeneratorSet g(3, {Monomial({30, 30, 30})});
  try {
    pure_o_sequence_bruteforce(g, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
    EXPECT_NE(std::string(e.what()).find("29791"), std::string::npos);
  }
}

TEST(Type1, Examples) {
  EXPECT_EQ(type1_sequence({2, 1}), HilbertSequence::of({1, 2, 2, 1}));
  EXPECT_EQ(type1_sequence({6}), HilbertSequence::of({1, 1, 1, 1, 1, 1, 1}));
  auto expected = oracle::product_of_geometric({4, 4, 4});
  EXPECT_EQ(expected, (std::vector<BigInt>{1, 3, 6, 10, 15, 18, 19, 18, 15, 10, 6, 3, 1}));
  EXPECT_EQ(type1_sequence({4, 4, 4}), HilbertSequence::algebra(expected));
  EXPECT_THROW(type1_sequence(std::span<const unsigned>{}), Error);
}

TEST(Type1, MatchesNaiveProductAndPureSequence) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto exps = test::random_exponents(rng, 1 + rng() % 6, 30);
    auto h = type1_sequence(exps);
    EXPECT_EQ(h, HilbertSequence::algebra(oracle::product_of_geometric(exps)));
    EXPECT_EQ(h, pure_o_sequence(GeneratorSet(exps.size(), {Monomial(exps)})));
  }
}

TEST(Type1, PalindromicAndLogConcave) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    auto exps = test::random_exponents(rng, 1 + rng() % 6, 30);
    auto h = type1_sequence(exps);
    EXPECT_TRUE(h.is_palindromic());
    EXPECT_TRUE(check_log_concavity(h).holds) << h.to_string();
  }
}

TEST(AppendVariable, Examples) {
  EXPECT_EQ(append_variable(HilbertSequence::of({1, 2, 2, 1})), HilbertSequence::of({1, 3, 4, 3, 1}));
  EXPECT_EQ(append_variable(HilbertSequence::of({1, 2, 2, 1})), type1_sequence({2, 1, 1}));
  EXPECT_EQ(append_variable(HilbertSequence::of({1, 1})), HilbertSequence::of({1, 2, 1}));
  EXPECT_EQ(append_variable(HilbertSequence::of({1, 2, 1})), HilbertSequence::of({1, 3, 3, 1}));
  EXPECT_EQ(append_variable(HilbertSequence::of({1, 2, 1})), type1_sequence({1, 1, 1}));
}

TEST(AppendVariable, RejectsHigherType) {
  try {
    append_variable(HilbertSequence::of({1, 3, 4, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotType1);
  }
}

TEST(AppendVariable, AgreesWithAppendingExponentOne) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    auto exps = test::random_exponents(rng, 1 + rng() % 5, 25);
    auto longer = exps;
    longer.push_back(1);
    EXPECT_EQ(append_variable(type1_sequence(exps)), type1_sequence(longer));
  }
}

TEST(PureOSequence, InclusionExclusionMatchesBruteForce) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    auto g = test::random_generator_set(rng, 4, 4, 10);
    auto h = pure_o_sequence(g);
    ASSERT_EQ(h, pure_o_sequence_bruteforce(g)) << g.to_string();
    EXPECT_EQ(h[1], g.variables_used());
    EXPECT_EQ(h.back(), g.t());
  }
}

TEST(PureOSequence, MatchesScanOracle) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = test::random_generator_set(rng, 3, 3, 7);
    std::vector<std::vector<unsigned>> raw;
    for (const auto& m : g.monomials()) raw.push_back(m.exponents);
    EXPECT_EQ(pure_o_sequence(g), HilbertSequence::algebra(oracle::divisor_counts_by_scan(raw)));
  }
}

TEST(PureOSequence, PermutationInvariant) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = test::random_generator_set(rng, 4, 4, 9);
    std::vector<std::size_t> perm(g.r());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Monomial> relabeled;
    for (const auto& m : g.monomials()) {
      Monomial p(std::vector<unsigned>(g.r()));
      for (std::size_t k = 0; k < g.r(); ++k) p.exponents[k] = m.exponents[perm[k]];
      relabeled.push_back(p);
    }
    EXPECT_EQ(pure_o_sequence(g), pure_o_sequence(GeneratorSet(g.r(), relabeled)));
  }
}

TEST(Parsing, MonomialSyntax) {
  EXPECT_EQ(parse_monomial("x1^4*x2^4*x3^2", 3), Monomial({4, 4, 2}));
  EXPECT_EQ(parse_monomial("x2", 3), Monomial({0, 1, 0}));
  EXPECT_EQ(parse_monomial(" x1 * x1^2 ", 2), Monomial({3, 0}));
  auto g = parse_generators("x1*x2*x3, x1*x3^2");
  EXPECT_EQ(g.r(), 3u);
  EXPECT_EQ(g.t(), 2u);
  EXPECT_EQ(pure_o_sequence(g), HilbertSequence::of({1, 3, 4, 2}));
  EXPECT_EQ(parse_generators("x1^12").e(), 12u);
  EXPECT_EQ(parse_generators("x2^2", 4).r(), 4u);
  EXPECT_EQ(Monomial({4, 0, 1}).to_string(), "x1^4*x3");
}

TEST(Parsing, Errors) {
  EXPECT_THROW(parse_generators(""), Error);
  EXPECT_THROW(parse_generators("y^2"), Error);
  EXPECT_THROW(parse_generators("x0^2"), Error);
  EXPECT_THROW(parse_generators("x1^"), Error);
  EXPECT_THROW(parse_generators("x1^2, x1*x2*x3"), Error);
  EXPECT_THROW(parse_monomial("x4", 3), Error);
}
