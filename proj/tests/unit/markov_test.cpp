#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "openmarkov/error.hpp"
#include "openmarkov/generators.hpp"
#include "openmarkov/markov.hpp"
#include "oracles.hpp"

using namespace openmarkov;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Internal;
}

/// Composite generator built entrywise by summing over glued labels.
RatMatrix composite_by_labels(const OpenMarkov& m, const OpenMarkov& n, const OpenMarkov& mn) {
  RatMatrix h(mn.states().size(), mn.states().size());
  // States of M keep their labels; N's states are found through the shared
  // boundary or by label.
  auto n_index = [&](std::size_t y) {
    for (std::size_t t = 0; t < n.inputs().size(); ++t) {
      if (n.input_leg()(t) == y) return mn.states().index_of(m.states()[m.output_leg()(t)]);
    }
    return mn.states().index_of(n.states()[y]);
  };
  for (std::size_t a = 0; a < m.states().size(); ++a) {
    for (std::size_t b = 0; b < m.states().size(); ++b) {
      h(mn.states().index_of(m.states()[a]), mn.states().index_of(m.states()[b])) +=
          m.generator()(a, b);
    }
  }
  for (std::size_t a = 0; a < n.states().size(); ++a) {
    for (std::size_t b = 0; b < n.states().size(); ++b) {
      h(n_index(a), n_index(b)) += n.generator()(a, b);
    }
  }
  return h;
}

}  // namespace

TEST(InfinitesimalStochastic, Validation) {
  EXPECT_TRUE(validate_infinitesimal_stochastic(fixtures::intro_first().generator()));
  EXPECT_TRUE(validate_infinitesimal_stochastic(RatMatrix(0, 0)));
  EXPECT_FALSE(validate_infinitesimal_stochastic(RatMatrix{{-1, 0}, {2, 0}}));
  EXPECT_FALSE(validate_infinitesimal_stochastic(RatMatrix{{1, -1}, {-1, 1}}));
  EXPECT_EQ(code_of([] { validate_infinitesimal_stochastic(RatMatrix(2, 3)); }),
            ErrorCode::NotSquare);
}

TEST(MarkovProcess, ReadsGeneratorFromEdges) {
  const RatMatrix expected{{Rational(-1, 2), 0, 0, 0},
                           {0, -2, 1, 0},
                           {Rational(1, 2), 2, -5, 2},
                           {0, 0, 4, -2}};
  EXPECT_EQ(fixtures::intro_first().generator(), expected);
  const RatMatrix chain{{-15, 0, 0, 0}, {8, -10, 0, 0}, {7, 4, -6, 0}, {0, 6, 6, 0}};
  EXPECT_EQ(fixtures::chain().generator(), chain);

  const FinSet xy{"x", "y"};
  const MarkovProcess parallel = MarkovProcess::from_edges(xy, {{"x", "y", 1}, {"x", "y", 2}});
  EXPECT_EQ(parallel.generator()(1, 0), Rational(3));
  EXPECT_EQ(code_of([&] { MarkovProcess::from_edges(xy, {{"x", "x", 1}}); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { MarkovProcess(xy, RatMatrix{{1, 0}, {0, 0}}); }),
            ErrorCode::NotInfinitesimalStochastic);
}

TEST(Pushforward, Examples) {
  const FinMap p = fixtures::merge_b();
  EXPECT_EQ(pushforward_matrix(p), (RatMatrix{{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(pullback_matrix(p), pushforward_matrix(p).transpose());
  EXPECT_EQ(pushforward_matrix(p), oracle::push(p));
}

TEST(OpenMarkov, RejectsNonInjectiveLegs) {
  const FinSet x{"a"};
  EXPECT_EQ(code_of([&] {
              OpenMarkov(FinMap(FinSet{"s1", "s2"}, x, {0, 0}), FinMap::empty_into(x),
                         MarkovProcess(x, RatMatrix(1, 1)));
            }),
            ErrorCode::NonInjectiveLeg);
}

TEST(Compose, IntroExampleGivesSixStates) {
  const OpenMarkov mn = compose_open(fixtures::intro_first(), fixtures::intro_second());
  EXPECT_EQ(mn.states().labels(), (std::vector<std::string>{"a", "b", "c", "d", "e", "f"}));
  EXPECT_EQ(mn.inputs(), (FinSet{"in1", "in2"}));
  EXPECT_EQ(mn.outputs(), (FinSet{"fin"}));
  const RatMatrix expected{{Rational(-1, 2), 0, 0, 0, 0, 0},  //
                           {0, -2, 1, 0, 0, 0},
                           {Rational(1, 2), 2, -5, 2, 0, 0},
                           {0, 0, 4, -16, 1, 0},
                           {0, 0, 0, 2, -1, 1},
                           {0, 0, 0, 12, 0, -1}};
  EXPECT_EQ(mn.generator(), expected);
}

TEST(Compose, BoundaryMismatch) {
  EXPECT_EQ(code_of([] { compose_open(fixtures::intro_first(), fixtures::intro_first()); }),
            ErrorCode::BoundaryMismatch);
}

TEST(Compose, MatchesLabelSumOracleAndAlternativeFormula) {
  InstanceGenerator gen(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [m, n] = gen.composable_pair(5, 2);
    const OpenMarkov mn = compose_open(m, n);
    ASSERT_TRUE(validate_infinitesimal_stochastic(mn.generator()));
    ASSERT_EQ(mn.generator(), composite_by_labels(m, n, mn));
    ASSERT_EQ(mn, compose_open_alt(m, n));
  }
}

TEST(Tensor, BlockDiagonal) {
  const OpenMarkov m = fixtures::intro_first();
  const OpenMarkov n = fixtures::lumped_chain();
  const OpenMarkov mn = tensor_open(m, n);
  EXPECT_EQ(mn.states().size(), 7u);
  EXPECT_EQ(mn.generator(), direct_sum_matrix(m.generator(), n.generator()));
  EXPECT_EQ(mn.input_leg().table(), (std::vector<std::size_t>{0, 1, 4}));
  EXPECT_EQ(mn.output_leg().table(), (std::vector<std::size_t>{3, 6}));
}

TEST(Identity, ZeroGeneratorAndUnitLaws) {
  const OpenMarkov id = identity_open(FinSet{"s"});
  EXPECT_EQ(id.generator(), RatMatrix(1, 1));
  const OpenMarkov m = fixtures::intro_first();
  EXPECT_EQ(compose_open(m, identity_open(m.outputs())), m);
  const OpenMarkov left = compose_open(identity_open(m.inputs()), m);
  EXPECT_EQ(left.generator(), m.generator());
  EXPECT_EQ(left.states().labels(), (std::vector<std::string>{"in1", "in2", "c", "d"}));
}

TEST(Chi, IsBijectionSatisfyingExchangeIdentity) {
  InstanceGenerator gen(29);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [m1, n1] = gen.composable_pair(4, 2, "a");
    const auto [m2, n2] = gen.composable_pair(4, 2, "b");
    const FinMap chi = chi_iso(m1, n1, m2, n2);
    ASSERT_TRUE(is_bijective(chi));
    const RatMatrix lhs = compose_open(tensor_open(m1, m2), tensor_open(n1, n2)).generator();
    const RatMatrix rhs = tensor_open(compose_open(m1, n1), compose_open(m2, n2)).generator();
    ASSERT_EQ(oracle::multiply(lhs, oracle::push(chi)), oracle::multiply(oracle::push(chi), rhs));
  }
}

TEST(Associator, TransportsGenerators) {
  InstanceGenerator gen(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [m, n] = gen.composable_pair(4, 2);
    const OpenMarkov p = gen.open_process("z", std::max<std::size_t>(1, n.outputs().size()),
                                          n.outputs(), FinSet{});
    const FinMap alpha = associator(m, n, p);
    const OpenMarkov left = compose_open(compose_open(m, n), p);
    const OpenMarkov right = compose_open(m, compose_open(n, p));
    ASSERT_EQ(transport(alpha, left.generator()), right.generator());
  }
}
