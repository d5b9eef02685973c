#include <gtest/gtest.h>

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "fixtures.hpp"
#include "openmarkov/blackbox.hpp"
#include "openmarkov/dynamics.hpp"
#include "openmarkov/error.hpp"
#include "openmarkov/generators.hpp"

using namespace openmarkov;

namespace {

OpenMarkov closed(const OpenMarkov& m) {
  return OpenMarkov(FinMap::empty_into(m.states()), FinMap::empty_into(m.states()), m.process());
}

double rk4_error(const OpenMarkov& m, const Eigen::VectorXd& v0, double t, double dt) {
  const Trajectory traj = integrate_master(m, zero_flows(m), v0, t, dt);
  const Eigen::VectorXd exact = expm(to_real(m.generator()), t) * v0;
  return (traj.states.back() - exact).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(Expm, ZeroTimeIsIdentity) {
  const Eigen::MatrixXd h = to_real(fixtures::intro_first().generator());
  EXPECT_TRUE(expm(h, 0).isApprox(Eigen::MatrixXd::Identity(4, 4)));
}

TEST(Expm, TwoStateClosedForm) {
  Eigen::MatrixXd h(2, 2);
  h << -1, 0, 1, 0;
  for (const double t : {0.0, 0.3, 1.0, 5.0, 40.0}) {
    Eigen::MatrixXd expected(2, 2);
    expected << std::exp(-t), 0, 1 - std::exp(-t), 1;
    EXPECT_LE((expm(h, t) - expected).cwiseAbs().maxCoeff(), 1e-13) << t;
  }
}

TEST(Expm, AgreesWithEigenReference) {
  InstanceGenerator gen(71);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::MatrixXd h = to_real(gen.generator(gen.uniform(1, 6)));
    for (const double t : {0.01, 0.1, 1.0, 3.0}) {
      const Eigen::MatrixXd reference = (t * h).exp();
      ASSERT_LE((expm(h, t) - reference).cwiseAbs().maxCoeff(), 1e-11);
    }
  }
}

TEST(Expm, SemigroupLaw) {
  InstanceGenerator gen(73);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::MatrixXd h = to_real(gen.generator(gen.uniform(1, 6)));
    ASSERT_LE((expm(h, 0.7) - expm(h, 0.3) * expm(h, 0.4)).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Expm, Errors) {
  const Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2, 2);
  EXPECT_THROW(expm(h, -1), Error);
  Eigen::MatrixXd nan = h;
  nan(0, 0) = std::nan("");
  try {
    expm(nan, 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonFinite);
  }
  Eigen::MatrixXd huge(1, 1);
  huge << 1e300;
  EXPECT_THROW(expm(huge, 1e10), Error);
}

TEST(Expm, FiniteDifferencesRecoverTheGenerator) {
  InstanceGenerator gen(79);
  for (int trial = 0; trial < 20; ++trial) {
    const RatMatrix exact = gen.generator(gen.uniform(2, 5));
    const Eigen::MatrixXd h = to_real(exact);
    if (h.cwiseAbs().maxCoeff() == 0) continue;
    const auto n = h.rows();
    auto quotient = [&](double step) {
      return ((expm(h, step) - Eigen::MatrixXd::Identity(n, n)) / step).eval();
    };
    const double e3 = (quotient(1e-3) - h).cwiseAbs().maxCoeff();
    const double e4 = (quotient(1e-4) - h).cwiseAbs().maxCoeff();
    EXPECT_NEAR(e3 / e4, 10.0, 2.0);
    const Eigen::MatrixXd q = quotient(1e-4);
    EXPECT_LE(q.colwise().sum().cwiseAbs().maxCoeff(), 1e-9);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (i != j) {
          EXPECT_GE(q(i, j), -1e-9);
        }
      }
    }
  }
}

TEST(Integrate, ConstantWhenNothingMoves) {
  const OpenMarkov id = identity_open(FinSet{"s", "t"});
  Eigen::VectorXd v0(2);
  v0 << 0.25, 0.75;
  const Trajectory traj = integrate_master(id, zero_flows(id), v0, 1.0, 0.1);
  EXPECT_EQ(traj.times.size(), 11u);
  EXPECT_DOUBLE_EQ(traj.times.back(), 1.0);
  for (const auto& v : traj.states) EXPECT_EQ(v, v0);
}

TEST(Integrate, ClosedIntroProcessMatchesExpm) {
  const OpenMarkov m = closed(fixtures::intro_first());
  Eigen::VectorXd v0(4);
  v0 << 0.1, 0.2, 0.3, 0.4;
  EXPECT_LE(rk4_error(m, v0, 1.0, 1e-4), 1e-8);
}

TEST(Integrate, ConservesProbability) {
  InstanceGenerator gen(83);
  for (int trial = 0; trial < 20; ++trial) {
    const OpenMarkov m = gen.open_process("x", gen.uniform(1, 6), FinSet{}, FinSet{});
    const auto n = static_cast<Eigen::Index>(m.states().size());
    const Eigen::VectorXd v0 = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    for (const auto& v : integrate_master(m, zero_flows(m), v0, 1.0, 1e-2).states) {
      ASSERT_NEAR(v.sum(), 1.0, 1e-9);
      ASSERT_GE(v.minCoeff(), -1e-9);
    }
  }
}

TEST(Integrate, FourthOrderConvergence) {
  const OpenMarkov m = closed(fixtures::intro_first());
  Eigen::VectorXd v0(4);
  v0 << 1, 0, 0, 0;
  const double coarse = rk4_error(m, v0, 1.0, 0.02);
  const double fine = rk4_error(m, v0, 1.0, 0.01);
  EXPECT_NEAR(coarse / fine, 16.0, 3.0);
}

TEST(Integrate, ShortensTheLastStep) {
  const OpenMarkov m = closed(fixtures::lumped_chain());
  const Trajectory traj = integrate_master(m, zero_flows(m), Eigen::Vector3d(1, 0, 0), 0.25, 0.1);
  EXPECT_EQ(traj.times.size(), 4u);
  EXPECT_DOUBLE_EQ(traj.times.back(), 0.25);
}

TEST(Integrate, PiecewiseConstantInflow) {
  // Pure inflow into an isolated state: v(t) = integral of I.
  const FinSet x{"x"};
  const OpenMarkov m(FinMap(FinSet{"s"}, x, {0}), FinMap::empty_into(x),
                     MarkovProcess(x, RatMatrix(1, 1)));
  Eigen::VectorXd one(1), two(1);
  one << 1;
  two << 2;
  const FlowSpec flows{Schedule({0.5}, {one, two}), Schedule::zero(0)};
  const Trajectory traj = integrate_master(m, flows, Eigen::VectorXd::Zero(1), 1.0, 0.1);
  EXPECT_NEAR(traj.states.back()(0), 0.5 + 1.0, 1e-12);
}

TEST(Integrate, Errors) {
  const OpenMarkov m = fixtures::lumped_chain();
  EXPECT_THROW(integrate_master(m, zero_flows(m), Eigen::Vector3d(1, 0, 0), 1, 0), Error);
  EXPECT_THROW(integrate_master(m, zero_flows(m), Eigen::Vector2d(1, 0), 1, 0.1), Error);
  EXPECT_THROW(Schedule({1.0, 0.5}, {Eigen::VectorXd(1), Eigen::VectorXd(1), Eigen::VectorXd(1)}),
               Error);
}

TEST(SteadyStates, Examples) {
  const OpenMarkov id = identity_open(FinSet{"s"});
  EXPECT_FALSE(steady_states(id, Eigen::VectorXd::Constant(1, 1), Eigen::VectorXd::Constant(1, 2)));

  const FinSet x{"x", "y"};
  const OpenMarkov edge(FinMap(FinSet{"s"}, x, {0}), FinMap(FinSet{"t"}, x, {1}),
                        MarkovProcess::from_edges(x, {{"x", "y", 1}}));
  const auto family = steady_states(edge, Eigen::VectorXd::Ones(1), Eigen::VectorXd::Ones(1));
  ASSERT_TRUE(family);
  EXPECT_DOUBLE_EQ(family->particular(0), 1.0);
  ASSERT_EQ(family->kernel.size(), 1u);
  EXPECT_EQ(family->kernel[0], Eigen::Vector2d(0, 1));

  const auto zero = steady_states(edge, Eigen::VectorXd::Zero(1), Eigen::VectorXd::Zero(1));
  ASSERT_TRUE(zero);
  EXPECT_EQ(zero->particular, Eigen::Vector2d::Zero());
}

TEST(SteadyStates, LongIntegrationReachesTheRelation) {
  const OpenMarkov m = fixtures::lumped_chain();
  const FlowSpec flows{Schedule::constant(Eigen::VectorXd::Ones(1)),
                       Schedule::constant(Eigen::VectorXd::Ones(1))};
  const Eigen::VectorXd v = integrate_master(m, flows, Eigen::Vector3d(0, 0, 0.5), 10, 1e-3).states.back();
  EXPECT_NEAR(v(0), 1.0 / 15, 1e-10);
  EXPECT_NEAR(v(1), 1.0 / 6, 1e-10);
  EXPECT_LE(master_rhs(m, v, Eigen::VectorXd::Ones(1), Eigen::VectorXd::Ones(1)).cwiseAbs().maxCoeff(),
            1e-8);
  Eigen::VectorXd boundary(4);
  boundary << v(0), 1, v(2), 1;
  EXPECT_LE(distance_to_subspace(black_box(m).graph(), boundary), 1e-8);
}

TEST(CoarseGrainNumeric, WorkedExampleAndErrors) {
  const RatMatrix coarse{{-15, 0, 0}, {15, -6, 0}, {0, 6, 0}};
  EXPECT_LE(coarse_grain_commutes_numeric(fixtures::chain().generator(), coarse,
                                          fixtures::merge_b(), 1.0),
            1e-9);
  const RatMatrix h = fixtures::intro_first().generator();
  EXPECT_LE(coarse_grain_commutes_numeric(h, h, FinMap::identity(FinSet{"a", "b", "c", "d"}), 0.5),
            1e-12);
  try {
    coarse_grain_commutes_numeric(fixtures::chain(3).generator(), coarse, fixtures::merge_b(), 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIntertwining);
  }
}

TEST(DistanceToSubspace, Basic) {
  const Subspace line = Subspace::span(RatMatrix{{1, 1}});
  EXPECT_NEAR(distance_to_subspace(line, Eigen::Vector2d(1, -1)), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(distance_to_subspace(line, Eigen::Vector2d(3, 3)), 0.0, 1e-12);
  EXPECT_NEAR(distance_to_subspace(Subspace::zero(2), Eigen::Vector2d(3, 4)), 5.0, 1e-12);
}
