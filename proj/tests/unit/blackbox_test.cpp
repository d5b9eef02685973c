#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "openmarkov/blackbox.hpp"
#include "openmarkov/error.hpp"
#include "openmarkov/generators.hpp"
#include "oracles.hpp"

using namespace openmarkov;

namespace {

/// Whether (p, I, q, O) is realised by some v: H v + i_* I - o_* O = 0,
/// i^* v = p, o^* v = q. Stacks all conditions into one linear system in v.
bool realisable(const OpenMarkov& m, const RatVector& point) {
  const std::size_t nx = m.states().size(), ns = m.inputs().size(), nt = m.outputs().size();
  RatMatrix a(nx + ns + nt, nx);
  RatVector b(nx + ns + nt);
  const RatMatrix in = oracle::push(m.input_leg());
  const RatMatrix out = oracle::push(m.output_leg());
  for (std::size_t r = 0; r < nx; ++r) {
    for (std::size_t c = 0; c < nx; ++c) a(r, c) = m.generator()(r, c);
    for (std::size_t s = 0; s < ns; ++s) b[r] -= in(r, s) * point[ns + s];
    for (std::size_t t = 0; t < nt; ++t) b[r] += out(r, t) * point[2 * ns + nt + t];
  }
  for (std::size_t s = 0; s < ns; ++s) {
    a(nx + s, m.input_leg()(s)) = 1;
    b[nx + s] = point[s];
  }
  for (std::size_t t = 0; t < nt; ++t) {
    a(nx + ns + t, m.output_leg()(t)) = 1;
    b[nx + ns + t] = point[2 * ns + t];
  }
  return solve(a, b).has_value();
}

}  // namespace

TEST(BlackBox, IdentityProcess) {
  const LinRel rel = black_box(identity_open(FinSet{"s"}));
  EXPECT_EQ(rel.src_dim(), 2u);
  EXPECT_EQ(rel.tgt_dim(), 2u);
  EXPECT_EQ(rel.graph(), Subspace::span(RatMatrix{{1, 0, 1, 0}, {0, 1, 0, 1}}));
}

TEST(BlackBox, SingleEdge) {
  const FinSet x{"x", "y"};
  const OpenMarkov m(FinMap(FinSet{"s"}, x, {0}), FinMap(FinSet{"t"}, x, {1}),
                     MarkovProcess::from_edges(x, {{"x", "y", 1}}));
  EXPECT_EQ(black_box(m).graph(), Subspace::span(RatMatrix{{1, 1, 0, 1}, {0, 0, 1, 0}}));
}

TEST(BlackBox, LumpedChain) {
  EXPECT_EQ(black_box(fixtures::lumped_chain()).graph(),
            Subspace::span(RatMatrix{{1, 15, 0, 15}, {0, 0, 1, 0}}));
}

TEST(BlackBox, BasisPointsAreRealisableAndDimensionMatches) {
  InstanceGenerator gen(61);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [m, n] = gen.composable_pair(5, 2);
    for (const OpenMarkov* p : {&m, &n}) {
      const LinRel rel = black_box(*p);
      for (std::size_t r = 0; r < rel.graph().dim(); ++r) {
        ASSERT_TRUE(realisable(*p, rel.graph().basis().row(r)));
      }
      // dim = rank of the readout restricted to steady states, computed in
      // floating point from an exact kernel basis.
      const std::size_t nx = p->states().size(), ns = p->inputs().size(),
                        nt = p->outputs().size();
      RatMatrix steady = hstack(hstack(p->generator(), oracle::push(p->input_leg())),
                                oracle::push(p->output_leg()) * Rational(-1));
      const Subspace k = kernel(steady);
      RatMatrix points(k.dim(), 2 * (ns + nt));
      for (std::size_t r = 0; r < k.dim(); ++r) {
        const RatVector x = k.basis().row(r);
        for (std::size_t s = 0; s < ns; ++s) {
          points(r, s) = x[p->input_leg()(s)];
          points(r, ns + s) = x[nx + s];
        }
        for (std::size_t t = 0; t < nt; ++t) {
          points(r, 2 * ns + t) = x[p->output_leg()(t)];
          points(r, 2 * ns + nt + t) = x[nx + ns + t];
        }
        ASSERT_TRUE(rel.graph().contains(points.row(r)));
      }
      ASSERT_EQ(static_cast<long>(rel.graph().dim()), oracle::rank(points));
    }
  }
}

TEST(BlackBoxMap, Examples) {
  EXPECT_EQ(black_box_map(FinMap::identity(FinSet{"s1", "s2"})), RatMatrix::identity(4));
  EXPECT_EQ(black_box_map(FinMap(FinSet{"s1", "s2"}, FinSet{"s"}, {0, 0})),
            (RatMatrix{{1, 1, 0, 0}, {0, 0, 1, 1}}));
  EXPECT_EQ(black_box_map(FinMap::identity(FinSet{"s"})), RatMatrix::identity(2));
}

TEST(Functoriality, Examples) {
  EXPECT_TRUE(check_functoriality(identity_open(FinSet{"s"}), identity_open(FinSet{"s"})));
  EXPECT_TRUE(check_functoriality(fixtures::intro_first(), fixtures::intro_second()));
  EXPECT_THROW(check_functoriality(fixtures::intro_second(), fixtures::intro_second()), Error);
}

TEST(Functoriality, IntroCompositeAgainstDirectKernel) {
  const OpenMarkov mn = compose_open(fixtures::intro_first(), fixtures::intro_second());
  const LinRel composed =
      compose_rel(black_box(fixtures::intro_first()), black_box(fixtures::intro_second()));
  for (std::size_t r = 0; r < composed.graph().dim(); ++r) {
    EXPECT_TRUE(realisable(mn, composed.graph().basis().row(r)));
  }
  EXPECT_EQ(composed, black_box(mn));
}

TEST(TensorPreservation, Examples) {
  EXPECT_TRUE(check_tensor_preservation(identity_open(FinSet{"s"}), identity_open(FinSet{"s"})));
  EXPECT_TRUE(check_tensor_preservation(fixtures::intro_first(), fixtures::intro_second()));
  EXPECT_EQ(tensor_boundary_permutation(1, 1, 0, 0), (std::vector<std::size_t>{0, 2, 1, 3}));
}

TEST(TwoMorphism, WorkedExampleAndIdentity) {
  const OpenMarkovMorphism merge{fixtures::chain(), fixtures::lumped_chain(),
                                 FinMap::identity(FinSet{"s"}), fixtures::merge_b(),
                                 FinMap::identity(FinSet{"t"})};
  EXPECT_TRUE(check_blackbox_2morphism(merge));
  EXPECT_TRUE(check_blackbox_2morphism(identity_morphism(fixtures::intro_first())));
  OpenMarkovMorphism broken = merge;
  broken.source = fixtures::chain(3);
  try {
    check_blackbox_2morphism(broken);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidMorphism);
  }
}
