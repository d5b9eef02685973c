#include "openmarkov/laws.hpp"

#include <cmath>
#include <functional>

#include "openmarkov/blackbox.hpp"
#include "openmarkov/coarse.hpp"
#include "openmarkov/dynamics.hpp"
#include "openmarkov/generators.hpp"

namespace openmarkov {

namespace {

constexpr std::size_t kMaxStates = 5;
constexpr std::size_t kMaxBoundary = 2;
constexpr std::size_t kMaxFiber = 3;

LawResult tally(std::string name, std::size_t trials, const std::function<bool()>& trial) {
  LawResult r{std::move(name), 0, trials, false};
  for (std::size_t k = 0; k < trials; ++k) r.passed += trial() ? 1 : 0;
  r.holds = r.passed == r.total;
  return r;
}

OpenMarkov random_closed_ish(InstanceGenerator& gen) {
  const std::size_t n = gen.uniform(1, kMaxStates);
  const FinSet s = FinSet::numbered("s", gen.uniform(0, std::min(kMaxBoundary, n)));
  const FinSet t = FinSet::numbered("t", gen.uniform(0, std::min(kMaxBoundary, n)));
  return gen.open_process("x", n, s, t);
}

bool same_up_to(const FinMap& iso, const OpenMarkov& a, const OpenMarkov& b) {
  // iso : a.states -> b.states must carry H and both legs across.
  return transport(iso, a.generator()) == b.generator() &&
         compose_maps(iso, a.input_leg()).table() == b.input_leg().table() &&
         compose_maps(iso, a.output_leg()).table() == b.output_leg().table();
}

}  // namespace

LawResult law_composition_formulas(std::uint64_t seed, std::size_t trials) {
  InstanceGenerator gen(seed);
  return tally("composition: push-pull sum = copairing form", trials, [&] {
    const auto [m, n] = gen.composable_pair(kMaxStates, kMaxBoundary);
    return compose_open(m, n) == compose_open_alt(m, n);
  });
}

LawResult law_associativity(std::uint64_t seed, std::size_t trials) {
  InstanceGenerator gen(seed);
  return tally("composition: associative up to associator", trials, [&] {
    const auto [m, n] = gen.composable_pair(kMaxStates, kMaxBoundary);
    const FinSet u = n.outputs();
    const std::size_t nz = gen.uniform(std::max<std::size_t>(1, u.size()), kMaxStates);
    const OpenMarkov p = gen.open_process("z", nz, u, FinSet::numbered("w", gen.uniform(0, 1)));
    const OpenMarkov left = compose_open(compose_open(m, n), p);
    const OpenMarkov right = compose_open(m, compose_open(n, p));
    return left.inputs() == right.inputs() && left.outputs() == right.outputs() &&
           same_up_to(associator(m, n, p), left, right);
  });
}

LawResult law_unit(std::uint64_t seed, std::size_t trials) {
  InstanceGenerator gen(seed);
  return tally("composition: identity cospans are units", trials, [&] {
    const OpenMarkov m = random_closed_ish(gen);
    const OpenMarkov right = compose_open(m, identity_open(m.outputs()));
    if (!(right == m)) return false;
    const OpenMarkov left = compose_open(identity_open(m.inputs()), m);
    const PushoutResult glue = pushout(identity_open(m.inputs()).output_leg(), m.input_leg());
    return left.inputs() == m.inputs() && left.outputs() == m.outputs() &&
           same_up_to(inverse(glue.right_leg), left, m);
  });
}

LawResult law_section_independence(std::uint64_t seed, std::size_t trials) {
  InstanceGenerator gen(seed);
  return tally("coarse-graining: lumpable H gives the same H' for every section", trials, [&] {
    const OpenMarkov target = random_closed_ish(gen);
    const OpenMarkovMorphism m = gen.lift(target, kMaxFiber);
    if (!is_lumpable(m.source.generator(), m.p)) return false;
    const RatMatrix lumped = lumped_generator(m.source.generator(), m.p);
    if (!(lumped == target.generator())) return false;
    if (!(coarse_grain(m.source.generator(), uniform_section(m.p)) == lumped)) return false;
    for (std::uint64_t k = 0; k < 3; ++k) {
      if (!(coarse_grain(m.source.generator(), random_section(m.p, gen.engine()())) == lumped)) {
        return false;
      }
    }
    return true;
  });
}

LawResult law_blackbox_composition(std::uint64_t seed, std::size_t trials) {
  InstanceGenerator gen(seed);
  return tally("black-boxing preserves composition", trials, [&] {
    const auto [m, n] = gen.composable_pair(kMaxStates, kMaxBoundary);
    return check_functoriality(m, n);
  });
}

LawResult law_blackbox_tensor(std::uint64_t seed, std::size_t trials) {
  InstanceGenerator gen(seed);
  return tally("black-boxing preserves tensor", trials, [&] {
    const auto [m, n] = gen.composable_pair(kMaxStates, kMaxBoundary);
    const auto [m2, n2] = gen.composable_pair(kMaxStates, kMaxBoundary, "q");
    return check_tensor_preservation(m, n2) && check_tensor_preservation(n, m2);
  });
}

LawResult law_blackbox_2morphism(std::uint64_t seed, std::size_t trials) {
  InstanceGenerator gen(seed);
  return tally("black-boxing sends morphisms to squares", trials, [&] {
    const OpenMarkovMorphism m = gen.lift(random_closed_ish(gen), kMaxFiber);
    return check_blackbox_2morphism(m);
  });
}

LawResult law_probability_balance(std::uint64_t seed, std::size_t trials) {
  InstanceGenerator gen(seed);
  return tally("steady states: total inflow = total outflow", trials, [&] {
    const std::size_t n = gen.uniform(2, kMaxStates);
    const std::size_t ns = gen.uniform(0, std::min(kMaxBoundary, n / 2));
    const std::size_t nt = gen.uniform(0, std::min(kMaxBoundary, n - ns));
    // Disjoint ranges: inputs and outputs use different states.
    const FinSet x = FinSet::numbered("x", n);
    const FinMap both = gen.injection(FinSet::numbered("b", ns + nt), x);
    std::vector<std::size_t> in(both.table().begin(), both.table().begin() + static_cast<long>(ns));
    std::vector<std::size_t> out(both.table().begin() + static_cast<long>(ns), both.table().end());
    const OpenMarkov m(FinMap(FinSet::numbered("s", ns), x, in),
                       FinMap(FinSet::numbered("t", nt), x, out),
                       MarkovProcess(x, gen.generator(n)));
    const LinRel rel = black_box(m);
    for (std::size_t r = 0; r < rel.graph().dim(); ++r) {
      const RatVector v = rel.graph().basis().row(r);
      Rational balance = 0;
      for (std::size_t s = 0; s < ns; ++s) balance += v[ns + s];
      for (std::size_t t = 0; t < nt; ++t) balance -= v[2 * ns + nt + t];
      if (sgn(balance) != 0) return false;
    }
    return true;
  });
}

LawResult law_beck_chevalley(std::uint64_t seed, std::size_t trials) {
  InstanceGenerator gen(seed);
  return tally("Beck-Chevalley on pullback squares", trials, [&] {
    const Square sq = random_pullback_square(gen, 6);
    return pushforward_matrix(sq.g) * pullback_matrix(sq.f) ==
           pullback_matrix(sq.k) * pushforward_matrix(sq.h);
  });
}

LawResult law_beck_chevalley_power(std::uint64_t seed, std::size_t trials) {
  InstanceGenerator gen(seed);
  LawResult r = tally("Beck-Chevalley fails off pullbacks (counterexamples found)", trials, [&] {
    const Square sq = random_non_pullback_square(gen, 6);
    return !(pushforward_matrix(sq.g) * pullback_matrix(sq.f) ==
             pullback_matrix(sq.k) * pushforward_matrix(sq.h));
  });
  r.holds = r.passed >= 1;
  return r;
}

LawResult law_interchange(std::uint64_t seed, std::size_t trials) {
  InstanceGenerator gen(seed);
  return tally("interchange law for 2-morphisms", trials, [&] {
    const auto [l0, r0] = gen.composable_pair(3, kMaxBoundary);
    const OpenMarkovMorphism a1 = gen.lift(l0, 2);
    const OpenMarkovMorphism b1 = gen.lift(r0, 2, boundary_fibers(a1.g));
    const OpenMarkovMorphism a2 = gen.lift(a1.source, 2);
    const OpenMarkovMorphism b2 = gen.lift(b1.source, 2, boundary_fibers(a2.g));
    const OpenMarkovMorphism across_then_down = vcompose(hcompose(a1, b1), hcompose(a2, b2));
    const OpenMarkovMorphism down_then_across = hcompose(vcompose(a1, a2), vcompose(b1, b2));
    return across_then_down.p == down_then_across.p && across_then_down == down_then_across;
  });
}

LawResult law_chi(std::uint64_t seed, std::size_t trials) {
  InstanceGenerator gen(seed);
  return tally("tensor/composition exchange via chi", trials, [&] {
    const auto [m1, n1] = gen.composable_pair(4, kMaxBoundary, "a");
    const auto [m2, n2] = gen.composable_pair(4, kMaxBoundary, "b");
    const RatMatrix lhs = compose_open(tensor_open(m1, m2), tensor_open(n1, n2)).generator();
    const RatMatrix rhs = tensor_open(compose_open(m1, n1), compose_open(m2, n2)).generator();
    const RatMatrix chi = pushforward_matrix(chi_iso(m1, n1, m2, n2));
    return lhs * chi == chi * rhs;
  });
}

LawResult law_semigroup(std::uint64_t seed, std::size_t trials) {
  InstanceGenerator gen(seed);
  return tally("exp(tH) is stochastic", trials, [&] {
    const Eigen::MatrixXd h = to_real(gen.generator(gen.uniform(1, 6)));
    for (const double t : {0.01, 0.1, 1.0}) {
      const Eigen::MatrixXd u = expm(h, t);
      const Eigen::RowVectorXd sums = u.colwise().sum();
      if ((sums.array() - 1.0).abs().maxCoeff() > 1e-10) return false;
      if (u.minCoeff() < -1e-12) return false;
    }
    return true;
  });
}

LawResult law_coarse_semigroup(std::uint64_t seed, std::size_t trials) {
  InstanceGenerator gen(seed);
  return tally("coarse-graining commutes with exp(tH)", trials, [&] {
    const OpenMarkovMorphism m = gen.lift(random_closed_ish(gen), kMaxFiber);
    for (const double t : {0.01, 0.1, 1.0}) {
      if (coarse_grain_commutes_numeric(m.source.generator(), m.target.generator(), m.p, t) > 1e-9) {
        return false;
      }
    }
    return true;
  });
}

std::vector<LawResult> run_all_laws(std::uint64_t seed, std::size_t trials) {
  const std::size_t few = std::max<std::size_t>(1, trials / 5);
  return {
      law_composition_formulas(seed, trials),
      law_associativity(seed + 1, trials),
      law_unit(seed + 2, trials),
      law_section_independence(seed + 3, trials),
      law_blackbox_composition(seed + 4, trials),
      law_blackbox_tensor(seed + 5, trials),
      law_blackbox_2morphism(seed + 6, trials),
      law_probability_balance(seed + 7, trials),
      law_beck_chevalley(seed + 8, 2 * trials),
      law_beck_chevalley_power(seed + 9, few),
      law_interchange(seed + 10, trials),
      law_chi(seed + 11, trials),
      law_semigroup(seed + 12, trials),
      law_coarse_semigroup(seed + 13, trials),
  };
}

}  // namespace openmarkov
