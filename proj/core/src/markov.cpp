#include "openmarkov/markov.hpp"

#include "openmarkov/error.hpp"

namespace openmarkov {

namespace {

void require_composable(const OpenMarkov& m, const OpenMarkov& n) {
  if (!(m.outputs() == n.inputs())) {
    fail(ErrorCode::BoundaryMismatch, "outputs " + to_string(m.outputs()) +
                                          " do not match inputs " + to_string(n.inputs()));
  }
}

RatMatrix push_pull(const FinMap& f, const RatMatrix& h) {
  return pushforward_matrix(f) * h * pullback_matrix(f);
}

OpenMarkov assemble_composite(const OpenMarkov& m, const OpenMarkov& n, const PushoutResult& glue,
                              RatMatrix generator) {
  if (!validate_infinitesimal_stochastic(generator)) {
    fail(ErrorCode::Internal, "composite generator is not infinitesimal stochastic");
  }
  return OpenMarkov(compose_maps(glue.left_leg, m.input_leg()),
                    compose_maps(glue.right_leg, n.output_leg()),
                    MarkovProcess(glue.apex, std::move(generator)));
}

}  // namespace

bool validate_infinitesimal_stochastic(const RatMatrix& h) {
  if (!h.is_square()) {
    fail(ErrorCode::NotSquare,
         "generator is " + std::to_string(h.rows()) + "x" + std::to_string(h.cols()));
  }
  for (std::size_t j = 0; j < h.cols(); ++j) {
    Rational column_sum = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      if (i != j && sgn(h(i, j)) < 0) return false;
      column_sum += h(i, j);
    }
    if (sgn(column_sum) != 0) return false;
  }
  return true;
}

RatMatrix pushforward_matrix(const FinMap& f) {
  RatMatrix m(f.cod().size(), f.dom().size());
  for (std::size_t a = 0; a < f.dom().size(); ++a) m(f(a), a) = 1;
  return m;
}

RatMatrix pullback_matrix(const FinMap& f) { return pushforward_matrix(f).transpose(); }

MarkovProcess::MarkovProcess(FinSet states, RatMatrix generator)
    : states_(std::move(states)), generator_(std::move(generator)) {
  if (generator_.rows() != states_.size() || generator_.cols() != states_.size()) {
    fail(ErrorCode::DimensionMismatch, "generator shape does not match " + to_string(states_));
  }
  if (!validate_infinitesimal_stochastic(generator_)) {
    fail(ErrorCode::NotInfinitesimalStochastic, to_string(generator_));
  }
}

MarkovProcess MarkovProcess::from_edges(FinSet states, const std::vector<Edge>& edges) {
  const std::size_t n = states.size();
  RatMatrix h(n, n);
  for (const auto& edge : edges) {
    const std::size_t from = states.index_of(edge.src);
    const std::size_t to = states.index_of(edge.dst);
    if (from == to) fail(ErrorCode::InvalidArgument, "self-loop on '" + edge.src + "'");
    if (sgn(edge.rate) < 0) {
      fail(ErrorCode::InvalidArgument, "negative rate on " + edge.src + " -> " + edge.dst);
    }
    h(to, from) += edge.rate;
    h(from, from) -= edge.rate;
  }
  return MarkovProcess(std::move(states), std::move(h));
}

OpenMarkov::OpenMarkov(FinMap input_leg, FinMap output_leg, MarkovProcess process)
    : input_leg_(std::move(input_leg)),
      output_leg_(std::move(output_leg)),
      process_(std::move(process)) {
  if (!(input_leg_.cod() == process_.states()) || !(output_leg_.cod() == process_.states())) {
    fail(ErrorCode::ShapeMismatch, "boundary legs must land in " + to_string(process_.states()));
  }
  if (!is_injective(input_leg_)) fail(ErrorCode::NonInjectiveLeg, "input leg is not injective");
  if (!is_injective(output_leg_)) fail(ErrorCode::NonInjectiveLeg, "output leg is not injective");
}

OpenMarkov identity_open(const FinSet& boundary) {
  return OpenMarkov(FinMap::identity(boundary), FinMap::identity(boundary),
                    MarkovProcess(boundary, RatMatrix::zero(boundary.size(), boundary.size())));
}

OpenMarkov compose_open(const OpenMarkov& m, const OpenMarkov& n) {
  require_composable(m, n);
  const PushoutResult glue = pushout(m.output_leg(), n.input_leg());
  return assemble_composite(
      m, n, glue,
      push_pull(glue.left_leg, m.generator()) + push_pull(glue.right_leg, n.generator()));
}

OpenMarkov compose_open_alt(const OpenMarkov& m, const OpenMarkov& n) {
  require_composable(m, n);
  const PushoutResult glue = pushout(m.output_leg(), n.input_leg());
  const Coproduct both = coproduct(m.states(), n.states());
  const FinMap ell = copair(both, glue.left_leg, glue.right_leg);
  return assemble_composite(m, n, glue,
                            push_pull(ell, direct_sum_matrix(m.generator(), n.generator())));
}

OpenMarkov tensor_open(const OpenMarkov& m, const OpenMarkov& n) {
  const Coproduct states = coproduct(m.states(), n.states());
  const Coproduct inputs = coproduct(m.inputs(), n.inputs());
  const Coproduct outputs = coproduct(m.outputs(), n.outputs());
  return OpenMarkov(sum_map(m.input_leg(), n.input_leg(), inputs, states),
                    sum_map(m.output_leg(), n.output_leg(), outputs, states),
                    MarkovProcess(states.apex, direct_sum_matrix(m.generator(), n.generator())));
}

OpenMarkov relabel_boundary(const OpenMarkov& m, const FinSet& inputs, const FinSet& outputs) {
  if (inputs.size() != m.inputs().size() || outputs.size() != m.outputs().size()) {
    fail(ErrorCode::ShapeMismatch, "relabelling must preserve boundary sizes");
  }
  return OpenMarkov(FinMap(inputs, m.states(), m.input_leg().table()),
                    FinMap(outputs, m.states(), m.output_leg().table()), m.process());
}

RatMatrix transport(const FinMap& bijection, const RatMatrix& a) {
  if (!is_bijective(bijection)) fail(ErrorCode::ShapeMismatch, "transport needs a bijection");
  return push_pull(bijection, a);
}

FinMap chi_iso(const OpenMarkov& m1, const OpenMarkov& n1, const OpenMarkov& m2,
               const OpenMarkov& n2) {
  if (!(m1.outputs() == n1.inputs()) || !(m2.outputs() == n2.inputs())) {
    fail(ErrorCode::ShapeMismatch, "chi needs two composable pairs");
  }
  // K = (X1 +_{T1} Y1) + (X2 +_{T2} Y2)
  const PushoutResult p1 = pushout(m1.output_leg(), n1.input_leg());
  const PushoutResult p2 = pushout(m2.output_leg(), n2.input_leg());
  const Coproduct k = coproduct(p1.apex, p2.apex);

  // K' = (X1 + X2) +_{T1+T2} (Y1 + Y2)
  const OpenMarkov left = tensor_open(m1, m2);
  const OpenMarkov right = tensor_open(n1, n2);
  const PushoutResult pk = pushout(left.output_leg(), right.input_leg());
  const Coproduct xs = coproduct(m1.states(), m2.states());
  const Coproduct ys = coproduct(n1.states(), n2.states());

  return match_cocones(
      {compose_maps(k.left, p1.left_leg), compose_maps(k.right, p2.left_leg),
       compose_maps(k.left, p1.right_leg), compose_maps(k.right, p2.right_leg)},
      {compose_maps(pk.left_leg, xs.left), compose_maps(pk.left_leg, xs.right),
       compose_maps(pk.right_leg, ys.left), compose_maps(pk.right_leg, ys.right)});
}

FinMap associator(const OpenMarkov& m, const OpenMarkov& n, const OpenMarkov& p) {
  require_composable(m, n);
  require_composable(n, p);
  const PushoutResult mn = pushout(m.output_leg(), n.input_leg());
  const OpenMarkov mn_process = compose_open(m, n);
  const PushoutResult mn_p = pushout(mn_process.output_leg(), p.input_leg());

  const PushoutResult np = pushout(n.output_leg(), p.input_leg());
  const OpenMarkov np_process = compose_open(n, p);
  const PushoutResult m_np = pushout(m.output_leg(), np_process.input_leg());

  return match_cocones(
      {compose_maps(mn_p.left_leg, mn.left_leg), compose_maps(mn_p.left_leg, mn.right_leg),
       mn_p.right_leg},
      {m_np.left_leg, compose_maps(m_np.right_leg, np.left_leg),
       compose_maps(m_np.right_leg, np.right_leg)});
}

}  // namespace openmarkov
