#include "openmarkov/blackbox.hpp"

#include "openmarkov/error.hpp"

namespace openmarkov {

namespace {

void place(RatMatrix& dst, const RatMatrix& block, std::size_t row, std::size_t col) {
  for (std::size_t r = 0; r < block.rows(); ++r) {
    for (std::size_t c = 0; c < block.cols(); ++c) dst(row + r, col + c) = block(r, c);
  }
}

}  // namespace

LinRel black_box(const OpenMarkov& m) {
  const std::size_t nx = m.states().size();
  const std::size_t ns = m.inputs().size();
  const std::size_t nt = m.outputs().size();

  // [H | i_* | -o_*] acting on (v, I, O).
  RatMatrix steady(nx, nx + ns + nt);
  place(steady, m.generator(), 0, 0);
  place(steady, pushforward_matrix(m.input_leg()), 0, nx);
  place(steady, pushforward_matrix(m.output_leg()) * Rational(-1), 0, nx + ns);

  // (v, I, O) -> (i^*v, I, o^*v, O)
  RatMatrix readout(2 * ns + 2 * nt, nx + ns + nt);
  place(readout, pullback_matrix(m.input_leg()), 0, 0);
  place(readout, RatMatrix::identity(ns), ns, nx);
  place(readout, pullback_matrix(m.output_leg()), 2 * ns, 0);
  place(readout, RatMatrix::identity(nt), 2 * ns + nt, nx + ns);

  return LinRel(2 * ns, 2 * nt, apply(readout, kernel(steady)));
}

RatMatrix black_box_map(const FinMap& f) {
  const RatMatrix push = pushforward_matrix(f);
  return direct_sum_matrix(push, push);
}

bool check_functoriality(const OpenMarkov& m, const OpenMarkov& n) {
  const OpenMarkov composite = compose_open(m, n);
  return black_box(composite) == compose_rel(black_box(m), black_box(n));
}

bool check_blackbox_2morphism(const OpenMarkovMorphism& m) {
  if (!validate_morphism(m)) fail(ErrorCode::InvalidMorphism, "not a morphism of open processes");
  return check_square(black_box_map(m.f), black_box_map(m.g), black_box(m.source),
                      black_box(m.target));
}

std::vector<std::size_t> tensor_boundary_permutation(std::size_t s1, std::size_t s2,
                                                     std::size_t t1, std::size_t t2) {
  std::vector<std::size_t> perm;
  perm.reserve(2 * (s1 + s2 + t1 + t2));
  // Source side: p_S1, p_S2, I_S1, I_S2.
  for (std::size_t k = 0; k < s1; ++k) perm.push_back(k);
  for (std::size_t k = 0; k < s2; ++k) perm.push_back(2 * s1 + k);
  for (std::size_t k = 0; k < s1; ++k) perm.push_back(s1 + k);
  for (std::size_t k = 0; k < s2; ++k) perm.push_back(2 * s1 + s2 + k);
  const std::size_t off = 2 * (s1 + s2);
  for (std::size_t k = 0; k < t1; ++k) perm.push_back(off + k);
  for (std::size_t k = 0; k < t2; ++k) perm.push_back(off + 2 * t1 + k);
  for (std::size_t k = 0; k < t1; ++k) perm.push_back(off + t1 + k);
  for (std::size_t k = 0; k < t2; ++k) perm.push_back(off + 2 * t1 + t2 + k);
  return perm;
}

bool check_tensor_preservation(const OpenMarkov& m, const OpenMarkov& n) {
  const LinRel whole = black_box(tensor_open(m, n));
  const RatMatrix reorder = permutation_matrix(tensor_boundary_permutation(
      m.inputs().size(), n.inputs().size(), m.outputs().size(), n.outputs().size()));
  return apply(reorder, whole.graph()) == direct_sum_rel(black_box(m), black_box(n)).graph();
}

}  // namespace openmarkov
