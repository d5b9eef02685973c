#include "openmarkov/linrel.hpp"

#include "openmarkov/error.hpp"

namespace openmarkov {

namespace {

// Rows of `basis` placed at column `offset` of a width-`width` matrix.
RatMatrix embed_rows(const RatMatrix& basis, std::size_t offset, std::size_t width) {
  RatMatrix out(basis.rows(), width);
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    for (std::size_t c = 0; c < basis.cols(); ++c) out(r, offset + c) = basis(r, c);
  }
  return out;
}

RatMatrix unit_rows(std::size_t offset, std::size_t count, std::size_t width) {
  RatMatrix out(count, width);
  for (std::size_t k = 0; k < count; ++k) out(k, offset + k) = 1;
  return out;
}

}  // namespace

LinRel::LinRel(std::size_t src_dim, std::size_t tgt_dim, Subspace graph)
    : src_dim_(src_dim), tgt_dim_(tgt_dim), graph_(std::move(graph)) {
  if (graph_.ambient_dim() != src_dim_ + tgt_dim_) {
    fail(ErrorCode::DimensionMismatch, "relation graph lives in the wrong ambient space");
  }
}

LinRel id_rel(std::size_t n) { return rel_from_matrix(RatMatrix::identity(n)); }

LinRel rel_from_matrix(const RatMatrix& m) {
  // Rows (e_k, M e_k) span the graph.
  return LinRel(m.cols(), m.rows(),
                Subspace::span(hstack(RatMatrix::identity(m.cols()), m.transpose())));
}

LinRel compose_rel(const LinRel& r, const LinRel& s) {
  if (r.tgt_dim() != s.src_dim()) {
    fail(ErrorCode::DimensionMismatch, "relations meet in spaces of dimension " +
                                           std::to_string(r.tgt_dim()) + " and " +
                                           std::to_string(s.src_dim()));
  }
  const std::size_t n1 = r.src_dim();
  const std::size_t n2 = r.tgt_dim();
  const std::size_t n3 = s.tgt_dim();
  const std::size_t width = n1 + n2 + n3;

  // R ⊕ V3 and V1 ⊕ S inside V1 ⊕ V2 ⊕ V3.
  const Subspace r_wide =
      Subspace::span(vstack(embed_rows(r.graph().basis(), 0, width), unit_rows(n1 + n2, n3, width)));
  const Subspace s_wide =
      Subspace::span(vstack(embed_rows(s.graph().basis(), n1, width), unit_rows(0, n1, width)));
  const Subspace both = intersect(r_wide, s_wide);

  RatMatrix drop_middle(n1 + n3, width);
  for (std::size_t k = 0; k < n1; ++k) drop_middle(k, k) = 1;
  for (std::size_t k = 0; k < n3; ++k) drop_middle(n1 + k, n1 + n2 + k) = 1;
  return LinRel(n1, n3, apply(drop_middle, both));
}

std::vector<std::size_t> interleave_permutation(std::size_t v1, std::size_t w1, std::size_t v2,
                                                std::size_t w2) {
  std::vector<std::size_t> perm;
  perm.reserve(v1 + w1 + v2 + w2);
  for (std::size_t k = 0; k < v1; ++k) perm.push_back(k);
  for (std::size_t k = 0; k < w1; ++k) perm.push_back(v1 + v2 + k);
  for (std::size_t k = 0; k < v2; ++k) perm.push_back(v1 + k);
  for (std::size_t k = 0; k < w2; ++k) perm.push_back(v1 + v2 + w1 + k);
  return perm;
}

RatMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  RatMatrix p(perm.size(), perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) p(perm[k], k) = 1;
  return p;
}

LinRel direct_sum_rel(const LinRel& r1, const LinRel& r2) {
  const std::size_t first = r1.src_dim() + r1.tgt_dim();
  const std::size_t width = first + r2.src_dim() + r2.tgt_dim();
  const Subspace stacked = Subspace::span(
      vstack(embed_rows(r1.graph().basis(), 0, width), embed_rows(r2.graph().basis(), first, width)));
  const RatMatrix reorder = permutation_matrix(
      interleave_permutation(r1.src_dim(), r1.tgt_dim(), r2.src_dim(), r2.tgt_dim()));
  return LinRel(r1.src_dim() + r2.src_dim(), r1.tgt_dim() + r2.tgt_dim(), apply(reorder, stacked));
}

bool check_square(const RatMatrix& f, const RatMatrix& g, const LinRel& r, const LinRel& s) {
  if (f.cols() != r.src_dim() || g.cols() != r.tgt_dim() || f.rows() != s.src_dim() ||
      g.rows() != s.tgt_dim()) {
    fail(ErrorCode::DimensionMismatch, "vertical maps do not fit the relations");
  }
  return contains(s.graph(), apply(direct_sum_matrix(f, g), r.graph()));
}

}  // namespace openmarkov
