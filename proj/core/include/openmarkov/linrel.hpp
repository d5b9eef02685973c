#pragma once

#include <cstddef>
#include <vector>

#include "openmarkov/matrix.hpp"
#include "openmarkov/subspace.hpp"

namespace openmarkov {

/// A linear relation R ⊆ V ⊕ W, stored as a canonical subspace of
/// Q^(dim V + dim W) with the V coordinates first.
class LinRel {
 public:
  LinRel() = default;
  /// Throws DimensionMismatch unless graph.ambient_dim() == src_dim + tgt_dim.
  LinRel(std::size_t src_dim, std::size_t tgt_dim, Subspace graph);

  std::size_t src_dim() const noexcept { return src_dim_; }
  std::size_t tgt_dim() const noexcept { return tgt_dim_; }
  const Subspace& graph() const noexcept { return graph_; }

  friend bool operator==(const LinRel&, const LinRel&) = default;

 private:
  std::size_t src_dim_ = 0;
  std::size_t tgt_dim_ = 0;
  Subspace graph_;
};

/// {(v, v)} on Q^n.
LinRel id_rel(std::size_t n);

/// The graph {(v, Mv)} of a linear map.
LinRel rel_from_matrix(const RatMatrix& m);

/// S ∘ R = {(v1, v3) : ∃ v2, (v1, v2) ∈ R, (v2, v3) ∈ S}.
/// Throws DimensionMismatch unless R.tgt_dim() == S.src_dim().
LinRel compose_rel(const LinRel& r, const LinRel& s);

/// The coordinate permutation taking (V1, W1, V2, W2) order to
/// (V1, V2, W1, W2) order: entry k is the destination of source coordinate k.
std::vector<std::size_t> interleave_permutation(std::size_t v1, std::size_t w1, std::size_t v2,
                                                std::size_t w2);

/// Permutation matrix P with (Px)[perm[k]] = x[k].
RatMatrix permutation_matrix(const std::vector<std::size_t>& perm);

/// R1 ⊕ R2 = {(v1, v2, w1, w2) : (v1, w1) ∈ R1, (v2, w2) ∈ R2}.
LinRel direct_sum_rel(const LinRel& r1, const LinRel& r2);

/// Whether (f ⊕ g) R ⊆ S, i.e. a (necessarily unique) square exists with
/// R on top, S on the bottom, f : V1 -> W1 on the left and g : V2 -> W2 on the
/// right. Throws DimensionMismatch.
bool check_square(const RatMatrix& f, const RatMatrix& g, const LinRel& r, const LinRel& s);

}  // namespace openmarkov
