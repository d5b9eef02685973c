#pragma once

#include <cstddef>
#include <vector>

#include "openmarkov/coarse.hpp"
#include "openmarkov/finset.hpp"
#include "openmarkov/linrel.hpp"
#include "openmarkov/markov.hpp"

namespace openmarkov {

/// Steady-state boundary relation of an open process: all (i^*v, I, o^*v, O)
/// with H v + i_* I - o_* O = 0, as a relation from Q^S ⊕ Q^S to Q^T ⊕ Q^T.
LinRel black_box(const OpenMarkov& m);

/// f_* ⊕ f_*, of shape 2|cod| x 2|dom|.
RatMatrix black_box_map(const FinMap& f);

/// black_box(M ⊙ N) == black_box(N) ∘ black_box(M). Throws BoundaryMismatch.
bool check_functoriality(const OpenMarkov& m, const OpenMarkov& n);

/// (f_* ⊕ f_* ⊕ g_* ⊕ g_*) maps black_box(source) into black_box(target).
/// Throws InvalidMorphism if m is not a valid morphism.
bool check_blackbox_2morphism(const OpenMarkovMorphism& m);

/// Coordinate permutation from black_box(M ⊗ N) order
/// (p_S1, p_S2, I_S1, I_S2 | q_T1, q_T2, O_T1, O_T2) to the order used by
/// direct_sum_rel (p_S1, I_S1, p_S2, I_S2 | q_T1, O_T1, q_T2, O_T2).
/// Entry k is the destination of coordinate k.
std::vector<std::size_t> tensor_boundary_permutation(std::size_t s1, std::size_t s2,
                                                     std::size_t t1, std::size_t t2);

/// black_box(M ⊗ N) equals black_box(M) ⊕ black_box(N) after reordering.
bool check_tensor_preservation(const OpenMarkov& m, const OpenMarkov& n);

}  // namespace openmarkov
