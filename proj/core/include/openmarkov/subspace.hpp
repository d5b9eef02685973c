#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "openmarkov/matrix.hpp"

namespace openmarkov {

/// Reduced row-echelon form with zero rows dropped.
RatMatrix rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// A linear subspace of Q^n stored by its canonical basis: the unique RREF of
/// its row space. Two subspaces are equal iff their bases are identical.
class Subspace {
 public:
  /// The zero subspace of Q^0.
  Subspace() = default;

  /// Row space of `generators` (rows need not be independent).
  static Subspace span(const RatMatrix& generators);
  static Subspace span(std::size_t ambient_dim, const std::vector<RatVector>& generators);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  /// RREF rows, one basis vector per row.
  const RatMatrix& basis() const noexcept { return basis_; }

  bool contains(const RatVector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t ambient_dim, RatMatrix canonical_basis)
      : ambient_dim_(ambient_dim), basis_(std::move(canonical_basis)) {}

  std::size_t ambient_dim_ = 0;
  RatMatrix basis_;
};

/// {v : Mv = 0}, a subspace of Q^cols.
Subspace kernel(const RatMatrix& m);
/// Column space of M, a subspace of Q^rows.
Subspace image(const RatMatrix& m);
/// M·S. Throws DimensionMismatch unless S.ambient_dim() == M.cols().
Subspace apply(const RatMatrix& m, const Subspace& s);

/// B ⊆ A. Throws DimensionMismatch on differing ambient dimensions.
bool contains(const Subspace& a, const Subspace& b);
/// Throws DimensionMismatch on differing ambient dimensions.
bool equal(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Some x with Ax = b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

}  // namespace openmarkov
