#include "openmarkov/subspace.hpp"

#include <utility>

#include "openmarkov/error.hpp"

namespace openmarkov {

namespace {

struct Echelon {
  RatMatrix reduced;                // zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

// Gauss-Jordan elimination. Pivots are chosen as the first nonzero entry of
// the column, which is enough in exact arithmetic.
Echelon reduce(RatMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot_row = lead;
    while (pivot_row < rows && sgn(m(pivot_row, c)) == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != lead) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(pivot_row, k), m(lead, k));
    }
    const Rational inv = 1 / m(lead, c);
    for (std::size_t k = c; k < cols; ++k) m(lead, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (sgn(m(lead, k)) != 0) m(r, k) -= factor * m(lead, k);
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  RatMatrix reduced(lead, cols);
  for (std::size_t r = 0; r < lead; ++r) {
    for (std::size_t k = 0; k < cols; ++k) reduced(r, k) = m(r, k);
  }
  return Echelon{std::move(reduced), std::move(pivots)};
}

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    fail(ErrorCode::DimensionMismatch, "subspaces of Q^" + std::to_string(a.ambient_dim()) +
                                           " and Q^" + std::to_string(b.ambient_dim()));
  }
}

}  // namespace

RatMatrix rref(const RatMatrix& m) { return reduce(m).reduced; }

std::size_t rank(const RatMatrix& m) { return reduce(m).pivots.size(); }

Subspace Subspace::span(const RatMatrix& generators) {
  return Subspace(generators.cols(), rref(generators));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<RatVector>& generators) {
  return span(RatMatrix::from_rows(generators, ambient_dim));
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  return Subspace(ambient_dim, RatMatrix(0, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return Subspace(ambient_dim, RatMatrix::identity(ambient_dim));
}

bool Subspace::contains(const RatVector& v) const {
  if (v.size() != ambient_dim_) fail(ErrorCode::DimensionMismatch, "vector length");
  // Eliminate v against the canonical basis; v is in the span iff nothing is left.
  RatVector rest = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t pivot = 0;
    while (sgn(basis_(r, pivot)) == 0) ++pivot;
    if (sgn(rest[pivot]) == 0) continue;
    const Rational factor = rest[pivot];
    for (std::size_t k = pivot; k < ambient_dim_; ++k) rest[k] -= factor * basis_(r, k);
  }
  for (const auto& x : rest) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Subspace kernel(const RatMatrix& m) {
  const std::size_t n = m.cols();
  Echelon e = reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

Subspace image(const RatMatrix& m) { return Subspace::span(m.transpose()); }

Subspace apply(const RatMatrix& m, const Subspace& s) {
  if (s.ambient_dim() != m.cols()) {
    fail(ErrorCode::DimensionMismatch, "cannot apply a " + std::to_string(m.rows()) + "x" +
                                           std::to_string(m.cols()) + " matrix to a subspace of Q^" +
                                           std::to_string(s.ambient_dim()));
  }
  // Rows of basis·Mᵀ are the images M·b of the basis vectors.
  return Subspace::span(s.basis() * m.transpose());
}

bool contains(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  for (std::size_t r = 0; r < b.dim(); ++r) {
    if (!a.contains(b.basis().row(r))) return false;
  }
  return true;
}

bool equal(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return a == b;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  // Pairs (x, y) with xᵀA = yᵀB are the kernel of [Aᵀ | -Bᵀ]; their common
  // value xᵀA sweeps out A ∩ B.
  RatMatrix neg_b = b.basis();
  neg_b *= Rational(-1);
  const Subspace pairs = kernel(hstack(a.basis().transpose(), neg_b.transpose()));
  std::vector<RatVector> generators;
  for (std::size_t r = 0; r < pairs.dim(); ++r) {
    RatVector x(pairs.basis().row(r));
    x.resize(a.dim());
    generators.push_back(a.basis().transpose() * x);
  }
  return Subspace::span(a.ambient_dim(), generators);
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) fail(ErrorCode::DimensionMismatch, "right-hand side length");
  const std::size_t n = a.cols();
  Echelon e = reduce(hstack(a, RatMatrix::from_columns({b}, a.rows())));
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  RatVector x(n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, n);
  return x;
}

}  // namespace openmarkov
