#pragma once

#include <cstdint>

#include "openmarkov/finset.hpp"
#include "openmarkov/markov.hpp"
#include "openmarkov/matrix.hpp"

namespace openmarkov {

/// A stochastic right inverse s of p_*: each column of s is a probability
/// distribution supported on the fiber of p over that column, so p_* s = 1.
class StochasticSection {
 public:
  /// Throws DimensionMismatch on a wrong shape and InvalidSection if a column
  /// is not a fiber-supported probability distribution.
  StochasticSection(FinMap p, RatMatrix s);

  const FinMap& map() const noexcept { return p_; }
  const RatMatrix& matrix() const noexcept { return s_; }

 private:
  FinMap p_;
  RatMatrix s_;
};

/// Uniform mass 1/|p⁻¹(i)| on each fiber. Throws NotSurjective.
StochasticSection uniform_section(const FinMap& p);

/// Random fiber-supported columns with rational weights of denominator at
/// most 64. The same seed always gives the same matrix. Throws NotSurjective.
StochasticSection random_section(const FinMap& p, std::uint64_t seed);

/// H' = p_* H s. Throws DimensionMismatch if H does not act on p's domain.
RatMatrix coarse_grain(const RatMatrix& h, const StochasticSection& section);

/// Fiberwise-equal columns of p_* H. Throws NotSurjective.
bool is_lumpable(const RatMatrix& h, const FinMap& p);

/// The unique H' with p_* H = H' p_*, read off column by column.
/// Throws NotLumpable (or NotSurjective).
RatMatrix lumped_generator(const RatMatrix& h, const FinMap& p);

/// A morphism of open Markov processes: f : S -> S', p : X -> X',
/// g : T -> T'. Plain data; validity is checked by validate_morphism.
struct OpenMarkovMorphism {
  OpenMarkov source;
  OpenMarkov target;
  FinMap f;
  FinMap p;
  FinMap g;

  friend bool operator==(const OpenMarkovMorphism&, const OpenMarkovMorphism&) = default;
};

/// Both boundary squares are pullbacks and p_* H = H' p_*.
/// Throws ShapeMismatch if the maps do not fit the two processes.
bool validate_morphism(const OpenMarkovMorphism& m);

OpenMarkovMorphism identity_morphism(const OpenMarkov& m);

/// Vertical composite (f2 f1, p2 p1, g2 g1). Throws ShapeMismatch unless
/// m1.target == m2.source.
OpenMarkovMorphism vcompose(const OpenMarkovMorphism& m2, const OpenMarkovMorphism& m1);

/// Horizontal composite with middle map p +_g q on the pushout apexes.
/// Throws ShapeMismatch if the processes are not composable and
/// SharedBoundaryMismatch if left.g != right.f.
OpenMarkovMorphism hcompose(const OpenMarkovMorphism& left, const OpenMarkovMorphism& right);

}  // namespace openmarkov
