#pragma once

#include <string>
#include <vector>

#include "openmarkov/finset.hpp"
#include "openmarkov/matrix.hpp"

namespace openmarkov {

/// True iff off-diagonal entries are nonnegative and every column sums to
/// zero. Throws NotSquare.
bool validate_infinitesimal_stochastic(const RatMatrix& h);

/// (f_*)[b][a] = 1 iff f(a) = b.
RatMatrix pushforward_matrix(const FinMap& f);
/// f^* = transpose of f_*, i.e. f^*(v) = v ∘ f.
RatMatrix pullback_matrix(const FinMap& f);

/// A rate-labelled edge src -> dst of a transition graph.
struct Edge {
  std::string src;
  std::string dst;
  Rational rate;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.src == b.src && a.dst == b.dst && a.rate == b.rate;
  }
};

/// A finite-state continuous-time Markov process (X, H), H[i][j] = rate j -> i.
class MarkovProcess {
 public:
  MarkovProcess() = default;
  /// Throws DimensionMismatch if H is not |X|×|X| and
  /// NotInfinitesimalStochastic if it fails validation.
  MarkovProcess(FinSet states, RatMatrix generator);

  /// Off-diagonal entries are summed edge rates (parallel edges add); the
  /// diagonal makes every column sum to zero. Self-loops and negative rates
  /// are rejected with InvalidArgument.
  static MarkovProcess from_edges(FinSet states, const std::vector<Edge>& edges);

  const FinSet& states() const noexcept { return states_; }
  const RatMatrix& generator() const noexcept { return generator_; }

  friend bool operator==(const MarkovProcess&, const MarkovProcess&) = default;

 private:
  FinSet states_;
  RatMatrix generator_;
};

/// An open Markov process S -i-> (X, H) <-o- T with injective legs. The
/// ranges of i and o may overlap.
class OpenMarkov {
 public:
  OpenMarkov() = default;
  /// Throws ShapeMismatch if a leg does not land in the state set and
  /// NonInjectiveLeg if a leg is not injective.
  OpenMarkov(FinMap input_leg, FinMap output_leg, MarkovProcess process);

  const FinSet& inputs() const noexcept { return input_leg_.dom(); }
  const FinSet& outputs() const noexcept { return output_leg_.dom(); }
  const FinSet& states() const noexcept { return process_.states(); }
  const FinMap& input_leg() const noexcept { return input_leg_; }
  const FinMap& output_leg() const noexcept { return output_leg_; }
  const MarkovProcess& process() const noexcept { return process_; }
  const RatMatrix& generator() const noexcept { return process_.generator(); }

  friend bool operator==(const OpenMarkov&, const OpenMarkov&) = default;

 private:
  FinMap input_leg_;
  FinMap output_leg_;
  MarkovProcess process_;
};

/// S -id-> (S, 0) <-id- S. identity_open(∅) is the monoidal unit.
OpenMarkov identity_open(const FinSet& boundary);

/// Horizontal composite M ⊙ N glued along M's outputs = N's inputs, with
/// H ⊙ G = j_* H j^* + k_* G k^* on the pushout apex.
/// Throws BoundaryMismatch unless M.outputs() == N.inputs() literally.
OpenMarkov compose_open(const OpenMarkov& m, const OpenMarkov& n);

/// The same composite computed as ℓ_* (H ⊕ G) ℓ^* with ℓ : X + Y -> X +_T Y
/// the copairing of the pushout legs.
OpenMarkov compose_open_alt(const OpenMarkov& m, const OpenMarkov& n);

/// Side-by-side M ⊗ N on X1 + X2 with H1 ⊕ H2 and summed legs.
OpenMarkov tensor_open(const OpenMarkov& m, const OpenMarkov& n);

/// Renames the boundary sets (positionally) so that a process can be glued
/// to one whose boundary uses different labels.
OpenMarkov relabel_boundary(const OpenMarkov& m, const FinSet& inputs, const FinSet& outputs);

/// φ_* A φ^* for a bijection φ: A re-expressed in the basis of φ's codomain.
RatMatrix transport(const FinMap& bijection, const RatMatrix& a);

/// The canonical bijection
///   (X1 +_{T1} Y1) + (X2 +_{T2} Y2) -> (X1 + X2) +_{T1+T2} (Y1 + Y2)
/// found by matching the classes of X1, X2, Y1, Y2 in both colimits.
/// Throws ShapeMismatch unless m1, n1 and m2, n2 are composable pairs.
FinMap chi_iso(const OpenMarkov& m1, const OpenMarkov& n1, const OpenMarkov& m2,
               const OpenMarkov& n2);

/// The canonical bijection (X +_T Y) +_U Z -> X +_T (Y +_U Z) between the
/// apexes of (M ⊙ N) ⊙ P and M ⊙ (N ⊙ P).
FinMap associator(const OpenMarkov& m, const OpenMarkov& n, const OpenMarkov& p);

}  // namespace openmarkov
