#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>

#include "openmarkov/coarse.hpp"
#include "openmarkov/finset.hpp"
#include "openmarkov/markov.hpp"

namespace openmarkov {

/// Seeded random instances for the property suites. Draws use raw engine
/// output reduced modulo the range, so streams match across platforms.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::size_t uniform(std::size_t lo, std::size_t hi);
  bool coin() { return uniform(0, 1) == 1; }

  /// n/d with n in [1, 16] and d in [1, 8].
  Rational rate();
  /// Random sparse infinitesimal stochastic n x n matrix.
  RatMatrix generator(std::size_t n);
  FinMap injection(const FinSet& dom, const FinSet& cod);
  FinMap function(const FinSet& dom, const FinSet& cod);

  /// Open process on states prefix0.. with the given boundary sets; both sets
  /// must be no larger than the number of states.
  OpenMarkov open_process(const std::string& prefix, std::size_t states, const FinSet& inputs,
                          const FinSet& outputs);

  /// M : S -> T and N : T -> U with |X|,|Y| <= max_states and boundaries of
  /// size <= max_boundary. `tag` distinguishes label families.
  std::pair<OpenMarkov, OpenMarkov> composable_pair(std::size_t max_states,
                                                    std::size_t max_boundary,
                                                    const std::string& tag = "");

  /// A valid morphism into `target` whose source refines each target state
  /// into a fiber. States in the image of an input take their fiber size
  /// from `input_fibers` (keyed by input label), then outputs likewise from
  /// `output_fibers`; missing entries and interior states draw sizes in
  /// [1, max_fiber]. Fiber elements of x are labelled x.0, x.1, ...; the
  /// source boundary consists of s.0, s.1, ... for each target boundary label s.
  OpenMarkovMorphism lift(const OpenMarkov& target, std::size_t max_fiber,
                          const std::map<std::string, std::size_t>& input_fibers = {},
                          const std::map<std::string, std::size_t>& output_fibers = {});

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Fiber size over each boundary label of a lift: the number of source
/// boundary elements mapped to it.
std::map<std::string, std::size_t> boundary_fibers(const FinMap& boundary_map);

/// A commuting square f : A -> B, g : A -> C, h : B -> D, k : C -> D.
struct Square {
  FinMap f;
  FinMap g;
  FinMap h;
  FinMap k;
};

/// Pullback of random h, k over sets of size <= max_size.
Square random_pullback_square(InstanceGenerator& gen, std::size_t max_size);

/// A commuting square that is not a pullback: the pullback apex with one
/// element duplicated or dropped.
Square random_non_pullback_square(InstanceGenerator& gen, std::size_t max_size);

}  // namespace openmarkov
