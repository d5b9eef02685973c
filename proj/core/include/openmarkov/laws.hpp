#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace openmarkov {

/// Outcome of one seeded property suite. For most laws every trial must pass;
/// `holds` carries the verdict for suites with a different criterion.
struct LawResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  bool holds = false;
};

LawResult law_composition_formulas(std::uint64_t seed, std::size_t trials);
LawResult law_associativity(std::uint64_t seed, std::size_t trials);
LawResult law_unit(std::uint64_t seed, std::size_t trials);
LawResult law_section_independence(std::uint64_t seed, std::size_t trials);
LawResult law_blackbox_composition(std::uint64_t seed, std::size_t trials);
LawResult law_blackbox_tensor(std::uint64_t seed, std::size_t trials);
LawResult law_blackbox_2morphism(std::uint64_t seed, std::size_t trials);
LawResult law_probability_balance(std::uint64_t seed, std::size_t trials);
LawResult law_beck_chevalley(std::uint64_t seed, std::size_t trials);
/// Passes when at least one non-pullback square breaks the identity.
LawResult law_beck_chevalley_power(std::uint64_t seed, std::size_t trials);
LawResult law_interchange(std::uint64_t seed, std::size_t trials);
LawResult law_chi(std::uint64_t seed, std::size_t trials);
LawResult law_semigroup(std::uint64_t seed, std::size_t trials);
LawResult law_coarse_semigroup(std::uint64_t seed, std::size_t trials);

std::vector<LawResult> run_all_laws(std::uint64_t seed, std::size_t trials);

}  // namespace openmarkov
