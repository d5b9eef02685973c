#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "openmarkov/coarse.hpp"
#include "openmarkov/markov.hpp"

namespace openmarkov {

using LabelTable = std::vector<std::pair<std::string, std::string>>;

/// Parsed `.omp` process file.
struct ProcessDoc {
  std::string name;
  std::vector<std::string> states;
  std::vector<Edge> edges;
  LabelTable inputs;   // boundary label -> state
  LabelTable outputs;  // boundary label -> state

  friend bool operator==(const ProcessDoc&, const ProcessDoc&) = default;
};

/// Parsed `.map` morphism file. f and g may be omitted when only the state
/// map matters (lumpability, coarse-graining).
struct MorphismDoc {
  std::string name;
  std::string source;
  std::string target;
  std::optional<LabelTable> f;
  LabelTable p;
  std::optional<LabelTable> g;

  friend bool operator==(const MorphismDoc&, const MorphismDoc&) = default;
};

using Document = std::variant<ProcessDoc, MorphismDoc>;

/// Throws SyntaxError (with line and column) or SemanticError.
Document parse(std::string_view text);
ProcessDoc parse_process(std::string_view text);
MorphismDoc parse_morphism(std::string_view text);

std::string print(const ProcessDoc& doc);
std::string print(const MorphismDoc& doc);

OpenMarkov to_open_markov(const ProcessDoc& doc);

/// Nonzero off-diagonal rates become edges, ordered by source then target.
ProcessDoc to_process_doc(const std::string& name, const OpenMarkov& m);

/// Map from `dom` given by a label table; throws SemanticError unless the
/// table is total on dom and lands in cod.
FinMap table_map(const LabelTable& table, const FinSet& dom, const FinSet& cod);

/// Codomain made of the table's images in order of first appearance.
FinSet table_image(const LabelTable& table);

/// Resolves all three tables against the two processes. Throws SemanticError
/// if f or g is missing or a table is not total.
OpenMarkovMorphism to_morphism(const MorphismDoc& doc, const OpenMarkov& source,
                               const OpenMarkov& target);

}  // namespace openmarkov
