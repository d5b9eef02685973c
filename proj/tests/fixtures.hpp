#pragma once

#include "openmarkov/markov.hpp"

namespace fixtures {

using openmarkov::Edge;
using openmarkov::FinMap;
using openmarkov::FinSet;
using openmarkov::MarkovProcess;
using openmarkov::OpenMarkov;
using openmarkov::Rational;

/// Four states, inputs at a and b, output at d.
inline OpenMarkov intro_first() {
  const FinSet x{"a", "b", "c", "d"};
  return OpenMarkov(FinMap(FinSet{"in1", "in2"}, x, {0, 1}), FinMap(FinSet{"out"}, x, {3}),
                    MarkovProcess::from_edges(x, {{"a", "c", Rational(1, 2)},
                                                  {"b", "c", 2},
                                                  {"c", "b", 1},
                                                  {"c", "d", 4},
                                                  {"d", "c", 2}}));
}

/// Three states glued at d, output at f.
inline OpenMarkov intro_second() {
  const FinSet y{"d", "e", "f"};
  return OpenMarkov(FinMap(FinSet{"out"}, y, {0}), FinMap(FinSet{"fin"}, y, {2}),
                    MarkovProcess::from_edges(
                        y, {{"d", "e", 2}, {"d", "f", 12}, {"e", "d", 1}, {"f", "e", 1}}));
}

/// a feeds b1 and b2, which both drain into c.
inline OpenMarkov chain(Rational b1_to_c = 6, Rational b1_to_b2 = 4) {
  const FinSet x{"a", "b1", "b2", "c"};
  return OpenMarkov(FinMap(FinSet{"s"}, x, {0}), FinMap(FinSet{"t"}, x, {3}),
                    MarkovProcess::from_edges(x, {{"a", "b1", 8},
                                                  {"a", "b2", 7},
                                                  {"b1", "b2", b1_to_b2},
                                                  {"b1", "c", b1_to_c},
                                                  {"b2", "c", 6}}));
}

inline OpenMarkov lumped_chain() {
  const FinSet x{"a", "b", "c"};
  return OpenMarkov(FinMap(FinSet{"s"}, x, {0}), FinMap(FinSet{"t"}, x, {2}),
                    MarkovProcess::from_edges(x, {{"a", "b", 15}, {"b", "c", 6}}));
}

inline FinMap merge_b() {
  return FinMap(FinSet{"a", "b1", "b2", "c"}, FinSet{"a", "b", "c"}, {0, 1, 1, 2});
}

}  // namespace fixtures
