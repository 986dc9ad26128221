// Small named hypergraphs shared by the test files.
#ifndef ANTIREG_TESTS_FIXTURES_HPP
#define ANTIREG_TESTS_FIXTURES_HPP

#include "antireg/hypergraph.hpp"

namespace fixtures {

// Two non-isomorphic 3-graphs on five vertices with equal independence
// polynomials; only the first admits threshold labels.
inline antireg::Hypergraph h1() { return {5, {{1, 4, 5}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}}, 3}; }
inline antireg::Hypergraph h2() { return {5, {{1, 2, 3}, {1, 3, 4}, {2, 3, 5}, {3, 4, 5}}, 3}; }

// A 3-graph that no sequence of isolated/dominating additions produces.
inline antireg::Hypergraph triangle_of_triples() { return {6, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}}, 3}; }

// 4-graph on (w, -2, -1, 0, 1, 2) -> (1..6): w plus any three of the others
// whose values sum to something positive. Threshold, yet not constructable.
inline antireg::Hypergraph signed_sum_4graph() {
  return {6, {{1, 2, 5, 6}, {1, 3, 4, 6}, {1, 3, 5, 6}, {1, 4, 5, 6}}, 4};
}

}  // namespace fixtures

#endif  // ANTIREG_TESTS_FIXTURES_HPP
