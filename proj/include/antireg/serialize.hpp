#ifndef ANTIREG_SERIALIZE_HPP
#define ANTIREG_SERIALIZE_HPP

#include "json.hpp"

#include "antireg/hypergraph.hpp"
#include "antireg/polynomial.hpp"
#include "antireg/threshold.hpp"

namespace antireg {

// Wire formats. Integers of unbounded size are decimal strings.
//   Hypergraph: {"k": 3, "n": 5, "edges": [[1,2,3], ...]}   (k may be null)
//   Polynomial: ["1", "5", "10", "3"]                        (ascending)
//   Labeling:   {"c": ["64", ...], "tau": "223"}
// Parsers throw std::invalid_argument on malformed input.

nlohmann::json to_json(const Hypergraph& h);
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const Labeling& l);

Hypergraph hypergraph_from_json(const nlohmann::json& j);
Polynomial polynomial_from_json(const nlohmann::json& j);
Labeling labeling_from_json(const nlohmann::json& j);

}  // namespace antireg

#endif  // ANTIREG_SERIALIZE_HPP
