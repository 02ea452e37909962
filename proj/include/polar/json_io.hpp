#pragma once

#include <json.hpp>

#include "polar/cellres.hpp"
#include "polar/graphs.hpp"
#include "polar/ideal.hpp"
#include "polar/partitions.hpp"
#include "polar/trees.hpp"

namespace polar {

// monomial = [[base, copy], [base, copy, exponent], ...]; exponent 1 may
// be omitted.  All from_json functions throw std::invalid_argument on
// malformed input.

nlohmann::json monomial_to_json(const SplitMonomial& m);
SplitMonomial monomial_from_json(const nlohmann::json& j);

// {"n": int, "generators": [monomial, ...]}
nlohmann::json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

// {"n": int, "d": int, "parts": {"1": [[subset...], ...], ...}}
nlohmann::json partition_to_json(const PartitionFamily& family);
PartitionFamily partition_from_json(const nlohmann::json& j);

// {"n": int, "edges": [[v, w], ...]}
nlohmann::json tree_to_json(const LabeledTree& tree);
LabeledTree tree_from_json(const nlohmann::json& j);

// {"vertices": [[base, copy], ...], "edges": [[u, v], ...]}
nlohmann::json graph_to_json(const SimpleGraph& graph);
SimpleGraph graph_from_json(const nlohmann::json& j);

// {"faces": [{"dim", "facets", "vertices"}, ...], "labels": [monomial, ...]}
nlohmann::json complex_to_json(const LabeledCellComplex& complex);
LabeledCellComplex complex_from_json(const nlohmann::json& j);

}  // namespace polar
