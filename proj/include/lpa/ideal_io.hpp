#pragma once

#include <string>

#include "lpa/ideal.hpp"

#include <json.hpp>

namespace lpa {

// Ideal JSON:
//   {"vertices": ["u"],
//    "polys": [{"cycle": ["e"], "base": "v", "coeffs": ["1", "0", "1"]}]}
// coeffs are ascending-degree rationals written as strings.

LambdaGeneratorSet generators_from_json(const Graph& g, const nlohmann::json& j);
nlohmann::json to_json(const Graph& g, const LambdaReduction& r);
nlohmann::json to_json(const Graph& g, const LambdaGeneratorSet& gens);
LambdaGeneratorSet load_ideal_file(const Graph& g, const std::string& path);

/// Graphviz rendering of the graded-ideal lattice; nodes are labeled by
/// their vertex sets and arcs are covering relations.
std::string lattice_to_dot(const Graph& g, const GradedLattice& lat);

}  // namespace lpa
