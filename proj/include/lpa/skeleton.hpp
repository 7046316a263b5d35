#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/ideal.hpp"

#include <json.hpp>

namespace lpa {

/// Finite structural summary of the lambda-reducible ideal lattice.
///
/// Elements are the graded ideals (one per hereditary saturated set) followed
/// by the polynomial families: one family per K1 cycle c and hereditary
/// saturated set X that contains T(exit_range(c)) and no source of c. A
/// family stands for every ideal with vertex part X and a single polynomial
/// on c.
struct LatticeSkeleton {
  enum class Arc : std::uint8_t { None = 0, Contained = 1, Partial = 2 };

  struct Family {
    Cycle cycle;
    std::size_t attached;  // index into graded_nodes
  };

  std::vector<HeredSatSet> graded_nodes;
  std::vector<Family> families;
  /// relation[i][j]: every member of i lies in every member of j (Contained),
  /// some but not all such pairs do (Partial), or none do. Indices run over
  /// graded nodes first, then families. The diagonal is None.
  std::vector<std::vector<Arc>> relation;

  std::size_t element_count() const { return graded_nodes.size() + families.size(); }
  bool is_family(std::size_t i) const { return i >= graded_nodes.size(); }

  /// Isomorphism-invariant encoding; equal codes iff isomorphic skeletons.
  std::string canonical_code() const;
};

/// Builds the skeleton, deriving every arc from `contains` applied to a fixed
/// sample of canonical members per family.
LatticeSkeleton build_skeleton(const Graph& g);

bool isomorphic(const LatticeSkeleton& a, const LatticeSkeleton& b);

/// Display name of element i, e.g. "<0>", "<u>", "L", "<P(e), v>".
std::string element_label(const Graph& g, const LatticeSkeleton& s, std::size_t i);

/// Solid arcs are the covering pairs of the containment order; dotted arcs
/// mark partial containment between families.
std::string skeleton_to_dot(const Graph& g, const LatticeSkeleton& s);
nlohmann::json skeleton_to_json(const Graph& g, const LatticeSkeleton& s);

}  // namespace lpa
