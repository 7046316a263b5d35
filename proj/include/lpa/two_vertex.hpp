#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/skeleton.hpp"

namespace lpa {

/// Edge counts of a graph on vertices u (first) and v (second).
struct TwoVertexShape {
  unsigned loops_u = 0;
  unsigned loops_v = 0;
  unsigned edges_uv = 0;
  unsigned edges_vu = 0;

  unsigned edge_total() const { return loops_u + loops_v + edges_uv + edges_vu; }
  TwoVertexShape swapped() const { return {loops_v, loops_u, edges_vu, edges_uv}; }
  /// The lexicographically larger of the shape and its swap.
  TwoVertexShape canonical() const;

  friend auto operator<=>(const TwoVertexShape&, const TwoVertexShape&) = default;
};

std::string to_string(const TwoVertexShape& s);

/// Closed-form count of two-vertex graphs with k edges up to isomorphism:
/// n(n+1)(3k-4n+1)/3 + (n+1)*ceil((k+1)/2), n = ceil(k/2).
std::uint64_t count_closed_form(unsigned k);

inline constexpr unsigned kMaxEnumerationEdges = 12;

/// Every shape with k edges, one per swap orbit, in descending order.
std::vector<TwoVertexShape> enumerate_up_to_iso(unsigned k);

TwoVertexShape shape_of(const Graph& g);
/// Graph on u, v with loops e1.. on u, f1.. on v, edges a1.. u->v, b1.. v->u.
GraphPtr graph_from_shape(const TwoVertexShape& s);

struct CanonicalForm16 {
  int id = 0;
  TwoVertexShape shape;
};

/// Shapes of the sixteen reference graphs, index id-1.
const std::array<TwoVertexShape, 16>& canonical_shapes();

/// Reduces a two-vertex graph to the reference graph with the same
/// lambda-reducible ideal lattice: loops capped at two, one-directional
/// edges capped at one, elementary K2 configurations collapsed.
CanonicalForm16 canonicalize16(const Graph& g);

struct TwoVertexClassification {
  std::string label;  // "I".."IX", or "unclassified"
  int canonical_id = 0;
  LatticeSkeleton skeleton;
  std::vector<std::string> listed_classes;  // labels the reference listing gives canonical_id
  std::vector<std::string> notes;
};

/// Class labels for the sixteen reference graphs, computed once.
struct ClassCatalog {
  std::array<std::string, 16> code;   // skeleton code per id
  std::array<std::string, 16> label;  // computed label per id
  std::map<std::string, std::string> label_of_code;
  std::map<std::string, std::vector<int>> members;  // label -> ids
  std::vector<std::string> notes;                   // disagreements with the listing
};

const ClassCatalog& class_catalog();

/// Reference listing of graph ids per lattice class.
const std::map<std::string, std::vector<int>>& reference_listing();

TwoVertexClassification classify(const Graph& g);

}  // namespace lpa
