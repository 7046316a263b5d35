#pragma once

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/graph.hpp"
#include "lpa/polynomial.hpp"

namespace lpa {

/// p(lambda) for a K1 cycle lambda based at `base`, with lambda^0 = base.
///
/// Canonical polynomials are monic with nonzero constant term and degree at
/// least one; generator sets may carry arbitrary nonzero polynomials.
struct CyclePolynomial {
  Cycle cycle;
  Vertex base{};
  Polynomial poly;

  bool is_canonical() const {
    return poly.is_monic() && poly.degree() >= 1 && poly.coeffs().front() != 0;
  }
  /// The element p(lambda) with lambda rotated to start at base.
  Element to_element(const GraphPtr& g) const;

  friend bool operator==(const CyclePolynomial& a, const CyclePolynomial& b) {
    return a.cycle == b.cycle && a.base == b.base && a.poly == b.poly;
  }
};

struct LambdaGeneratorSet {
  std::vector<CyclePolynomial> polys;
  VertexSet vertex_gens;
};

/// Canonical generating data of a lambda-reducible ideal: I /\ E^0 plus at
/// most one monic polynomial per K1 cycle not based in I /\ E^0.
struct LambdaReduction {
  HeredSatSet vertex_part;
  std::map<Cycle, CyclePolynomial> polys;

  friend bool operator==(const LambdaReduction& a, const LambdaReduction& b) {
    return a.vertex_part == b.vertex_part && a.polys == b.polys;
  }
};

struct GradedIdeal {
  HeredSatSet generators;
};

/// Graded ideals ordered by inclusion of their hereditary saturated sets.
struct GradedLattice {
  std::vector<GradedIdeal> nodes;                       // (size, lexicographic) order
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)

  bool leq(std::size_t i, std::size_t j) const {
    return nodes[i].generators.subset_of(nodes[j].generators);
  }
};

GradedLattice graded_lattice(const Graph& g);

/// Certificate that a nonzero element generates an ideal containing a vertex:
/// (product of left_factors) * a * (product of right_factors) = scalar * vertex.
struct ExtractionWitness {
  std::vector<Monomial> left_factors;
  std::vector<Monomial> right_factors;
  Vertex vertex{};
  Scalar scalar;
};

/// Evaluates left * a * right for a witness.
Element apply_witness(const ExtractionWitness& w, const Element& a);

/// Multiplies a nonzero element down to a nonzero multiple of a vertex.
/// Throws on zero input, and when the vertex reached is K1.
ExtractionWitness extract_vertex(const Element& a);

struct NongradedWitness {
  Vertex vertex{};
  Cycle cycle;        // rotated to start at vertex
  Element generator;  // vertex + cycle
};

/// For a graph failing Condition (K): the first K1 vertex v in vertex order,
/// its cycle lambda and the generator v + lambda of a non-graded ideal.
std::optional<NongradedWitness> nongraded_witness(const GraphPtr& g);

/// Canonicalizes a lambda-reducible generating set.
LambdaReduction lambda_reduce(const Graph& g, const LambdaGeneratorSet& gens);

/// Generating set whose reduction is `r` (its own canonical data).
LambdaGeneratorSet generators_of(const LambdaReduction& r);

/// Whether the ideal of `a` is contained in the ideal of `b`.
///
/// For equal vertex parts this is per-cycle divisibility. Across different
/// vertex parts (implementation-defined extension): a's vertex part must lie
/// in b's, and every polynomial of a must either sit on a cycle with a source
/// in b's vertex part or be divisible by b's polynomial on the same cycle.
bool contains(const Graph& g, const LambdaReduction& a, const LambdaReduction& b);

bool vertex_membership(const Graph& g, Vertex v, const LambdaReduction& i);

inline bool is_graded(const LambdaReduction& i) { return i.polys.empty(); }

/// Reads a generator off an element: c*v gives the vertex v, a Laurent
/// combination of powers of a K1 cycle gives its cycle polynomial.
std::variant<Vertex, CyclePolynomial> generator_from_element(const Element& x);

}  // namespace lpa
