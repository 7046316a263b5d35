#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

/// Exact rational coefficient.
using Scalar = mpq_class;

std::string to_string(const Scalar& c);
/// Parses `p` or `p/q` (optionally signed) into canonical form.
Scalar parse_scalar(std::string_view text);

/// The monomial alpha * beta^*, where alpha and beta are real paths sharing
/// the range `apex`. Empty alpha (resp. beta) means the trivial path at apex.
struct Monomial {
  std::vector<Edge> alpha;
  std::vector<Edge> beta;
  Vertex apex{};

  static Monomial vertex(Vertex v) { return {{}, {}, v}; }
  static Monomial edge(const Graph& g, Edge e) { return {{e}, {}, g.rng(e)}; }
  static Monomial ghost(const Graph& g, Edge e) { return {{}, {e}, g.rng(e)}; }
  /// Checks composability and the shared range.
  static Monomial make(const Graph& g, Path alpha, Path beta);

  Path alpha_path(const Graph& g) const;
  Path beta_path(const Graph& g) const;

  long degree() const { return static_cast<long>(alpha.size()) - static_cast<long>(beta.size()); }
  std::size_t ghost_degree() const { return beta.size(); }
  /// True when the trailing turn is (special edge, special edge), the only
  /// shape the normal form rewrites.
  bool reducible(const Graph& g) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Term order inside an Element: ghost degree descending, then degree
/// ascending, then lexicographic on (alpha, beta, apex).
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using RawTerms = std::vector<std::pair<Monomial, Scalar>>;

/// A Leavitt path algebra element over the rationals, always held in normal
/// form: a finite combination of monomials none of which is reducible, with
/// no zero coefficients.
class Element {
 public:
  using TermMap = std::map<Monomial, Scalar, TermOrder>;

  explicit Element(GraphPtr g) : graph_(std::move(g)) {}

  static Element vertex(GraphPtr g, Vertex v);
  static Element edge(GraphPtr g, Edge e);
  static Element ghost(GraphPtr g, Edge e);
  static Element path(GraphPtr g, const Path& p);
  static Element ghost_path(GraphPtr g, const Path& p);  // p^*
  static Element monomial(GraphPtr g, const Monomial& m, const Scalar& c = 1);
  /// 1 = sum of all vertices.
  static Element unit(GraphPtr g);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Scalar& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Scalar(-1); }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend Element operator*(const Element& a, const Element& b);

  friend bool operator==(const Element& a, const Element& b);

 private:
  friend Element normalize(GraphPtr g, const RawTerms& terms);
  void accumulate(const Monomial& m, const Scalar& c);
  void check_same_graph(const Element& other) const;

  GraphPtr graph_;
  TermMap terms_;
};

/// Rewrites a raw linear combination into normal form, orienting
/// v = sum_{s(e)=v} e e^* as  a' g g^* b'^*  ->  a' b'^* - sum_{f != g} a' f f^* b'^*
/// for the special edge g at the turn vertex.
Element normalize(GraphPtr g, const RawTerms& terms);

/// Normal form is maintained on construction; this returns x unchanged.
inline Element normalize(const Element& x) { return x; }

/// (alpha beta^*)(gamma delta^*), normalized.
Element mul_monomials(const GraphPtr& g, const Monomial& m1, const Monomial& m2);

inline Element mul(const Element& x, const Element& y) { return x * y; }
inline Element add(const Element& x, const Element& y) { return x + y; }
inline Element scale(const Scalar& c, const Element& x) { return c * x; }

/// Homogeneous components keyed by degree deg(alpha) - deg(beta).
std::map<long, Element> graded_components(const Element& x);

/// Largest ghost degree among the normal-form terms. Throws on zero.
std::size_t gdeg(const Element& x);
inline long degree(const Monomial& m) { return m.degree(); }
bool is_homogeneous(const Element& x);

/// Grammar:
///   element  := ['-'] term (('+'|'-') term)*  |  '0'
///   term     := [rational '*'] monomial | rational
///   monomial := factor ('.' factor)*
///   factor   := NAME | NAME "*'"
/// NAME is a vertex or edge; NAME*' is the ghost of edge NAME. A bare
/// rational term denotes that multiple of the unit.
Element parse_element(const GraphPtr& g, std::string_view text);

/// Deterministic serialization of the normal form, in term order.
std::string to_string(const Element& x);
std::string to_string(const Graph& g, const Monomial& m);

}  // namespace lpa
