#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lpa {

// Vertices and edges are dense indices into the owning Graph, in input order.
enum class Vertex : std::uint32_t {};
enum class Edge : std::uint32_t {};

constexpr std::size_t index(Vertex v) { return static_cast<std::size_t>(v); }
constexpr std::size_t index(Edge e) { return static_cast<std::size_t>(e); }

using VertexSet = std::set<Vertex>;

/// Unvalidated graph description, as read from a file or built in code.
struct GraphSpec {
  struct EdgeSpec {
    std::string name;
    std::string source;
    std::string range;
  };
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
};

/// Finite directed multigraph with named vertices and edges.
///
/// Immutable once built. Parallel edges and multiple loops are allowed; edges
/// are distinguished by name, never by endpoints.
class Graph {
 public:
  /// Validates `spec` and builds the graph. Identifiers must be nonempty,
  /// unique across vertices and edges, and match [A-Za-z_][A-Za-z0-9_]*.
  static Graph build(const GraphSpec& spec);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edge_names_.size(); }

  std::vector<Vertex> vertices() const;
  std::vector<Edge> edges() const;

  Vertex src(Edge e) const { return src_[index(e)]; }
  Vertex rng(Edge e) const { return rng_[index(e)]; }

  const std::string& name(Vertex v) const { return vertex_names_[index(v)]; }
  const std::string& name(Edge e) const { return edge_names_[index(e)]; }

  std::optional<Vertex> find_vertex(std::string_view name) const;
  std::optional<Edge> find_edge(std::string_view name) const;
  Vertex vertex(std::string_view name) const;  // throws on unknown name
  Edge edge(std::string_view name) const;      // throws on unknown name

  std::span<const Edge> out_edges(Vertex v) const { return out_[index(v)]; }
  std::span<const Edge> in_edges(Vertex v) const { return in_[index(v)]; }
  bool is_sink(Vertex v) const { return out_[index(v)].empty(); }

  /// Least outgoing edge in input order; the edge whose turn pair is
  /// rewritten away by the normal form. Empty for sinks.
  std::optional<Edge> special_edge(Vertex v) const;

  bool contains(Vertex v) const { return index(v) < vertex_count(); }
  bool contains(Edge e) const { return index(e) < edge_count(); }

  GraphSpec spec() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_names_ == b.vertex_names_ && a.edge_names_ == b.edge_names_ &&
           a.src_ == b.src_ && a.rng_ == b.rng_;
  }

 private:
  Graph() = default;

  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<Vertex> src_;
  std::vector<Vertex> rng_;
  std::vector<std::vector<Edge>> out_;
  std::vector<std::vector<Edge>> in_;
  std::unordered_map<std::string, Vertex> vertex_index_;
  std::unordered_map<std::string, Edge> edge_index_;
};

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr make_graph(const GraphSpec& spec) {
  return std::make_shared<const Graph>(Graph::build(spec));
}

/// A path e1...en, or the trivial path at `base` when `edges` is empty.
struct Path {
  Vertex base{};
  std::vector<Edge> edges;

  /// Checks composability rng(e_i) = src(e_{i+1}) and that base = src(e_1).
  static Path make(const Graph& g, Vertex base, std::vector<Edge> edges);
  static Path trivial(Vertex v) { return Path{v, {}}; }

  std::size_t degree() const { return edges.size(); }
  Vertex source() const { return base; }
  Vertex range(const Graph& g) const { return edges.empty() ? base : g.rng(edges.back()); }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// A closed path with pairwise-distinct edge sources.
///
/// `edges()` keeps the rotation the cycle was built with; equality and
/// ordering go through `rotation_key()`, the lexicographically least
/// rotation, so all rotations of one cycle compare equal.
class Cycle {
 public:
  /// Throws unless `edges` is a nonempty closed path with distinct sources.
  Cycle(const Graph& g, std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Edge>& rotation_key() const { return key_; }
  std::size_t length() const { return edges_.size(); }

  Vertex base(const Graph& g) const { return g.src(edges_.front()); }
  /// Sources of the edges, in cycle order starting at base().
  std::vector<Vertex> sources(const Graph& g) const;
  bool passes_through(const Graph& g, Vertex v) const;
  /// Same cycle, rotated to start at `v`. Throws if v is not on it.
  Cycle rotated_to(const Graph& g, Vertex v) const;
  /// The cycle rotated to its rotation key.
  Cycle canonical() const;

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.key_ == b.key_; }
  friend auto operator<=>(const Cycle& a, const Cycle& b) { return a.key_ <=> b.key_; }

 private:
  Cycle(std::vector<Edge> edges, std::vector<Edge> key)
      : edges_(std::move(edges)), key_(std::move(key)) {}

  std::vector<Edge> edges_;
  std::vector<Edge> key_;
};

struct VertexClass {
  enum class Kind { K0, K1, K2 };
  Kind kind = Kind::K0;
  std::optional<Cycle> cycle;  // set iff kind == K1, rotated to start at the vertex
};

const char* to_string(VertexClass::Kind kind);

/// All simple cycles whose vertex set contains `v`, each rotated to start at
/// `v`, in DFS order over out-edges.
std::vector<Cycle> simple_cycles_through(const Graph& g, Vertex v);

/// K0: no closed simple path at v. K1: exactly one. K2: at least two.
VertexClass classify_vertex(const Graph& g, Vertex v);

struct ConditionKReport {
  bool holds = true;
  std::vector<Vertex> k1_vertices;
};

ConditionKReport condition_k(const Graph& g);

/// Closed simple paths based at v (no internal return to v), shortest first
/// then lexicographic, up to `max_length` edges and at most `limit` results.
std::vector<Path> closed_simple_paths(const Graph& g, Vertex v, std::size_t max_length,
                                      std::size_t limit);

bool is_hereditary(const Graph& g, const VertexSet& x);
bool is_saturated(const Graph& g, const VertexSet& x);

/// A vertex set that is hereditary and saturated in its graph.
class HeredSatSet {
 public:
  HeredSatSet() = default;
  /// Throws unless `members` is hereditary and saturated in `g`.
  static HeredSatSet checked(const Graph& g, VertexSet members);

  const VertexSet& members() const { return members_; }
  bool contains(Vertex v) const { return members_.count(v) != 0; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  bool subset_of(const HeredSatSet& other) const;

  friend bool operator==(const HeredSatSet&, const HeredSatSet&) = default;
  /// (size, lexicographic) order.
  friend bool operator<(const HeredSatSet& a, const HeredSatSet& b);

 private:
  friend HeredSatSet hereditary_saturated_closure(const Graph&, const VertexSet&);
  explicit HeredSatSet(VertexSet members) : members_(std::move(members)) {}
  VertexSet members_;
};

/// T(X): least hereditary saturated superset of x.
HeredSatSet hereditary_saturated_closure(const Graph& g, const VertexSet& x);

/// Every hereditary saturated subset of the vertex set, ordered by
/// (size, lexicographic).
std::vector<HeredSatSet> all_hereditary_saturated_sets(const Graph& g);

/// Ranges of edges leaving a source of `c` that are not edges of `c`.
VertexSet exit_range(const Graph& g, const Cycle& c);

/// Distinct K1 cycles (canonical rotations), ordered by rotation key.
std::vector<Cycle> k1_cycles(const Graph& g);

/// Vertices reachable from `from` by a path of length >= 0.
VertexSet reachable_from(const Graph& g, Vertex from);

std::string format_vertex_set(const Graph& g, const VertexSet& x);
std::string format_edges(const Graph& g, std::span<const Edge> edges, std::string_view sep = ",");

}  // namespace lpa
