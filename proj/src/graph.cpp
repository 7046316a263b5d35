#include "lpa/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "lpa/error.hpp"

namespace lpa {

namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
  return head(s.front()) && std::all_of(s.begin() + 1, s.end(), tail);
}

std::vector<Edge> least_rotation(const std::vector<Edge>& edges) {
  std::vector<Edge> best = edges;
  std::vector<Edge> cur = edges;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace

Graph Graph::build(const GraphSpec& spec) {
  if (spec.vertices.empty()) throw Error("graph has no vertices");
  Graph g;
  for (const auto& name : spec.vertices) {
    if (!valid_identifier(name)) throw Error("invalid vertex identifier '" + name + "'");
    if (g.vertex_index_.count(name)) throw Error("duplicate identifier '" + name + "'");
    g.vertex_index_.emplace(name, Vertex(g.vertex_names_.size()));
    g.vertex_names_.push_back(name);
  }
  g.out_.resize(g.vertex_names_.size());
  g.in_.resize(g.vertex_names_.size());
  for (const auto& e : spec.edges) {
    if (!valid_identifier(e.name)) throw Error("invalid edge identifier '" + e.name + "'");
    if (g.vertex_index_.count(e.name) || g.edge_index_.count(e.name))
      throw Error("duplicate identifier '" + e.name + "'");
    auto s = g.find_vertex(e.source);
    if (!s) throw Error("edge '" + e.name + "': unknown vertex '" + e.source + "'");
    auto r = g.find_vertex(e.range);
    if (!r) throw Error("edge '" + e.name + "': unknown vertex '" + e.range + "'");
    auto id = static_cast<Edge>(g.edge_names_.size());
    g.edge_index_.emplace(e.name, id);
    g.edge_names_.push_back(e.name);
    g.src_.push_back(*s);
    g.rng_.push_back(*r);
    g.out_[index(*s)].push_back(id);
    g.in_[index(*r)].push_back(id);
  }
  return g;
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(vertex_count());
  for (std::size_t i = 0; i < vertex_count(); ++i) out.push_back(Vertex(i));
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t i = 0; i < edge_count(); ++i) out.push_back(Edge(i));
  return out;
}

std::optional<Vertex> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Edge> Graph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error("unknown vertex '" + std::string(name) + "'");
}

Edge Graph::edge(std::string_view name) const {
  if (auto e = find_edge(name)) return *e;
  throw Error("unknown edge '" + std::string(name) + "'");
}

std::optional<Edge> Graph::special_edge(Vertex v) const {
  const auto& out = out_[index(v)];
  if (out.empty()) return std::nullopt;
  return out.front();
}

GraphSpec Graph::spec() const {
  GraphSpec s;
  s.vertices = vertex_names_;
  for (std::size_t i = 0; i < edge_count(); ++i)
    s.edges.push_back({edge_names_[i], name(src_[i]), name(rng_[i])});
  return s;
}

Path Path::make(const Graph& g, Vertex base, std::vector<Edge> edges) {
  if (!g.contains(base)) throw Error("path base is not a vertex of the graph");
  Vertex at = base;
  for (Edge e : edges) {
    if (!g.contains(e)) throw Error("path edge is not an edge of the graph");
    if (g.src(e) != at) throw Error("non-composable path at edge '" + g.name(e) + "'");
    at = g.rng(e);
  }
  return Path{base, std::move(edges)};
}

Cycle::Cycle(const Graph& g, std::vector<Edge> edges) {
  if (edges.empty()) throw Error("a cycle needs at least one edge");
  for (Edge e : edges)
    if (!g.contains(e)) throw Error("cycle edge is not an edge of the graph");
  VertexSet seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge next = edges[(i + 1) % edges.size()];
    if (g.rng(edges[i]) != g.src(next)) throw Error("cycle edges do not form a closed path");
    if (!seen.insert(g.src(edges[i])).second) throw Error("cycle repeats a source vertex");
  }
  key_ = least_rotation(edges);
  edges_ = std::move(edges);
}

std::vector<Vertex> Cycle::sources(const Graph& g) const {
  std::vector<Vertex> out;
  out.reserve(edges_.size());
  for (Edge e : edges_) out.push_back(g.src(e));
  return out;
}

bool Cycle::passes_through(const Graph& g, Vertex v) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](Edge e) { return g.src(e) == v; });
}

Cycle Cycle::rotated_to(const Graph& g, Vertex v) const {
  auto it = std::find_if(edges_.begin(), edges_.end(), [&](Edge e) { return g.src(e) == v; });
  if (it == edges_.end()) throw Error("vertex '" + g.name(v) + "' is not on the cycle");
  std::vector<Edge> rot(edges_);
  std::rotate(rot.begin(), rot.begin() + (it - edges_.begin()), rot.end());
  return Cycle(std::move(rot), key_);
}

Cycle Cycle::canonical() const { return Cycle(key_, key_); }

const char* to_string(VertexClass::Kind kind) {
  switch (kind) {
    case VertexClass::Kind::K0: return "K0";
    case VertexClass::Kind::K1: return "K1";
    case VertexClass::Kind::K2: return "K2";
  }
  return "?";
}

std::vector<Cycle> simple_cycles_through(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw Error("unknown vertex");
  std::vector<Cycle> out;
  std::vector<Edge> stack;
  std::vector<bool> on_path(g.vertex_count(), false);
  on_path[index(v)] = true;
  // Vertex-simple DFS from v; every return to v closes one cycle.
  auto dfs = [&](auto&& self, Vertex at) -> void {
    for (Edge e : g.out_edges(at)) {
      Vertex next = g.rng(e);
      stack.push_back(e);
      if (next == v) {
        out.emplace_back(g, stack);
      } else if (!on_path[index(next)]) {
        on_path[index(next)] = true;
        self(self, next);
        on_path[index(next)] = false;
      }
      stack.pop_back();
    }
  };
  dfs(dfs, v);
  return out;
}

VertexSet reachable_from(const Graph& g, Vertex from) {
  VertexSet seen{from};
  std::vector<Vertex> todo{from};
  while (!todo.empty()) {
    Vertex at = todo.back();
    todo.pop_back();
    for (Edge e : g.out_edges(at))
      if (seen.insert(g.rng(e)).second) todo.push_back(g.rng(e));
  }
  return seen;
}

VertexClass classify_vertex(const Graph& g, Vertex v) {
  auto cycles = simple_cycles_through(g, v);
  if (cycles.empty()) return {VertexClass::Kind::K0, std::nullopt};
  if (cycles.size() >= 2) return {VertexClass::Kind::K2, std::nullopt};
  const Cycle& c = cycles.front();
  // A second closed simple path at v exists iff some exit of the cycle can
  // make its way back to v.
  for (Vertex s : c.sources(g)) {
    for (Edge f : g.out_edges(s)) {
      if (std::find(c.edges().begin(), c.edges().end(), f) != c.edges().end()) continue;
      if (reachable_from(g, g.rng(f)).count(v)) return {VertexClass::Kind::K2, std::nullopt};
    }
  }
  return {VertexClass::Kind::K1, c};
}

ConditionKReport condition_k(const Graph& g) {
  ConditionKReport report;
  for (Vertex v : g.vertices()) {
    if (classify_vertex(g, v).kind == VertexClass::Kind::K1) {
      report.holds = false;
      report.k1_vertices.push_back(v);
    }
  }
  return report;
}

std::vector<Path> closed_simple_paths(const Graph& g, Vertex v, std::size_t max_length,
                                      std::size_t limit) {
  if (!g.contains(v)) throw Error("unknown vertex");
  std::vector<Path> found;
  if (limit == 0) return found;
  std::vector<bool> returns(g.vertex_count(), false);
  for (Vertex w : g.vertices()) returns[index(w)] = reachable_from(g, w).count(v) != 0;

  // Breadth-first by length; each level is expanded in edge order, so results
  // come out shortest first and lexicographic within a length.
  std::deque<std::vector<Edge>> frontier{{}};
  for (std::size_t len = 1; len <= max_length && !frontier.empty(); ++len) {
    std::deque<std::vector<Edge>> next_frontier;
    for (const auto& partial : frontier) {
      Vertex at = partial.empty() ? v : g.rng(partial.back());
      for (Edge e : g.out_edges(at)) {
        Vertex to = g.rng(e);
        if (!returns[index(to)]) continue;
        auto extended = partial;
        extended.push_back(e);
        if (to == v) {
          found.push_back(Path{v, std::move(extended)});
          if (found.size() == limit) return found;
        } else {
          next_frontier.push_back(std::move(extended));
        }
      }
    }
    frontier = std::move(next_frontier);
  }
  return found;
}

bool is_hereditary(const Graph& g, const VertexSet& x) {
  for (Vertex v : x)
    for (Edge e : g.out_edges(v))
      if (!x.count(g.rng(e))) return false;
  return true;
}

bool is_saturated(const Graph& g, const VertexSet& x) {
  for (Vertex v : g.vertices()) {
    if (x.count(v) || g.is_sink(v)) continue;
    auto out = g.out_edges(v);
    if (std::all_of(out.begin(), out.end(), [&](Edge e) { return x.count(g.rng(e)) != 0; }))
      return false;
  }
  return true;
}

HeredSatSet HeredSatSet::checked(const Graph& g, VertexSet members) {
  for (Vertex v : members)
    if (!g.contains(v)) throw Error("unknown vertex in vertex set");
  if (!is_hereditary(g, members)) throw Error("vertex set is not hereditary");
  if (!is_saturated(g, members)) throw Error("vertex set is not saturated");
  HeredSatSet h;
  h.members_ = std::move(members);
  return h;
}

bool HeredSatSet::subset_of(const HeredSatSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

bool operator<(const HeredSatSet& a, const HeredSatSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members_ < b.members_;
}

HeredSatSet hereditary_saturated_closure(const Graph& g, const VertexSet& x) {
  for (Vertex v : x)
    if (!g.contains(v)) throw Error("unknown vertex in vertex set");
  VertexSet cur = x;
  bool changed = true;
  while (changed) {
    changed = false;
    // hereditary rule
    std::vector<Vertex> todo(cur.begin(), cur.end());
    while (!todo.empty()) {
      Vertex at = todo.back();
      todo.pop_back();
      for (Edge e : g.out_edges(at))
        if (cur.insert(g.rng(e)).second) todo.push_back(g.rng(e));
    }
    // saturation rule; sinks are exempt
    for (Vertex v : g.vertices()) {
      if (cur.count(v) || g.is_sink(v)) continue;
      auto out = g.out_edges(v);
      if (std::all_of(out.begin(), out.end(), [&](Edge e) { return cur.count(g.rng(e)) != 0; })) {
        cur.insert(v);
        changed = true;
      }
    }
  }
  return HeredSatSet(std::move(cur));
}

std::vector<HeredSatSet> all_hereditary_saturated_sets(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n >= 25) throw Error("too many vertices for subset enumeration");
  std::vector<HeredSatSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet x;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) x.insert(Vertex(i));
    if (is_hereditary(g, x) && is_saturated(g, x)) out.push_back(HeredSatSet::checked(g, x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet exit_range(const Graph& g, const Cycle& c) {
  for (Edge e : c.edges())
    if (!g.contains(e)) throw Error("cycle does not belong to the graph");
  // Revalidates closure in g.
  Cycle checked(g, c.edges());
  VertexSet out;
  const auto& on_cycle = c.edges();
  for (Vertex s : checked.sources(g))
    for (Edge f : g.out_edges(s))
      if (std::find(on_cycle.begin(), on_cycle.end(), f) == on_cycle.end()) out.insert(g.rng(f));
  return out;
}

std::vector<Cycle> k1_cycles(const Graph& g) {
  std::set<Cycle> found;
  for (Vertex v : g.vertices()) {
    auto cls = classify_vertex(g, v);
    if (cls.kind == VertexClass::Kind::K1) found.insert(cls.cycle->canonical());
  }
  return {found.begin(), found.end()};
}

std::string format_vertex_set(const Graph& g, const VertexSet& x) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Vertex v : x) {
    if (!first) os << ", ";
    os << g.name(v);
    first = false;
  }
  os << '}';
  return os.str();
}

std::string format_edges(const Graph& g, std::span<const Edge> edges, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += sep;
    out += g.name(edges[i]);
  }
  return out;
}

}  // namespace lpa
