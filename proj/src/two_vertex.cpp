#include "lpa/two_vertex.hpp"

#include <algorithm>
#include <set>

#include "lpa/error.hpp"

namespace lpa {

TwoVertexShape TwoVertexShape::canonical() const {
  TwoVertexShape s = swapped();
  return std::max(*this, s);
}

std::string to_string(const TwoVertexShape& s) {
  return "(" + std::to_string(s.loops_u) + "," + std::to_string(s.loops_v) + "," +
         std::to_string(s.edges_uv) + "," + std::to_string(s.edges_vu) + ")";
}

std::uint64_t count_closed_form(unsigned k) {
  const std::int64_t kk = k;
  const std::int64_t n = (kk + 1) / 2;           // ceil(k/2)
  const std::int64_t half_up = (kk + 2) / 2;     // ceil((k+1)/2)
  const std::int64_t first = n * (n + 1) * (3 * kk - 4 * n + 1);
  return static_cast<std::uint64_t>(first / 3 + (n + 1) * half_up);
}

std::vector<TwoVertexShape> enumerate_up_to_iso(unsigned k) {
  if (k > kMaxEnumerationEdges)
    throw Error("enumeration is limited to " + std::to_string(kMaxEnumerationEdges) + " edges");
  std::set<TwoVertexShape> seen;
  for (unsigned a = 0; a <= k; ++a)
    for (unsigned b = 0; a + b <= k; ++b)
      for (unsigned c = 0; a + b + c <= k; ++c)
        seen.insert(TwoVertexShape{a, b, c, k - a - b - c}.canonical());
  return {seen.rbegin(), seen.rend()};
}

TwoVertexShape shape_of(const Graph& g) {
  if (g.vertex_count() != 2) throw Error("expected a graph with exactly two vertices");
  TwoVertexShape s;
  const Vertex u{0};
  for (Edge e : g.edges()) {
    bool from_u = g.src(e) == u, to_u = g.rng(e) == u;
    if (from_u && to_u) ++s.loops_u;
    else if (!from_u && !to_u) ++s.loops_v;
    else if (from_u) ++s.edges_uv;
    else ++s.edges_vu;
  }
  return s;
}

GraphPtr graph_from_shape(const TwoVertexShape& s) {
  GraphSpec spec;
  spec.vertices = {"u", "v"};
  auto add = [&](const char* prefix, unsigned count, const char* from, const char* to) {
    for (unsigned i = 1; i <= count; ++i) spec.edges.push_back({prefix + std::to_string(i), from, to});
  };
  add("e", s.loops_u, "u", "u");
  add("f", s.loops_v, "v", "v");
  add("a", s.edges_uv, "u", "v");
  add("b", s.edges_vu, "v", "u");
  return make_graph(spec);
}

const std::array<TwoVertexShape, 16>& canonical_shapes() {
  static const std::array<TwoVertexShape, 16> shapes{{
      {0, 0, 0, 0},  // [1]  two disjoint vertices
      {0, 0, 1, 0},  // [2]  2-line
      {0, 0, 1, 1},  // [3]
      {0, 0, 2, 1},  // [4]  elementary K2
      {1, 0, 0, 0},  // [5]
      {1, 0, 1, 0},  // [6]
      {1, 0, 0, 1},  // [7]
      {1, 0, 1, 1},  // [8]  elementary K2
      {1, 1, 0, 0},  // [9]
      {1, 1, 1, 0},  // [10]
      {2, 0, 0, 0},  // [11]
      {2, 0, 1, 0},  // [12]
      {2, 0, 0, 1},  // [13]
      {2, 1, 1, 0},  // [14]
      {2, 1, 0, 1},  // [15]
      {2, 2, 1, 0},  // [16]
  }};
  return shapes;
}

CanonicalForm16 canonicalize16(const Graph& g) {
  TwoVertexShape s = shape_of(g);
  s.loops_u = std::min(s.loops_u, 2U);
  s.loops_v = std::min(s.loops_v, 2U);
  auto result = [](int id) { return CanonicalForm16{id, canonical_shapes()[id - 1]}; };
  if (s.edges_uv > 0 && s.edges_vu > 0) {
    // Both directions: any loop dominates [8]; otherwise a doubled direction
    // dominates [4]. Both are elementary K2 and absorb further edges.
    if (s.loops_u + s.loops_v > 0) return result(8);
    if (s.edges_uv > 1 || s.edges_vu > 1) return result(4);
    return result(3);
  }
  s.edges_uv = std::min(s.edges_uv, 1U);
  s.edges_vu = std::min(s.edges_vu, 1U);
  s = s.canonical();
  // A K2 vertex with no edges across behaves like a bare vertex (two loops)
  // or leaves the other vertex's lattice untouched.
  if (s == TwoVertexShape{2, 1, 0, 0}) return result(5);
  if (s == TwoVertexShape{2, 2, 0, 0}) return result(1);
  const auto& shapes = canonical_shapes();
  for (std::size_t i = 0; i < shapes.size(); ++i)
    if (shapes[i] == s) return result(static_cast<int>(i) + 1);
  throw Error("internal: shape " + to_string(s) + " has no reference graph");
}

const std::map<std::string, std::vector<int>>& reference_listing() {
  static const std::map<std::string, std::vector<int>> listing{
      {"I", {2, 4, 8, 13}}, {"II", {3, 7}}, {"III", {6, 15}},  {"IV", {10}},  {"V", {12, 16}},
      {"VI", {14}},         {"VII", {1, 11}}, {"VIII", {5}}, {"IX", {7}},
  };
  return listing;
}

namespace {

ClassCatalog build_catalog() {
  ClassCatalog cat;
  for (int id = 1; id <= 16; ++id) {
    auto g = graph_from_shape(canonical_shapes()[id - 1]);
    cat.code[id - 1] = build_skeleton(*g).canonical_code();
  }
  // Classes are anchored by graphs the listing assigns unambiguously.
  const std::vector<std::pair<std::string, int>> anchors{
      {"I", 2}, {"II", 3}, {"III", 6}, {"IV", 10}, {"V", 12}, {"VI", 14}, {"VII", 1}, {"VIII", 5}};
  for (const auto& [label, id] : anchors) {
    const auto& code = cat.code[id - 1];
    auto [it, fresh] = cat.label_of_code.try_emplace(code, label);
    if (!fresh)
      cat.notes.push_back("anchors " + it->second + " and " + label + " have isomorphic skeletons");
  }
  // Whatever class no anchor reaches is IX.
  int spare = 0;
  for (int id = 1; id <= 16; ++id) {
    const auto& code = cat.code[id - 1];
    if (cat.label_of_code.count(code)) continue;
    std::string label = spare == 0 ? "IX" : "IX+" + std::to_string(spare);
    ++spare;
    cat.label_of_code.emplace(code, label);
  }
  for (int id = 1; id <= 16; ++id) {
    cat.label[id - 1] = cat.label_of_code.at(cat.code[id - 1]);
    cat.members[cat.label[id - 1]].push_back(id);
  }
  for (int id = 1; id <= 16; ++id) {
    std::vector<std::string> listed;
    for (const auto& [label, ids] : reference_listing())
      if (std::find(ids.begin(), ids.end(), id) != ids.end()) listed.push_back(label);
    const auto& computed = cat.label[id - 1];
    if (listed.size() == 1 && listed.front() == computed) continue;
    std::string note = "graph [" + std::to_string(id) + "]: listed under ";
    if (listed.empty()) note += "no class";
    for (std::size_t i = 0; i < listed.size(); ++i) note += (i ? " and " : "") + listed[i];
    note += "; skeleton computes class " + computed;
    cat.notes.push_back(std::move(note));
  }
  return cat;
}

}  // namespace

const ClassCatalog& class_catalog() {
  static const ClassCatalog cat = build_catalog();
  return cat;
}

TwoVertexClassification classify(const Graph& g) {
  if (g.vertex_count() != 2) throw Error("expected a graph with exactly two vertices");
  const auto& cat = class_catalog();
  TwoVertexClassification out;
  out.skeleton = build_skeleton(g);
  out.canonical_id = canonicalize16(g).id;
  auto it = cat.label_of_code.find(out.skeleton.canonical_code());
  out.label = it == cat.label_of_code.end() ? "unclassified" : it->second;
  for (const auto& [label, ids] : reference_listing())
    if (std::find(ids.begin(), ids.end(), out.canonical_id) != ids.end())
      out.listed_classes.push_back(label);
  const std::string tag = "graph [" + std::to_string(out.canonical_id) + "]:";
  for (const auto& note : cat.notes)
    if (note.rfind(tag, 0) == 0) out.notes.push_back(note);
  if (out.label != cat.label[out.canonical_id - 1])
    out.notes.push_back("skeleton class " + out.label + " differs from reference graph [" +
                        std::to_string(out.canonical_id) + "] class " +
                        cat.label[out.canonical_id - 1]);
  return out;
}

}  // namespace lpa
