#include "lpa/ideal_io.hpp"

#include <fstream>
#include <sstream>

#include "lpa/error.hpp"

namespace lpa {

using nlohmann::json;

namespace {

json names(const Graph& g, const VertexSet& x) {
  json out = json::array();
  for (Vertex v : x) out.push_back(g.name(v));
  return out;
}

json poly_json(const Graph& g, const CyclePolynomial& p) {
  json cyc = json::array();
  for (Edge e : p.cycle.edges()) cyc.push_back(g.name(e));
  json coeffs = json::array();
  for (const auto& c : p.poly.coeffs()) coeffs.push_back(to_string(c));
  return {{"cycle", cyc}, {"base", g.name(p.base)}, {"coeffs", coeffs}};
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

LambdaGeneratorSet generators_from_json(const Graph& g, const json& j) {
  if (!j.is_object()) throw Error("ideal JSON must be an object");
  LambdaGeneratorSet gens;
  try {
    if (j.contains("vertices"))
      for (const auto& v : j.at("vertices")) gens.vertex_gens.insert(g.vertex(v.get<std::string>()));
    if (j.contains("polys")) {
      for (const auto& p : j.at("polys")) {
        std::vector<Edge> edges;
        for (const auto& e : p.at("cycle")) edges.push_back(g.edge(e.get<std::string>()));
        Cycle cycle(g, std::move(edges));
        Vertex base = p.contains("base") ? g.vertex(p.at("base").get<std::string>()) : cycle.base(g);
        std::vector<Scalar> coeffs;
        for (const auto& c : p.at("coeffs")) {
          if (c.is_string()) coeffs.push_back(parse_scalar(c.get<std::string>()));
          else if (c.is_number_integer()) coeffs.emplace_back(std::to_string(c.get<long long>()));
          else throw Error("polynomial coefficients must be rational strings");
        }
        gens.polys.push_back({std::move(cycle), base, Polynomial(std::move(coeffs))});
      }
    }
  } catch (const json::exception& e) {
    throw Error(std::string("malformed ideal JSON: ") + e.what());
  }
  return gens;
}

json to_json(const Graph& g, const LambdaReduction& r) {
  json polys = json::array();
  for (const auto& [c, p] : r.polys) polys.push_back(poly_json(g, p));
  return {{"vertices", names(g, r.vertex_part.members())}, {"polys", polys}};
}

json to_json(const Graph& g, const LambdaGeneratorSet& gens) {
  json polys = json::array();
  for (const auto& p : gens.polys) polys.push_back(poly_json(g, p));
  return {{"vertices", names(g, gens.vertex_gens)}, {"polys", polys}};
}

LambdaGeneratorSet load_ideal_file(const Graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ideal file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("ideal file '" + path + "': " + e.what());
  }
  return generators_from_json(g, j);
}

std::string lattice_to_dot(const Graph& g, const GradedLattice& lat) {
  std::ostringstream os;
  os << "digraph graded_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lat.nodes.size(); ++i)
    os << "  n" << i << " [label=\""
       << dot_escape(format_vertex_set(g, lat.nodes[i].generators.members())) << "\"];\n";
  for (const auto& [lo, hi] : lat.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace lpa
