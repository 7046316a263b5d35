#include <algorithm>

#include "lpa/error.hpp"
#include "lpa/ideal.hpp"

namespace lpa {

namespace {

Element as_element(const GraphPtr& g, const Monomial& m) { return Element::monomial(g, m); }

Monomial path_monomial(const Graph& g, const Path& p) {
  return Monomial{p.edges, {}, p.range(g)};
}

Monomial ghost_monomial(const Graph& g, const Path& p) {
  return Monomial{{}, p.edges, p.range(g)};
}

bool starts_with(const std::vector<Edge>& path, const std::vector<Edge>& prefix) {
  return path.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), path.begin());
}

// Paths of length exactly `len`, or shorter ones ending at a sink, from every
// vertex. Together their p p^* sum to the unit, so some right product by one
// of them is nonzero.
std::vector<Path> full_length_paths(const Graph& g, std::size_t len) {
  std::vector<Path> out;
  for (Vertex v : g.vertices()) {
    std::vector<Edge> stack;
    auto dfs = [&](auto&& self, Vertex at) -> void {
      if (stack.size() == len || g.is_sink(at)) {
        out.push_back(Path{v, stack});
        return;
      }
      for (Edge e : g.out_edges(at)) {
        stack.push_back(e);
        self(self, g.rng(e));
        stack.pop_back();
      }
    };
    dfs(dfs, v);
  }
  return out;
}

}  // namespace

Element apply_witness(const ExtractionWitness& w, const Element& a) {
  const GraphPtr& g = a.graph_ptr();
  Element out = a;
  for (auto it = w.left_factors.rbegin(); it != w.left_factors.rend(); ++it)
    out = as_element(g, *it) * out;
  for (const auto& m : w.right_factors) out = out * as_element(g, m);
  return out;
}

ExtractionWitness extract_vertex(const Element& a) {
  if (a.is_zero()) throw Error("cannot extract a vertex from the zero element");
  const GraphPtr& gp = a.graph_ptr();
  const Graph& g = *gp;
  ExtractionWitness w;

  const auto& [lead, lead_coeff] = *a.terms().begin();
  if (a.size() == 1 && lead.alpha.empty() && lead.beta.empty()) {
    w.vertex = lead.apex;
    w.scalar = lead_coeff;
    return w;
  }

  // Right-multiply by beta_1 of a term of top ghost degree, which leaves a
  // combination of real paths. If that product cancels, fall back to the
  // other paths of the same length.
  Path beta1 = lead.beta_path(g);
  Element x = a * Element::path(gp, beta1);
  if (x.is_zero()) {
    for (const auto& eta : full_length_paths(g, gdeg(a))) {
      x = a * Element::path(gp, eta);
      if (!x.is_zero()) {
        beta1 = eta;
        break;
      }
    }
  }
  if (x.is_zero()) throw Error("internal: no right factor leaves a nonzero product");
  w.right_factors.push_back(path_monomial(g, beta1));

  // Terms are now real paths in ascending degree; strip the shortest one.
  const Monomial& nu1 = x.terms().begin()->first;
  Path nu1_path = nu1.alpha_path(g);
  w.left_factors.insert(w.left_factors.begin(), ghost_monomial(g, nu1_path));
  Element y = Element::ghost_path(gp, nu1_path) * x;
  const Vertex base = nu1_path.range(g);
  Scalar c1 = 0;
  for (const auto& [m, c] : y.terms())
    if (m.alpha.empty() && m.beta.empty()) c1 = c;
  if (c1 == 0) throw Error("internal: reduction lost the vertex term");

  auto residual_paths = [&] {
    std::vector<std::vector<Edge>> out;
    for (const auto& [m, c] : y.terms())
      if (!m.alpha.empty()) out.push_back(m.alpha);
    return out;
  };

  // What remains is c1*base plus closed paths at base; peel them off with two
  // distinct closed simple paths eta1, eta2.
  std::optional<std::pair<Path, Path>> etas;
  for (auto closed = residual_paths(); !closed.empty(); closed = residual_paths()) {
    if (!etas) {
      auto cls = classify_vertex(g, base);
      if (cls.kind == VertexClass::Kind::K1)
        throw Error("vertex '" + g.name(base) + "' is K1; the element may generate a non-graded ideal");
      const std::size_t bound = g.edge_count() * (g.vertex_count() + 1);
      auto found = closed_simple_paths(g, base, bound, 2);
      if (found.size() < 2)
        throw Error("internal: fewer than two closed simple paths at '" + g.name(base) + "'");
      etas.emplace(found[0], found[1]);
    }
    const Path& eta1 = etas->first;
    const Path& eta2 = etas->second;
    bool all_start_with_eta1 = std::all_of(closed.begin(), closed.end(), [&](const auto& p) {
      return starts_with(p, eta1.edges);
    });
    const Path& eta = all_start_with_eta1 ? eta2 : eta1;
    w.left_factors.insert(w.left_factors.begin(), ghost_monomial(g, eta));
    w.right_factors.push_back(path_monomial(g, eta));
    y = Element::ghost_path(gp, eta) * y * Element::path(gp, eta);
  }

  w.vertex = base;
  w.scalar = c1;
  if (apply_witness(w, a) != Scalar(c1) * Element::vertex(gp, base))
    throw Error("internal: extraction witness failed to verify");
  return w;
}

std::optional<NongradedWitness> nongraded_witness(const GraphPtr& g) {
  for (Vertex v : g->vertices()) {
    auto cls = classify_vertex(*g, v);
    if (cls.kind != VertexClass::Kind::K1) continue;
    Path lambda = Path::make(*g, v, cls.cycle->edges());
    Element gen = Element::vertex(g, v) + Element::path(g, lambda);
    return NongradedWitness{v, *cls.cycle, std::move(gen)};
  }
  return std::nullopt;
}

}  // namespace lpa
