#include "lpa/ideal.hpp"

#include <algorithm>

#include "lpa/error.hpp"

namespace lpa {

Element CyclePolynomial::to_element(const GraphPtr& g) const {
  Cycle lambda = cycle.rotated_to(*g, base);
  Element out(g);
  Path power = Path::trivial(base);
  const auto& c = poly.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) out += c[k] * Element::path(g, power);
    power.edges.insert(power.edges.end(), lambda.edges().begin(), lambda.edges().end());
  }
  return out;
}

GradedLattice graded_lattice(const Graph& g) {
  GradedLattice lat;
  for (auto& h : all_hereditary_saturated_sets(g)) lat.nodes.push_back({std::move(h)});
  const std::size_t n = lat.nodes.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !lat.leq(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (k != i && k != j && lat.leq(i, k) && lat.leq(k, j)) covered = false;
      if (covered) lat.covers.emplace_back(i, j);
    }
  }
  return lat;
}

namespace {

bool has_source_in(const Graph& g, const Cycle& c, const HeredSatSet& x) {
  for (Vertex s : c.sources(g))
    if (x.contains(s)) return true;
  return false;
}

void require_k1_cycle(const Graph& g, const CyclePolynomial& p) {
  Cycle checked(g, p.cycle.edges());
  if (!checked.passes_through(g, p.base))
    throw Error("polynomial base '" + g.name(p.base) + "' is not on its cycle");
  auto cls = classify_vertex(g, p.base);
  if (cls.kind != VertexClass::Kind::K1 || !(*cls.cycle == p.cycle))
    throw Error("polynomial sits on a cycle that is not a K1 cycle");
  if (p.poly.is_zero()) throw Error("zero polynomial in generating set");
}

}  // namespace

LambdaReduction lambda_reduce(const Graph& g, const LambdaGeneratorSet& gens) {
  for (Vertex v : gens.vertex_gens)
    if (!g.contains(v)) throw Error("unknown vertex in generating set");

  // One gcd per cycle; rotations are the same cycle. Powers of x are units.
  std::map<Cycle, Polynomial> per_cycle;
  for (const auto& p : gens.polys) {
    require_k1_cycle(g, p);
    Cycle key = p.cycle.canonical();
    Polynomial stripped = p.poly.without_x_factors();
    auto [it, fresh] = per_cycle.try_emplace(key, stripped.monic());
    if (!fresh) it->second = gcd(it->second, stripped);
  }

  VertexSet seeds = gens.vertex_gens;
  std::map<Cycle, Polynomial> surviving;
  for (auto& [c, p] : per_cycle) {
    if (p.degree() == 0) seeds.insert(c.base(g));  // coprime family: the base vertex
    else surviving.emplace(c, p);
  }

  HeredSatSet part = hereditary_saturated_closure(g, seeds);
  for (;;) {
    // Polynomials on cycles touching the vertex part are absorbed by it.
    for (auto it = surviving.begin(); it != surviving.end();) {
      if (has_source_in(g, it->first, part)) it = surviving.erase(it);
      else ++it;
    }
    VertexSet grown = seeds;
    for (const auto& [c, p] : surviving) {
      auto exits = exit_range(g, c);
      grown.insert(exits.begin(), exits.end());
    }
    HeredSatSet next = hereditary_saturated_closure(g, grown);
    if (next == part) break;
    part = std::move(next);
  }

  LambdaReduction out;
  out.vertex_part = std::move(part);
  for (auto& [c, p] : surviving) out.polys.emplace(c, CyclePolynomial{c, c.base(g), p});
  return out;
}

LambdaGeneratorSet generators_of(const LambdaReduction& r) {
  LambdaGeneratorSet gens;
  gens.vertex_gens = r.vertex_part.members();
  for (const auto& [c, p] : r.polys) gens.polys.push_back(p);
  return gens;
}

bool contains(const Graph& g, const LambdaReduction& a, const LambdaReduction& b) {
  for (const auto& [c, p] : a.polys) Cycle(g, c.edges());
  for (const auto& [c, p] : b.polys) Cycle(g, c.edges());
  if (!a.vertex_part.subset_of(b.vertex_part)) return false;
  for (const auto& [c, p] : a.polys) {
    if (has_source_in(g, c, b.vertex_part)) continue;
    auto it = b.polys.find(c);
    if (it == b.polys.end() || !it->second.poly.divides(p.poly)) return false;
  }
  return true;
}

bool vertex_membership(const Graph& g, Vertex v, const LambdaReduction& i) {
  if (!g.contains(v)) throw Error("unknown vertex");
  return i.vertex_part.contains(v);
}

std::variant<Vertex, CyclePolynomial> generator_from_element(const Element& x) {
  const Graph& g = x.graph();
  if (x.is_zero()) throw Error("the zero element is not a generator");
  const auto& first = x.terms().begin()->first;
  if (x.size() == 1 && first.alpha.empty() && first.beta.empty()) return first.apex;

  Vertex base = !first.alpha.empty()  ? g.src(first.alpha.front())
                : !first.beta.empty() ? g.src(first.beta.front())
                                      : first.apex;
  auto cls = classify_vertex(g, base);
  if (cls.kind != VertexClass::Kind::K1)
    throw Error("element is neither a vertex multiple nor a polynomial in a K1 cycle");
  const auto& lambda = cls.cycle->edges();

  // Exponent of a power of lambda (negative for ghosts), if the path is one.
  auto power_of = [&](const std::vector<Edge>& path) -> std::optional<long> {
    if (path.size() % lambda.size() != 0) return std::nullopt;
    for (std::size_t i = 0; i < path.size(); ++i)
      if (path[i] != lambda[i % lambda.size()]) return std::nullopt;
    return static_cast<long>(path.size() / lambda.size());
  };

  std::map<long, Scalar> laurent;
  for (const auto& [m, c] : x.terms()) {
    std::optional<long> k;
    if (m.alpha.empty() && m.beta.empty()) k = m.apex == base ? std::optional<long>(0) : std::nullopt;
    else if (m.beta.empty()) k = power_of(m.alpha);
    else if (m.alpha.empty()) if (auto p = power_of(m.beta)) k = -*p;
    if (!k) throw Error("term '" + to_string(g, m) + "' is not a power of the K1 cycle at '" +
                        g.name(base) + "'");
    laurent[*k] = c;
  }
  long shift = laurent.begin()->first;
  std::vector<Scalar> coeffs(static_cast<std::size_t>(laurent.rbegin()->first - shift + 1), Scalar(0));
  for (const auto& [k, c] : laurent) coeffs[static_cast<std::size_t>(k - shift)] = c;
  return CyclePolynomial{*cls.cycle, base, Polynomial(std::move(coeffs))};
}

}  // namespace lpa
