#include "lpa/element.hpp"

#include <algorithm>

#include "lpa/error.hpp"

namespace lpa {

std::string to_string(const Scalar& c) { return c.get_str(); }

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  auto digits = [](std::string_view d) {
    if (!d.empty() && (d.front() == '-' || d.front() == '+')) d.remove_prefix(1);
    return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = s.find('/');
  bool ok = slash == std::string::npos
                ? digits(s)
                : digits(std::string_view(s).substr(0, slash)) &&
                      digits(std::string_view(s).substr(slash + 1)) && s[slash + 1] != '-' &&
                      s[slash + 1] != '+';
  if (!ok) throw Error("malformed rational '" + s + "'");
  if (s.front() == '+') s.erase(0, 1);
  Scalar c;
  if (c.set_str(s, 10) != 0) throw Error("malformed rational '" + s + "'");
  if (c.get_den() == 0) throw Error("zero denominator in '" + s + "'");
  c.canonicalize();
  return c;
}

Monomial Monomial::make(const Graph& g, Path alpha, Path beta) {
  Path a = Path::make(g, alpha.base, std::move(alpha.edges));
  Path b = Path::make(g, beta.base, std::move(beta.edges));
  const Vertex apex = a.range(g);
  if (apex != b.range(g)) throw Error("mismatched ranges in alpha beta^*");
  return {std::move(a.edges), std::move(b.edges), apex};
}

Path Monomial::alpha_path(const Graph& g) const {
  return Path{alpha.empty() ? apex : g.src(alpha.front()), alpha};
}

Path Monomial::beta_path(const Graph& g) const {
  return Path{beta.empty() ? apex : g.src(beta.front()), beta};
}

bool Monomial::reducible(const Graph& g) const {
  if (alpha.empty() || beta.empty() || alpha.back() != beta.back()) return false;
  return g.special_edge(g.src(alpha.back())) == alpha.back();
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.ghost_degree() != b.ghost_degree()) return a.ghost_degree() > b.ghost_degree();
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  if (a.beta != b.beta) return a.beta < b.beta;
  return a.apex < b.apex;
}

void Element::check_same_graph(const Element& other) const {
  if (graph_ != other.graph_ && !(graph_ && other.graph_ && *graph_ == *other.graph_))
    throw Error("elements belong to different graphs");
}

void Element::accumulate(const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  const Graph& g = *graph_;
  if (m.reducible(g)) {
    Edge special = m.alpha.back();
    Vertex turn = g.src(special);
    Monomial shorter{m.alpha, m.beta, turn};
    shorter.alpha.pop_back();
    shorter.beta.pop_back();
    accumulate(shorter, c);
    for (Edge f : g.out_edges(turn)) {
      if (f == special) continue;
      Monomial side{shorter.alpha, shorter.beta, g.rng(f)};
      side.alpha.push_back(f);
      side.beta.push_back(f);
      accumulate(side, -c);
    }
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Element normalize(GraphPtr g, const RawTerms& terms) {
  Element out(std::move(g));
  for (const auto& [m, c] : terms) out.accumulate(m, c);
  return out;
}

Element Element::vertex(GraphPtr g, Vertex v) {
  if (!g->contains(v)) throw Error("unknown vertex");
  return monomial(std::move(g), Monomial::vertex(v));
}

Element Element::edge(GraphPtr g, Edge e) {
  if (!g->contains(e)) throw Error("unknown edge");
  auto m = Monomial::edge(*g, e);
  return monomial(std::move(g), m);
}

Element Element::ghost(GraphPtr g, Edge e) {
  if (!g->contains(e)) throw Error("unknown edge");
  auto m = Monomial::ghost(*g, e);
  return monomial(std::move(g), m);
}

Element Element::path(GraphPtr g, const Path& p) {
  auto m = Monomial::make(*g, p, Path::trivial(p.range(*g)));
  return monomial(std::move(g), m);
}

Element Element::ghost_path(GraphPtr g, const Path& p) {
  auto m = Monomial::make(*g, Path::trivial(p.range(*g)), p);
  return monomial(std::move(g), m);
}

Element Element::monomial(GraphPtr g, const Monomial& m, const Scalar& c) {
  Element out(std::move(g));
  out.accumulate(m, c);
  return out;
}

Element Element::unit(GraphPtr g) {
  Element out(g);
  for (Vertex v : g->vertices()) out.accumulate(Monomial::vertex(v), 1);
  return out;
}

Element& Element::operator+=(const Element& other) {
  check_same_graph(other);
  for (const auto& [m, c] : other.terms_) accumulate(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  check_same_graph(other);
  for (const auto& [m, c] : other.terms_) accumulate(m, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Element mul_monomials(const GraphPtr& gp, const Monomial& m1, const Monomial& m2) {
  const Graph& g = *gp;
  Element out(gp);
  // (a b^*)(c d^*) = a (b^* c) d^*, and b^* c is a path, a ghost path or 0.
  Vertex b_src = m1.beta.empty() ? m1.apex : g.src(m1.beta.front());
  Vertex c_src = m2.alpha.empty() ? m2.apex : g.src(m2.alpha.front());
  if (b_src != c_src) return out;
  const auto& b = m1.beta;
  const auto& c = m2.alpha;
  std::size_t common = std::min(b.size(), c.size());
  if (!std::equal(b.begin(), b.begin() + static_cast<long>(common), c.begin())) return out;
  Monomial product;
  if (b.size() <= c.size()) {
    product.alpha = m1.alpha;
    product.alpha.insert(product.alpha.end(), c.begin() + static_cast<long>(b.size()), c.end());
    product.beta = m2.beta;
    product.apex = m2.apex;
  } else {
    product.alpha = m1.alpha;
    product.beta = m2.beta;
    product.beta.insert(product.beta.end(), b.begin() + static_cast<long>(c.size()), b.end());
    product.apex = m1.apex;
  }
  return Element::monomial(gp, product);
}

Element operator*(const Element& a, const Element& b) {
  a.check_same_graph(b);
  Element out(a.graph_);
  for (const auto& [m1, c1] : a.terms_) {
    for (const auto& [m2, c2] : b.terms_) {
      Element p = mul_monomials(a.graph_, m1, m2);
      Scalar c = c1 * c2;
      for (const auto& [m, cp] : p.terms_) out.accumulate(m, c * cp);
    }
  }
  return out;
}

bool operator==(const Element& a, const Element& b) {
  a.check_same_graph(b);
  return a.terms_ == b.terms_;
}

std::map<long, Element> graded_components(const Element& x) {
  std::map<long, Element> out;
  for (const auto& [m, c] : x.terms()) {
    auto it = out.try_emplace(m.degree(), x.graph_ptr()).first;
    it->second += Element::monomial(x.graph_ptr(), m, c);
  }
  return out;
}

std::size_t gdeg(const Element& x) {
  if (x.is_zero()) throw Error("gdeg of the zero element is undefined");
  std::size_t best = 0;
  for (const auto& [m, c] : x.terms()) best = std::max(best, m.ghost_degree());
  return best;
}

bool is_homogeneous(const Element& x) { return graded_components(x).size() <= 1; }

std::string to_string(const Graph& g, const Monomial& m) {
  if (m.alpha.empty() && m.beta.empty()) return g.name(m.apex);
  std::string out;
  for (Edge e : m.alpha) {
    if (!out.empty()) out += '.';
    out += g.name(e);
  }
  for (auto it = m.beta.rbegin(); it != m.beta.rend(); ++it) {
    if (!out.empty()) out += '.';
    out += g.name(*it);
    out += "*'";
  }
  return out;
}

std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += to_string(x.graph(), m);
    first = false;
  }
  return out;
}

}  // namespace lpa
