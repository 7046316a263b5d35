#include "lpa/skeleton.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace lpa {

namespace {

using Arc = LatticeSkeleton::Arc;

// Sample members of a family: monic, nonzero constant term, with both
// divisible and non-divisible pairs among them.
std::vector<Polynomial> sample_polynomials() {
  return {Polynomial({Scalar(1), Scalar(1)}),                // x + 1
          Polynomial({Scalar(-1), Scalar(1)}),               // x - 1
          Polynomial({Scalar(-1), Scalar(0), Scalar(1)})};   // x^2 - 1
}

std::vector<LambdaReduction> members_of(const Graph& g, const LatticeSkeleton& s, std::size_t i) {
  if (!s.is_family(i)) return {LambdaReduction{s.graded_nodes[i], {}}};
  const auto& fam = s.families[i - s.graded_nodes.size()];
  std::vector<LambdaReduction> out;
  for (auto& p : sample_polynomials()) {
    LambdaReduction r{s.graded_nodes[fam.attached], {}};
    r.polys.emplace(fam.cycle, CyclePolynomial{fam.cycle, fam.cycle.base(g), std::move(p)});
    out.push_back(std::move(r));
  }
  return out;
}

std::string encode(const LatticeSkeleton& s, const std::vector<std::size_t>& order) {
  std::string code;
  for (std::size_t i : order) code += s.is_family(i) ? 'F' : 'N';
  code += ':';
  for (std::size_t i : order)
    for (std::size_t j : order) code += static_cast<char>('0' + static_cast<int>(s.relation[i][j]));
  return code;
}

}  // namespace

LatticeSkeleton build_skeleton(const Graph& g) {
  LatticeSkeleton s;
  s.graded_nodes = all_hereditary_saturated_sets(g);
  for (const Cycle& c : k1_cycles(g)) {
    VertexSet exits = exit_range(g, c);
    HeredSatSet required = hereditary_saturated_closure(g, exits);
    for (std::size_t i = 0; i < s.graded_nodes.size(); ++i) {
      const auto& x = s.graded_nodes[i];
      auto sources = c.sources(g);
      bool based_in_x = std::any_of(sources.begin(), sources.end(), [&](Vertex v) { return x.contains(v); });
      if (!based_in_x && required.subset_of(x)) s.families.push_back({c, i});
    }
  }

  const std::size_t n = s.element_count();
  s.relation.assign(n, std::vector<Arc>(n, Arc::None));
  std::vector<std::vector<LambdaReduction>> members(n);
  for (std::size_t i = 0; i < n; ++i) members[i] = members_of(g, s, i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      std::size_t hits = 0, total = 0;
      for (const auto& a : members[i])
        for (const auto& b : members[j]) {
          ++total;
          if (contains(g, a, b)) ++hits;
        }
      s.relation[i][j] = hits == 0 ? Arc::None : hits == total ? Arc::Contained : Arc::Partial;
    }
  }
  return s;
}

std::string LatticeSkeleton::canonical_code() const {
  const std::size_t n = element_count();
  // Refine by a permutation-invariant signature, then brute force within
  // blocks of equal signature.
  using Sig = std::tuple<bool, int, int, int, int>;
  std::vector<Sig> sig(n);
  for (std::size_t i = 0; i < n; ++i) {
    int out_c = 0, in_c = 0, out_p = 0, in_p = 0;
    for (std::size_t j = 0; j < n; ++j) {
      out_c += relation[i][j] == Arc::Contained;
      in_c += relation[j][i] == Arc::Contained;
      out_p += relation[i][j] == Arc::Partial;
      in_p += relation[j][i] == Arc::Partial;
    }
    sig[i] = {is_family(i), out_c, in_c, out_p, in_p};
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return sig[a] < sig[b]; });

  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && sig[order[j]] == sig[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  std::string best;
  auto sig_prefix = [&] {
    std::ostringstream os;
    for (std::size_t i : order) {
      auto [f, a, b, c, d] = sig[i];
      os << f << a << '.' << b << '.' << c << '.' << d << ';';
    }
    return os.str();
  }();
  auto search = [&](auto&& self, std::size_t block) -> void {
    if (block == blocks.size()) {
      std::string code = encode(*this, order);
      if (best.empty() || code < best) best = std::move(code);
      return;
    }
    auto [lo, hi] = blocks[block];
    std::sort(order.begin() + static_cast<long>(lo), order.begin() + static_cast<long>(hi));
    do {
      self(self, block + 1);
    } while (std::next_permutation(order.begin() + static_cast<long>(lo),
                                   order.begin() + static_cast<long>(hi)));
  };
  search(search, 0);
  return sig_prefix + best;
}

bool isomorphic(const LatticeSkeleton& a, const LatticeSkeleton& b) {
  return a.canonical_code() == b.canonical_code();
}

std::string element_label(const Graph& g, const LatticeSkeleton& s, std::size_t i) {
  auto vertex_list = [&](const HeredSatSet& x) {
    std::string out;
    for (Vertex v : x.members()) {
      if (!out.empty()) out += ", ";
      out += g.name(v);
    }
    return out;
  };
  if (!s.is_family(i)) {
    const auto& x = s.graded_nodes[i];
    if (x.empty()) return "<0>";
    if (x.size() == g.vertex_count()) return "L";
    return "<" + vertex_list(x) + ">";
  }
  const auto& fam = s.families[i - s.graded_nodes.size()];
  std::string label = "<P(" + format_edges(g, fam.cycle.edges(), "") + ")";
  const auto& x = s.graded_nodes[fam.attached];
  if (!x.empty()) label += ", " + vertex_list(x);
  return label + ">";
}

std::string skeleton_to_dot(const Graph& g, const LatticeSkeleton& s) {
  const std::size_t n = s.element_count();
  std::ostringstream os;
  os << "digraph lattice_skeleton {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < n; ++i)
    os << "  x" << i << " [label=\"" << element_label(g, s, i) << "\", shape="
       << (s.is_family(i) ? "ellipse" : "box") << "];\n";
  auto below = [&](std::size_t i, std::size_t j) { return s.relation[i][j] == Arc::Contained; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!below(i, j) || below(j, i)) continue;
      bool covering = true;
      for (std::size_t k = 0; k < n && covering; ++k)
        if (k != i && k != j && below(i, k) && below(k, j) && !below(k, i) && !below(j, k)) covering = false;
      if (covering) os << "  x" << i << " -> x" << j << ";\n";
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s.relation[i][j] == Arc::Partial && s.is_family(i) && s.is_family(j) &&
          (i < j || s.relation[j][i] != Arc::Partial))
        os << "  x" << i << " -> x" << j << " [style=dotted, dir=none];\n";
  os << "}\n";
  return os.str();
}

nlohmann::json skeleton_to_json(const Graph& g, const LatticeSkeleton& s) {
  using nlohmann::json;
  json nodes = json::array();
  for (std::size_t i = 0; i < s.graded_nodes.size(); ++i) {
    json verts = json::array();
    for (Vertex v : s.graded_nodes[i].members()) verts.push_back(g.name(v));
    nodes.push_back({{"label", element_label(g, s, i)}, {"vertices", verts}});
  }
  json fams = json::array();
  for (std::size_t k = 0; k < s.families.size(); ++k) {
    json cyc = json::array();
    for (Edge e : s.families[k].cycle.edges()) cyc.push_back(g.name(e));
    fams.push_back({{"label", element_label(g, s, s.graded_nodes.size() + k)},
                    {"cycle", cyc},
                    {"attached", s.families[k].attached}});
  }
  json contained = json::array(), partial = json::array();
  for (std::size_t i = 0; i < s.element_count(); ++i)
    for (std::size_t j = 0; j < s.element_count(); ++j) {
      if (s.relation[i][j] == Arc::Contained) contained.push_back({i, j});
      if (s.relation[i][j] == Arc::Partial) partial.push_back({i, j});
    }
  return {{"graded_nodes", nodes}, {"families", fams}, {"contained", contained}, {"partial", partial}};
}

}  // namespace lpa
