#include "lpa/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lpa/error.hpp"
#include "lpa/graph_io.hpp"
#include "lpa/ideal_io.hpp"
#include "lpa/skeleton.hpp"
#include "lpa/two_vertex.hpp"

namespace lpa::cli {

namespace {

using ojson = nlohmann::ordered_json;

enum class Format { Text, Json, Dot };

struct Options {
  std::string graph_file;
  std::string vertex;
  std::vector<std::string> vertex_list;
  unsigned edges = 0;
  bool verify = false;
  std::vector<std::string> ideal_files;
  std::vector<std::string> positional;
  Format format = Format::Text;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ojson names(const Graph& g, const VertexSet& x) {
  ojson out = ojson::array();
  for (Vertex v : x) out.push_back(g.name(v));
  return out;
}

ojson edge_names(const Graph& g, std::span<const Edge> edges) {
  ojson out = ojson::array();
  for (Edge e : edges) out.push_back(g.name(e));
  return out;
}

ojson ordered(const nlohmann::json& j) { return ojson::parse(j.dump()); }

void require_format(const Options& o, std::initializer_list<Format> allowed) {
  if (std::find(allowed.begin(), allowed.end(), o.format) == allowed.end())
    throw UsageError("output format not supported by this command");
}

void emit(std::ostream& out, const ojson& j) { out << j.dump() << '\n'; }

std::string shape_text(const TwoVertexShape& s) { return to_string(s); }

ojson shape_json(const TwoVertexShape& s) {
  return {{"loops_u", s.loops_u}, {"loops_v", s.loops_v}, {"edges_uv", s.edges_uv},
          {"edges_vu", s.edges_vu}};
}

std::string witness_factors(const Graph& g, const std::vector<Monomial>& ms) {
  if (ms.empty()) return "1";
  std::string out;
  for (const auto& m : ms) {
    if (!out.empty()) out += " ";
    out += "(" + to_string(g, m) + ")";
  }
  return out;
}

ojson witness_factor_json(const Graph& g, const std::vector<Monomial>& ms) {
  ojson out = ojson::array();
  for (const auto& m : ms) out.push_back(to_string(g, m));
  return out;
}

// Command context: the loaded graph plus helpers shared by the commands.
struct Context {
  const Options& opt;
  std::ostream& out;
  GraphPtr graph_ptr;

  const Graph& graph() {
    if (!graph_ptr) {
      if (opt.graph_file.empty()) throw UsageError("--graph is required");
      graph_ptr = load_graph_file(opt.graph_file);
    }
    return *graph_ptr;
  }

  Element element_arg(std::size_t i) {
    if (opt.positional.size() <= i) throw UsageError("missing element argument");
    graph();
    return parse_element(graph_ptr, opt.positional[i]);
  }

  LambdaGeneratorSet generators() {
    const Graph& g = graph();
    LambdaGeneratorSet gens;
    for (const auto& file : opt.ideal_files) {
      auto more = load_ideal_file(g, file);
      gens.polys.insert(gens.polys.end(), more.polys.begin(), more.polys.end());
      gens.vertex_gens.insert(more.vertex_gens.begin(), more.vertex_gens.end());
    }
    for (const auto& text : opt.positional) {
      auto gen = generator_from_element(parse_element(graph_ptr, text));
      if (auto* v = std::get_if<Vertex>(&gen)) gens.vertex_gens.insert(*v);
      else gens.polys.push_back(std::get<CyclePolynomial>(gen));
    }
    if (opt.ideal_files.empty() && opt.positional.empty())
      throw UsageError("give generators with --ideal FILE or as element arguments");
    return gens;
  }
};

void print_reduction(Context& c, const LambdaReduction& r) {
  const Graph& g = c.graph();
  if (c.opt.format == Format::Json) {
    emit(c.out, ordered(to_json(g, r)));
    return;
  }
  c.out << "vertices: " << format_vertex_set(g, r.vertex_part.members()) << '\n';
  for (const auto& [cyc, p] : r.polys)
    c.out << "poly on " << format_edges(g, cyc.edges(), "") << " at " << g.name(p.base) << ": "
          << p.poly.to_string() << '\n';
  c.out << (is_graded(r) ? "graded" : "not graded") << '\n';
}

int cmd_check_k(Context& c) {
  require_format(c.opt, {Format::Text, Format::Json});
  const Graph& g = c.graph();
  auto rep = condition_k(g);
  VertexSet k1(rep.k1_vertices.begin(), rep.k1_vertices.end());
  if (c.opt.format == Format::Json) {
    emit(c.out, {{"condition_k", rep.holds}, {"k1_vertices", names(g, k1)}});
  } else if (rep.holds) {
    c.out << "true\n";
  } else {
    c.out << "false: K1 vertices [";
    for (std::size_t i = 0; i < rep.k1_vertices.size(); ++i)
      c.out << (i ? ", " : "") << g.name(rep.k1_vertices[i]);
    c.out << "]\n";
  }
  return kExitOk;
}

int cmd_classify_vertex(Context& c) {
  require_format(c.opt, {Format::Text, Format::Json});
  if (c.opt.vertex.empty()) throw UsageError("--vertex is required");
  const Graph& g = c.graph();
  auto cls = classify_vertex(g, g.vertex(c.opt.vertex));
  if (c.opt.format == Format::Json) {
    ojson j{{"vertex", c.opt.vertex}, {"class", to_string(cls.kind)}};
    if (cls.cycle) j["cycle"] = edge_names(g, cls.cycle->edges());
    emit(c.out, j);
  } else {
    c.out << to_string(cls.kind);
    if (cls.cycle) c.out << " cycle " << format_edges(g, cls.cycle->edges(), "");
    c.out << '\n';
  }
  return kExitOk;
}

int cmd_closure(Context& c) {
  require_format(c.opt, {Format::Text, Format::Json});
  const Graph& g = c.graph();
  VertexSet x;
  for (const auto& name : c.opt.vertex_list) x.insert(g.vertex(name));
  auto t = hereditary_saturated_closure(g, x);
  if (c.opt.format == Format::Json) emit(c.out, {{"closure", names(g, t.members())}});
  else c.out << format_vertex_set(g, t.members()) << '\n';
  return kExitOk;
}

int cmd_hs_sets(Context& c) {
  require_format(c.opt, {Format::Text, Format::Json});
  const Graph& g = c.graph();
  auto sets = all_hereditary_saturated_sets(g);
  if (c.opt.format == Format::Json) {
    ojson arr = ojson::array();
    for (const auto& s : sets) arr.push_back(names(g, s.members()));
    emit(c.out, {{"hereditary_saturated_sets", arr}});
  } else {
    for (const auto& s : sets) c.out << format_vertex_set(g, s.members()) << '\n';
  }
  return kExitOk;
}

int cmd_graded_lattice(Context& c) {
  const Graph& g = c.graph();
  auto lat = graded_lattice(g);
  switch (c.opt.format) {
    case Format::Dot:
      c.out << lattice_to_dot(g, lat);
      break;
    case Format::Json: {
      ojson nodes = ojson::array(), covers = ojson::array();
      for (const auto& n : lat.nodes) nodes.push_back(names(g, n.generators.members()));
      for (const auto& [lo, hi] : lat.covers) covers.push_back({lo, hi});
      emit(c.out, {{"nodes", nodes}, {"covers", covers}});
      break;
    }
    case Format::Text:
      for (const auto& [lo, hi] : lat.covers)
        c.out << format_vertex_set(g, lat.nodes[lo].generators.members()) << " < "
              << format_vertex_set(g, lat.nodes[hi].generators.members()) << '\n';
      if (lat.covers.empty())
        for (const auto& n : lat.nodes) c.out << format_vertex_set(g, n.generators.members()) << '\n';
      break;
  }
  return kExitOk;
}

int print_element(Context& c, const Element& x) {
  if (c.opt.format == Format::Json) emit(c.out, {{"element", to_string(x)}});
  else c.out << to_string(x) << '\n';
  return kExitOk;
}

int cmd_normalize(Context& c) {
  require_format(c.opt, {Format::Text, Format::Json});
  Element x = c.element_arg(0);
  for (std::size_t i = 1; i < c.opt.positional.size(); ++i) x += c.element_arg(i);
  return print_element(c, x);
}

int cmd_mul(Context& c) {
  require_format(c.opt, {Format::Text, Format::Json});
  if (c.opt.positional.size() < 2) throw UsageError("mul needs at least two elements");
  Element x = c.element_arg(0);
  for (std::size_t i = 1; i < c.opt.positional.size(); ++i) x = x * c.element_arg(i);
  return print_element(c, x);
}

int cmd_grade(Context& c) {
  require_format(c.opt, {Format::Text, Format::Json});
  Element x = c.element_arg(0);
  auto parts = graded_components(x);
  if (c.opt.format == Format::Json) {
    ojson arr = ojson::array();
    for (const auto& [d, y] : parts) arr.push_back({{"degree", d}, {"element", to_string(y)}});
    ojson j{{"components", arr}, {"homogeneous", parts.size() <= 1}};
    if (!x.is_zero()) j["ghost_degree"] = gdeg(x);
    emit(c.out, j);
  } else {
    for (const auto& [d, y] : parts) c.out << "degree " << d << ": " << to_string(y) << '\n';
    if (parts.empty()) c.out << "0\n";
  }
  return kExitOk;
}

int cmd_lambda_reduce(Context& c) {
  require_format(c.opt, {Format::Text, Format::Json});
  print_reduction(c, lambda_reduce(c.graph(), c.generators()));
  return kExitOk;
}

int cmd_contains(Context& c) {
  require_format(c.opt, {Format::Text, Format::Json});
  if (c.opt.ideal_files.size() != 2 || !c.opt.positional.empty())
    throw UsageError("contains needs exactly two --ideal files");
  const Graph& g = c.graph();
  auto a = lambda_reduce(g, load_ideal_file(g, c.opt.ideal_files[0]));
  auto b = lambda_reduce(g, load_ideal_file(g, c.opt.ideal_files[1]));
  bool holds = contains(g, a, b);
  if (c.opt.format == Format::Json) emit(c.out, {{"contains", holds}});
  else c.out << (holds ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_extract_vertex(Context& c) {
  require_format(c.opt, {Format::Text, Format::Json});
  Element a = c.element_arg(0);
  const Graph& g = c.graph();
  auto w = extract_vertex(a);
  if (c.opt.format == Format::Json) {
    emit(c.out, {{"left", witness_factor_json(g, w.left_factors)},
                 {"right", witness_factor_json(g, w.right_factors)},
                 {"vertex", g.name(w.vertex)},
                 {"scalar", to_string(w.scalar)},
                 {"result", to_string(apply_witness(w, a))}});
  } else {
    c.out << "left: " << witness_factors(g, w.left_factors) << '\n'
          << "right: " << witness_factors(g, w.right_factors) << '\n'
          << "result: " << to_string(apply_witness(w, a)) << '\n';
  }
  return kExitOk;
}

int cmd_nongraded_witness(Context& c) {
  require_format(c.opt, {Format::Text, Format::Json});
  const Graph& g = c.graph();
  auto w = nongraded_witness(c.graph_ptr);
  if (!w) throw Error("graph satisfies Condition (K); every ideal is graded");
  LambdaGeneratorSet gens;
  gens.polys.push_back(std::get<CyclePolynomial>(generator_from_element(w->generator)));
  auto r = lambda_reduce(g, gens);
  if (c.opt.format == Format::Json) {
    emit(c.out, {{"vertex", g.name(w->vertex)},
                 {"cycle", edge_names(g, w->cycle.edges())},
                 {"generator", to_string(w->generator)},
                 {"graded", is_graded(r)}});
  } else {
    c.out << "vertex " << g.name(w->vertex) << ", cycle " << format_edges(g, w->cycle.edges(), "")
          << ", generator " << to_string(w->generator) << '\n';
  }
  return kExitOk;
}

int cmd_count2(Context& c) {
  require_format(c.opt, {Format::Text, Format::Json});
  auto formula = count_closed_form(c.opt.edges);
  if (!c.opt.verify) {
    if (c.opt.format == Format::Json) emit(c.out, {{"edges", c.opt.edges}, {"count", formula}});
    else c.out << formula << '\n';
    return kExitOk;
  }
  auto oracle = enumerate_up_to_iso(c.opt.edges).size();
  bool agree = formula == oracle;
  if (c.opt.format == Format::Json)
    emit(c.out, {{"edges", c.opt.edges}, {"formula", formula}, {"enumeration", oracle}, {"agree", agree}});
  else
    c.out << formula << " (formula) " << (agree ? "==" : "!=") << ' ' << oracle << " (enumeration)\n";
  return agree ? kExitOk : kExitDomain;
}

int cmd_enum2(Context& c) {
  require_format(c.opt, {Format::Text, Format::Json});
  auto shapes = enumerate_up_to_iso(c.opt.edges);
  if (c.opt.format == Format::Json) {
    ojson arr = ojson::array();
    for (const auto& s : shapes) arr.push_back(shape_json(s));
    emit(c.out, {{"edges", c.opt.edges}, {"count", shapes.size()}, {"shapes", arr}});
  } else {
    for (const auto& s : shapes) c.out << shape_text(s) << '\n';
  }
  return kExitOk;
}

int cmd_classify2(Context& c) {
  const Graph& g = c.graph();
  auto cls = classify(g);
  switch (c.opt.format) {
    case Format::Dot:
      c.out << skeleton_to_dot(g, cls.skeleton);
      break;
    case Format::Json: {
      ojson listing = ojson::array(), notes = ojson::array();
      for (const auto& l : cls.listed_classes) listing.push_back(l);
      for (const auto& n : cls.notes) notes.push_back(n);
      emit(c.out, {{"class", cls.label},
                   {"canonical_id", cls.canonical_id},
                   {"canonical_shape", shape_json(canonical_shapes()[cls.canonical_id - 1])},
                   {"listed_classes", listing},
                   {"notes", notes},
                   {"skeleton", ordered(skeleton_to_json(g, cls.skeleton))}});
      break;
    }
    case Format::Text:
      c.out << "class " << cls.label << " (graph [" << cls.canonical_id << "])\n";
      for (const auto& n : cls.notes) c.out << "note: " << n << '\n';
      break;
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leavitt path algebra toolkit", "lpa"};
  app.require_subcommand(1);
  Options opt;

  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"json", Format::Json}, {"dot", Format::Dot}};

  using Handler = std::function<int(Context&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", opt.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    commands.emplace_back(sub, std::move(h));
    return sub;
  };
  auto with_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", opt.graph_file, "Graph file")->required();
    return sub;
  };

  with_graph(add("check-k", "Test Condition (K)", cmd_check_k));
  with_graph(add("classify-vertex", "K0/K1/K2 class of a vertex", cmd_classify_vertex))
      ->add_option("--vertex", opt.vertex, "Vertex name")
      ->required();
  with_graph(add("closure", "Hereditary saturated closure T(X)", cmd_closure))
      ->add_option("--vertices", opt.vertex_list, "Comma-separated vertex names")
      ->delimiter(',');
  with_graph(add("hs-sets", "All hereditary saturated sets", cmd_hs_sets));
  with_graph(add("graded-lattice", "Lattice of graded ideals", cmd_graded_lattice));
  with_graph(add("normalize", "Normal form of the sum of the elements", cmd_normalize))
      ->add_option("elements", opt.positional, "Elements")
      ->required();
  with_graph(add("mul", "Product of the elements, left to right", cmd_mul))
      ->add_option("elements", opt.positional, "Elements")
      ->required();
  with_graph(add("grade", "Homogeneous components", cmd_grade))
      ->add_option("element", opt.positional, "Element")
      ->required();
  {
    auto* sub = with_graph(add("lambda-reduce", "Canonical lambda-reduction", cmd_lambda_reduce));
    sub->add_option("--ideal", opt.ideal_files, "Ideal JSON file");
    sub->add_option("generators", opt.positional, "Generators as elements");
  }
  with_graph(add("contains", "Whether the first ideal lies in the second", cmd_contains))
      ->add_option("--ideal", opt.ideal_files, "Ideal JSON file (give two)")
      ->required();
  with_graph(add("extract-vertex", "Multiply an element down to a vertex", cmd_extract_vertex))
      ->add_option("element", opt.positional, "Element")
      ->required();
  with_graph(add("nongraded-witness", "Generator of a non-graded ideal", cmd_nongraded_witness));
  {
    auto* sub = add("count2", "Count two-vertex graphs with K edges", cmd_count2);
    sub->add_option("--edges", opt.edges, "Number of edges")->required();
    sub->add_flag("--verify", opt.verify, "Compare against enumeration");
  }
  add("enum2", "Enumerate two-vertex graphs with K edges", cmd_enum2)
      ->add_option("--edges", opt.edges, "Number of edges")
      ->required();
  with_graph(add("classify2", "Ideal lattice class of a two-vertex graph", cmd_classify2));

  std::ostringstream cli_out, cli_err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    Context ctx{opt, out, nullptr};
    try {
      return handler(ctx);
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kExitDomain;
    }
  }
  return kExitUsage;
}

}  // namespace lpa::cli
