#include "lpa/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "lpa/error.hpp"

namespace lpa {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

GraphSpec parse_graph_spec(std::string_view text) {
  GraphSpec spec;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& what) {
      throw Error("graph line " + std::to_string(line_no) + ": " + what);
    };
    if (line.rfind("vertices:", 0) == 0) {
      for (auto& v : split_ws(line.substr(9))) spec.vertices.push_back(std::move(v));
    } else if (line.rfind("edge", 0) == 0 && line.size() > 4 && (line[4] == ' ' || line[4] == '\t')) {
      auto rest = line.substr(5);
      auto colon = rest.find(':');
      if (colon == std::string_view::npos) fail("expected 'edge NAME: SRC -> DST'");
      auto name = std::string(trim(rest.substr(0, colon)));
      auto ends = rest.substr(colon + 1);
      auto arrow = ends.find("->");
      if (arrow == std::string_view::npos) fail("expected '->' in edge line");
      auto src = std::string(trim(ends.substr(0, arrow)));
      auto dst = std::string(trim(ends.substr(arrow + 2)));
      if (name.empty() || src.empty() || dst.empty()) fail("empty identifier in edge line");
      spec.edges.push_back({std::move(name), std::move(src), std::move(dst)});
    } else {
      fail("unrecognized line '" + std::string(line) + "'");
    }
  }
  return spec;
}

Graph parse_graph(std::string_view text) { return Graph::build(parse_graph_spec(text)); }

GraphPtr load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return std::make_shared<const Graph>(parse_graph(buf.str()));
}

std::string to_text(const Graph& g) {
  std::ostringstream os;
  os << "vertices:";
  for (Vertex v : g.vertices()) os << ' ' << g.name(v);
  os << '\n';
  for (Edge e : g.edges())
    os << "edge " << g.name(e) << ": " << g.name(g.src(e)) << " -> " << g.name(g.rng(e)) << '\n';
  return os.str();
}

}  // namespace lpa
