#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/two_vertex.hpp"

namespace lpa::testing {

inline GraphPtr graph(std::vector<std::string> vertices,
                      std::vector<GraphSpec::EdgeSpec> edges = {}) {
  return make_graph(GraphSpec{std::move(vertices), std::move(edges)});
}

// Rose with one petal.
inline GraphPtr r1() { return graph({"v"}, {{"e", "v", "v"}}); }
inline GraphPtr r2() { return graph({"v"}, {{"e", "v", "v"}, {"f", "v", "v"}}); }
inline GraphPtr l2() { return graph({"u", "v"}, {{"a", "u", "v"}}); }
inline GraphPtr c2() { return graph({"u", "v"}, {{"g", "u", "v"}, {"h", "v", "u"}}); }
inline GraphPtr g5() { return graph({"u", "v"}, {{"e", "u", "u"}}); }
inline GraphPtr g6() { return graph({"u", "v"}, {{"e", "u", "u"}, {"a", "u", "v"}}); }
// Two-cycle with an exit to a sink.
inline GraphPtr g7() {
  return graph({"u", "v", "w"}, {{"a", "u", "v"}, {"b", "v", "u"}, {"c", "v", "w"}});
}
inline GraphPtr y3() {
  return graph({"u", "v", "w"}, {{"e", "v", "v"},
                                 {"f", "w", "w"},
                                 {"a", "u", "v"},
                                 {"b", "u", "w"},
                                 {"c", "v", "w"}});
}

// Reference two-vertex graph [id], 1..16.
inline GraphPtr reference(int id) { return graph_from_shape(canonical_shapes()[id - 1]); }

struct Named {
  std::string name;
  GraphPtr g;
};

inline std::vector<Named> all_fixtures() {
  std::vector<Named> out{{"R1", r1()}, {"R2", r2()}, {"L2", l2()}, {"C2", c2()}, {"G5", g5()},
                         {"G6", g6()}, {"G7", g7()}, {"Y3", y3()}};
  for (int id = 1; id <= 16; ++id) out.push_back({"[" + std::to_string(id) + "]", reference(id)});
  return out;
}

}  // namespace lpa::testing
