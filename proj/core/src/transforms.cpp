#include "critgroup/transforms.hpp"

#include <algorithm>
#include <tuple>

#include "critgroup/error.hpp"

namespace critgroup {

LineGraph line_graph_with_junctions(const Graph& g) {
  std::vector<std::tuple<int, int, int>> links;
  for (int w = 0; w < g.vertex_count(); ++w) {
    std::vector<int> at;
    for (const auto& inc : g.incidence(w)) at.push_back(inc.edge);
    std::sort(at.begin(), at.end());
    for (std::size_t a = 0; a < at.size(); ++a) {
      for (std::size_t b = a + 1; b < at.size(); ++b) links.emplace_back(at[a], at[b], w);
    }
  }
  std::sort(links.begin(), links.end());
  std::vector<std::pair<int, int>> pairs;
  LineGraph out;
  pairs.reserve(links.size());
  out.junction.reserve(links.size());
  for (auto [i, j, w] : links) {
    pairs.emplace_back(i, j);
    out.junction.push_back(w);
  }
  out.graph = Graph(g.edge_count(), std::move(pairs));
  return out;
}

Graph line_graph(const Graph& g) { return line_graph_with_junctions(g).graph; }

Graph subdivision(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(2 * g.edges().size());
  for (int i = 0; i < g.edge_count(); ++i) {
    pairs.emplace_back(g.edge(i).u, n + i);
    pairs.emplace_back(g.edge(i).v, n + i);
  }
  return Graph(n + g.edge_count(), std::move(pairs));
}

Orientation subdivision_along_orientation(const Graph& g) {
  const Graph sd = subdivision(g);
  Orientation o(static_cast<std::size_t>(sd.edge_count()), 1);
  // Canonically both halves point into the midpoint; the far half must be
  // flipped to run m_e -> v.
  for (int i = 0; i < g.edge_count(); ++i) {
    o[static_cast<std::size_t>(*sd.find_edge(g.edge(i).v, g.vertex_count() + i))] = -1;
  }
  return o;
}

int beta(const Graph& g) {
  return g.edge_count() - g.vertex_count() + g.component_count();
}

RegularityClass classify_regularity(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorKind::NotConnected, "regularity needs a connected graph");
  RegularityClass c;
  const int n = g.vertex_count();
  bool regular = true;
  for (int v = 1; v < n; ++v) regular = regular && g.degree(v) == g.degree(0);
  if (regular) {
    c.kind = RegularityClass::Kind::Regular;
    c.d1 = c.d2 = n > 0 ? g.degree(0) : 0;
    return c;
  }
  try {
    return semiregular_bipartite_view(g);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotSemiregularBipartite) throw;
  }
  return c;
}

RegularityClass semiregular_bipartite_view(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorKind::NotConnected, "semiregular view needs a connected graph");
  auto color = g.bipartition();
  if (!color) throw Error(ErrorKind::NotSemiregularBipartite, "graph is not bipartite");
  int deg[2] = {-1, -1};
  for (int v = 0; v < g.vertex_count(); ++v) {
    int& d = deg[(*color)[static_cast<std::size_t>(v)]];
    if (d < 0) d = g.degree(v);
    if (d != g.degree(v)) {
      throw Error(ErrorKind::NotSemiregularBipartite, "degrees vary within a side");
    }
  }
  if (deg[0] < 0 || deg[1] < 0) {
    throw Error(ErrorKind::NotSemiregularBipartite, "a side of the bipartition is empty");
  }
  RegularityClass c;
  c.kind = RegularityClass::Kind::SemiregularBipartite;
  c.d1 = deg[0];
  c.d2 = deg[1];
  c.side = std::move(*color);
  return c;
}

std::vector<int> side_vertices(const RegularityClass& c, int which) {
  std::vector<int> out;
  for (std::size_t v = 0; v < c.side.size(); ++v) {
    if (c.side[v] == which) out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace critgroup
