#pragma once

#include <vector>

#include "critgroup/graph.hpp"

namespace critgroup {

/// Line graph together with the vertex of G through which each line-graph
/// edge passes. Line-graph vertex i is edge i of G; the line-graph edge
/// {i, j}, i < j, is oriented i -> j and junction[k] is the shared endpoint.
struct LineGraph {
  Graph graph;
  std::vector<int> junction;
};

LineGraph line_graph_with_junctions(const Graph& g);
Graph line_graph(const Graph& g);

/// Edge subdivision: the midpoint of edge i is vertex n + i, and {u, v}
/// becomes {u, n + i}, {v, n + i}.
Graph subdivision(const Graph& g);

/// Orientation of sd(g) in which both halves of every edge point along the
/// parent's canonical direction: u -> m_e and m_e -> v.
Orientation subdivision_along_orientation(const Graph& g);

/// Cycle rank |E| - |V| + #components.
int beta(const Graph& g);

/// Degree classification relevant to regularity of the line graph.
struct RegularityClass {
  enum class Kind { Regular, SemiregularBipartite, Neither };

  Kind kind = Kind::Neither;
  int d1 = 0;  ///< Regular: the common degree. Semiregular: degree on side 1.
  int d2 = 0;  ///< Semiregular: degree on side 2.
  /// Semiregular: side (0 or 1) per vertex; side 0 contains vertex 0.
  std::vector<int> side;

  bool is_regular() const noexcept { return kind == Kind::Regular; }
  bool is_semiregular_bipartite() const noexcept {
    return kind == Kind::SemiregularBipartite;
  }
};

/// Regular(d) if all degrees agree; otherwise SemiregularBipartite(d1, d2)
/// when bipartite with constant degree per side; else Neither.
/// Throws Error(NotConnected).
RegularityClass classify_regularity(const Graph& g);

/// Semiregular view of a connected bipartite graph whose sides each have
/// constant degree, including the regular bipartite case (d1 == d2).
/// Throws Error(NotSemiregularBipartite) or Error(NotConnected).
RegularityClass semiregular_bipartite_view(const Graph& g);

/// Vertices of one side of a bipartition, in increasing order.
std::vector<int> side_vertices(const RegularityClass& c, int which);

}  // namespace critgroup
