#pragma once

#include <optional>
#include <vector>

#include "critgroup/graph.hpp"

namespace critgroup {

/// Indices of cut-edges.
std::vector<int> bridges(const Graph& g);

/// Connected with no cut-edge. Graphs with fewer than two vertices are not
/// counted as 2-edge-connected (they have no cycle to start an ear
/// decomposition from).
bool is_two_edge_connected(const Graph& g);

/// Edge sets of the 2-connected blocks (bridges form single-edge blocks).
std::vector<std::vector<int>> blocks(const Graph& g);

/// Greedy lowest-index-first spanning forest (union-find), as sorted edge
/// indices.
std::vector<int> canonical_spanning_forest(const Graph& g);

bool is_spanning_forest(const Graph& g, const std::vector<int>& edges);
bool is_spanning_tree(const Graph& g, const std::vector<int>& edges);

/// Alternating walk u_1, e_1, u_2, ..., e_l, u_{l+1}.
struct Ear {
  std::vector<int> vertices;  ///< l + 1 entries.
  std::vector<int> edges;     ///< l entries.
  bool closed = false;        ///< First and last vertex coincide.
};

/// ears[0] is the base cycle P_0 (a closed walk); ears[1..] attach to the
/// union of the earlier ones.
struct EarDecomposition {
  std::vector<Ear> ears;
};

/// Chain decomposition of a DFS tree. Returns nullopt exactly when g is not
/// 2-edge-connected. Throws Error(NotConnected).
std::optional<EarDecomposition> ear_decomposition(const Graph& g);

/// Checks that P_0 is a cycle, every later ear is an ear of the partial
/// union (internal vertices new, endpoints already present, closed ears of
/// length >= 3), and that every vertex and edge is used exactly once.
bool verify_ear_decomposition(const Graph& g, const EarDecomposition& d);

/// One element of V disjoint-union T.
struct OrderItem {
  enum class Kind { Vertex, Edge };
  Kind kind = Kind::Vertex;
  int index = 0;

  static OrderItem vertex(int v) { return {Kind::Vertex, v}; }
  static OrderItem edge(int e) { return {Kind::Edge, e}; }
  bool is_vertex() const noexcept { return kind == Kind::Vertex; }

  friend bool operator==(const OrderItem&, const OrderItem&) = default;
};

/// A spanning tree together with a linear order on its vertices and edges.
struct AbsorptionOrder {
  std::vector<int> tree;  ///< Sorted edge indices.
  std::vector<OrderItem> order;

  int first_vertex() const { return order.at(0).index; }
  int first_edge() const { return order.at(1).index; }
};

/// Builds a spanning tree with an absorption order by inserting ears one at
/// a time into the order of the base cycle.
/// Throws Error(NotTwoEdgeConnected).
AbsorptionOrder absorption_order(const Graph& g);

/// Literal check of the three absorption conditions. Returns false when the
/// order is not a permutation of V plus the tree edges.
/// Throws Error(NotSpanningTree).
bool verify_absorption_order(const Graph& g, const AbsorptionOrder& a);

/// Orientation of all edges of g whose restriction to the spanning tree is
/// bipartite (tree edges point from color 0 to color 1 of the tree's
/// 2-coloring; other edges stay canonical).
/// Throws Error(NotSpanningTree).
Orientation bipartite_tree_orientation(const Graph& g,
                                       const std::vector<int>& tree);

/// At every vertex, the incident tree edges all point in, or all point out.
bool is_bipartite_on_tree(const Graph& g, const std::vector<int>& tree,
                          const Orientation& orientation);

}  // namespace critgroup
