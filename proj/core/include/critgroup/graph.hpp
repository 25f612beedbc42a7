#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace critgroup {

/// Unordered vertex pair stored with u < v; the canonical orientation of the
/// edge is u -> v.
struct Edge {
  int u = 0;
  int v = 0;

  int other(int w) const noexcept { return w == u ? v : u; }
  bool has(int w) const noexcept { return w == u || w == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// One entry of a vertex's incidence list.
struct Incidence {
  int neighbor = 0;
  int edge = 0;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted lexicographically, so edge indices are reproducible
/// and every matrix built downstream is bit-stable. Loops and parallel edges
/// are rejected with Error(InvalidGraph).
class Graph {
 public:
  Graph() = default;
  /// Pairs may be given in any order and with either endpoint first.
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }

  int degree(int v) const { return static_cast<int>(incidence(v).size()); }
  /// Incident edges of v, sorted by neighbor.
  const std::vector<Incidence>& incidence(int v) const {
    return incidence_.at(static_cast<std::size_t>(v));
  }
  std::optional<int> find_edge(int a, int b) const;

  /// Component label per vertex; labels are 0.. in order of smallest vertex.
  std::vector<int> component_labels() const;
  int component_count() const;
  bool is_connected() const;

  /// Proper 2-coloring (color of the smallest vertex of each component is 0),
  /// or nullopt when an odd cycle exists.
  std::optional<std::vector<int>> bipartition() const;
  bool is_bipartite() const { return bipartition().has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
};

/// Edge-list text: first line "n m", then m lines "u v"; '#' starts a comment.
/// Throws Error(ParseError) or Error(InvalidGraph).
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// One-line name such as "4:0-1,1-2,2-3", used to label enumerated graphs.
std::string compact_descriptor(const Graph& g);

std::ostream& operator<<(std::ostream& os, const Graph& g);

/// Per-edge orientation: +1 keeps the canonical u -> v, -1 reverses it.
using Orientation = std::vector<int>;

Orientation canonical_orientation(const Graph& g);

}  // namespace critgroup
