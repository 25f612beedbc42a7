#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critgroup/graph.hpp"

namespace critgroup {

/// Named constructions with deterministic labelings.
///
/// Families: complete(n), complete-bipartite(n1, n2), cube(d), cycle(n),
/// path(n), star(n) (= K_{1,n}), petersen, tetrahedron, octahedron,
/// dodecahedron, icosahedron.
/// Throws Error(UnknownFamily) or Error(BadParams).
Graph generate_named(std::string_view family, const std::vector<int>& params = {});

/// "complete:4", "complete-bipartite:3,4", "petersen".
Graph generate_from_spec(std::string_view spec);

std::vector<std::string> family_names();

Graph complete_graph(int n);
Graph complete_bipartite_graph(int n1, int n2);
Graph cube_graph(int d);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();
Graph octahedron_graph();
Graph dodecahedron_graph();
Graph icosahedron_graph();

/// Every connected simple graph on exactly n labeled vertices, for
/// n = 2..n_max, by filtering edge subsets of K_n. No isomorphism
/// reduction. Single consumer.
class ConnectedGraphEnumerator {
 public:
  static constexpr int kMaxVertices = 7;

  /// Throws Error(TooLarge) when n_max > kMaxVertices.
  explicit ConnectedGraphEnumerator(int n_max);

  std::optional<Graph> next();

 private:
  bool advance();

  int n_max_;
  int n_;
  std::uint32_t mask_ = 0;
  std::uint32_t mask_end_ = 0;
  std::vector<std::pair<int, int>> pairs_;
};

std::vector<Graph> enumerate_connected(int n_max);

}  // namespace critgroup
