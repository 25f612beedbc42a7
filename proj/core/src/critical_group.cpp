#include "critgroup/critical_group.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>

#include "critgroup/decomposition.hpp"
#include "critgroup/error.hpp"
#include "critgroup/smith.hpp"
#include "critgroup/transforms.hpp"

namespace critgroup {
namespace {

using Index = std::size_t;
inline Index ix(int i) { return static_cast<Index>(i); }

int head(const Graph& g, const Orientation& o, int e) {
  return o[ix(e)] > 0 ? g.edge(e).v : g.edge(e).u;
}
int tail(const Graph& g, const Orientation& o, int e) {
  return o[ix(e)] > 0 ? g.edge(e).u : g.edge(e).v;
}

void check_orientation(const Graph& g, const Orientation& o) {
  if (o.size() != ix(g.edge_count())) {
    throw Error(ErrorKind::DimensionMismatch, "orientation has the wrong length");
  }
}

// BFS inside the forest (optionally without one edge); parent edge per vertex.
std::vector<int> forest_bfs(const Graph& g, const std::vector<bool>& in_forest, int root,
                            int skip_edge, std::vector<bool>& reached) {
  std::vector<int> parent_edge(ix(g.vertex_count()), -1);
  reached.assign(ix(g.vertex_count()), false);
  std::deque<int> queue{root};
  reached[ix(root)] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incidence(v)) {
      if (!in_forest[ix(inc.edge)] || inc.edge == skip_edge || reached[ix(inc.neighbor)]) continue;
      reached[ix(inc.neighbor)] = true;
      parent_edge[ix(inc.neighbor)] = inc.edge;
      queue.push_back(inc.neighbor);
    }
  }
  return parent_edge;
}

}  // namespace

IntMatrix Presentation::bonds() const {
  if (!bond_columns) throw Error(ErrorKind::BadParams, "presentation has no bond/cycle split");
  return relations.column_range(0, *bond_columns);
}

IntMatrix Presentation::cycles() const {
  if (!bond_columns) throw Error(ErrorKind::BadParams, "presentation has no bond/cycle split");
  return relations.column_range(*bond_columns, relations.cols() - *bond_columns);
}

FiniteAbelianGroup Presentation::group() const { return cokernel_structure(relations); }

IntMatrix boundary_matrix(const Graph& g) { return boundary_matrix(g, canonical_orientation(g)); }

IntMatrix boundary_matrix(const Graph& g, const Orientation& orientation) {
  check_orientation(g, orientation);
  IntMatrix m(ix(g.vertex_count()), ix(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    m(ix(head(g, orientation, e)), ix(e)) = 1;
    m(ix(tail(g, orientation, e)), ix(e)) = -1;
  }
  return m;
}

BondCycleBases bond_and_cycle_bases(const Graph& g, const std::vector<int>& forest) {
  return bond_and_cycle_bases(g, forest, canonical_orientation(g));
}

BondCycleBases bond_and_cycle_bases(const Graph& g, const std::vector<int>& forest,
                                    const Orientation& orientation) {
  if (!is_spanning_forest(g, forest)) {
    throw Error(ErrorKind::NotSpanningForest, "edge set is not a spanning forest");
  }
  check_orientation(g, orientation);
  const int m = g.edge_count();
  std::vector<int> sorted = forest;
  std::sort(sorted.begin(), sorted.end());
  std::vector<bool> in_forest(ix(m), false);
  for (int e : sorted) in_forest[ix(e)] = true;

  BondCycleBases out{IntMatrix(ix(m), sorted.size()),
                     IntMatrix(ix(m), ix(m) - sorted.size())};
  std::vector<bool> side;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const int f = sorted[k];
    forest_bfs(g, in_forest, head(g, orientation, f), f, side);
    for (int e = 0; e < m; ++e) {
      const int c = int(side[ix(head(g, orientation, e))]) - int(side[ix(tail(g, orientation, e))]);
      if (c != 0) out.bonds(ix(e), k) = c;
    }
  }
  std::size_t k = 0;
  for (int e = 0; e < m; ++e) {
    if (in_forest[ix(e)]) continue;
    // e runs tail -> head; close it up along the forest path head -> tail.
    out.cycles(ix(e), k) = 1;
    const int h = head(g, orientation, e);
    std::vector<bool> reached;
    const auto parent = forest_bfs(g, in_forest, h, -1, reached);
    for (int x = tail(g, orientation, e); x != h;) {
      const int pe = parent[ix(x)];
      const int prev = g.edge(pe).other(x);
      // The walk from h reaches x through pe, traversing prev -> x.
      out.cycles(ix(pe), k) = head(g, orientation, pe) == x ? 1 : -1;
      x = prev;
    }
    ++k;
  }
  return out;
}

std::vector<int> default_omit_set(const Graph& g) {
  std::vector<int> omit;
  const auto labels = g.component_labels();
  std::vector<bool> seen;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto l = ix(labels[ix(v)]);
    if (l >= seen.size()) seen.resize(l + 1, false);
    if (!seen[l]) {
      seen[l] = true;
      omit.push_back(v);
    }
  }
  return omit;
}

IntMatrix laplacian(const Graph& g) {
  const Index n = ix(g.vertex_count());
  IntMatrix l(n, n);
  for (const auto& e : g.edges()) {
    l(ix(e.u), ix(e.v)) = -1;
    l(ix(e.v), ix(e.u)) = -1;
  }
  for (int v = 0; v < g.vertex_count(); ++v) l(ix(v), ix(v)) = g.degree(v);
  return l;
}

IntMatrix reduced_laplacian(const Graph& g) { return reduced_laplacian(g, default_omit_set(g)); }

IntMatrix reduced_laplacian(const Graph& g, const std::vector<int>& omit) {
  const auto labels = g.component_labels();
  std::vector<bool> component_hit(ix(g.component_count()), false);
  std::vector<bool> omitted(ix(g.vertex_count()), false);
  for (int v : omit) {
    if (v < 0 || v >= g.vertex_count()) throw Error(ErrorKind::BadOmitSet, "omitted vertex out of range");
    auto hit = component_hit[ix(labels[ix(v)])];
    if (hit) throw Error(ErrorKind::BadOmitSet, "two omitted vertices in one component");
    component_hit[ix(labels[ix(v)])] = true;
    omitted[ix(v)] = true;
  }
  if (omit.size() != component_hit.size()) {
    throw Error(ErrorKind::BadOmitSet, "every component needs exactly one omitted vertex");
  }
  std::vector<std::size_t> keep;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!omitted[ix(v)]) keep.push_back(ix(v));
  }
  const IntMatrix full = laplacian(g);
  IntMatrix r(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) r(i, j) = full(keep[i], keep[j]);
  }
  return r;
}

FiniteAbelianGroup critical_group(const Graph& g) {
  return cokernel_structure(reduced_laplacian(g));
}

FiniteAbelianGroup critical_group(const Graph& g, CriticalGroupRoute route) {
  switch (route) {
    case CriticalGroupRoute::ReducedLaplacian:
      return critical_group(g);
    case CriticalGroupRoute::CycleGram: {
      const IntMatrix z = bond_and_cycle_bases(g, canonical_spanning_forest(g)).cycles;
      return cokernel_structure(z.transpose() * z);
    }
    case CriticalGroupRoute::EdgeSpace:
      return edge_space_presentation(g).group();
  }
  throw Error(ErrorKind::BadParams, "unknown route");
}

BigInt spanning_forest_count(const Graph& g) { return determinant(reduced_laplacian(g)); }

Presentation edge_space_presentation(const Graph& g) {
  return edge_space_presentation(g, canonical_orientation(g), "edge-space");
}

Presentation edge_space_presentation(const Graph& g, const Orientation& orientation,
                                     std::string label) {
  const std::vector<int> forest = canonical_spanning_forest(g);
  BondCycleBases bc = bond_and_cycle_bases(g, forest, orientation);
  Presentation p;
  p.ambient_rank = ix(g.edge_count());
  p.relations = bc.bonds.hconcat(bc.cycles);
  p.label = std::move(label);
  p.bond_columns = forest.size();
  return p;
}

Presentation vertex_presentation(const Graph& g, int v0) {
  if (!g.is_connected()) throw Error(ErrorKind::NotConnected, "vertex presentation needs a connected graph");
  if (v0 < 0 || v0 >= g.vertex_count()) throw Error(ErrorKind::BadParams, "v0 out of range");
  Presentation p;
  p.ambient_rank = ix(g.vertex_count());
  IntMatrix unit(p.ambient_rank, 1);
  unit(ix(v0), 0) = 1;
  p.relations = unit.hconcat(laplacian(g));
  p.label = "vertex v0=" + std::to_string(v0);
  return p;
}

Presentation line_presentation(const Graph& g, int e0) {
  if (!g.is_connected()) throw Error(ErrorKind::NotConnected, "line presentation needs a connected graph");
  if (g.edge_count() == 0) throw Error(ErrorKind::NoEdges, "line presentation needs an edge");
  if (e0 < 0 || e0 >= g.edge_count()) throw Error(ErrorKind::BadParams, "e0 out of range");
  Presentation p;
  p.ambient_rank = ix(g.edge_count());
  IntMatrix unit(p.ambient_rank, 1);
  unit(ix(e0), 0) = 1;
  // The line-graph boundary of its vertex bonds is its Laplacian, whatever
  // the orientation.
  p.relations = unit.hconcat(laplacian(line_graph(g)));
  p.label = "line e0=" + std::to_string(e0);
  return p;
}

BigInt degree_sum_gcd(const Graph& g) {
  if (g.edge_count() == 0) throw Error(ErrorKind::NoEdges, "degree sums need an edge");
  BigInt acc = 0;
  for (const auto& e : g.edges()) acc = gcd(acc, BigInt(g.degree(e.u) + g.degree(e.v)));
  return acc;
}

unsigned long k_of_p(const Graph& g, const BigInt& p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, p.get_str() + " is not prime");
  return valuation(degree_sum_gcd(g), p);
}

bool has_even_cycle(const Graph& g) {
  // A block other than a bridge or an odd cycle holds a theta subgraph,
  // hence an even cycle; otherwise two odd cycle blocks in one component
  // give the even closed walk.
  const auto labels = g.component_labels();
  std::map<int, int> odd_blocks;
  for (const auto& block : blocks(g)) {
    if (block.size() == 1) continue;
    std::set<int> verts;
    for (int e : block) {
      verts.insert(g.edge(e).u);
      verts.insert(g.edge(e).v);
    }
    const bool is_cycle = verts.size() == block.size();
    if (!is_cycle || block.size() % 2 == 0) return true;
    if (++odd_blocks[labels[ix(g.edge(block.front()).u)]] >= 2) return true;
  }
  return false;
}

bool has_even_cycle_bruteforce(const Graph& g) {
  if (g.edge_count() > 64) throw Error(ErrorKind::TooLarge, "brute-force cycle search is for small graphs");
  const auto labels = g.component_labels();
  std::set<std::uint64_t> odd_cycles;
  std::map<int, int> odd_per_component;
  bool even = false;

  // Simple cycles through their smallest vertex s, found as paths that
  // return to s; each cycle shows up once per direction.
  for (int s = 0; s < g.vertex_count() && !even; ++s) {
    std::vector<bool> on_path(ix(g.vertex_count()), false);
    std::vector<int> path_edges;
    auto extend = [&](auto&& self, int v) -> void {
      for (const auto& inc : g.incidence(v)) {
        if (even) return;
        const int w = inc.neighbor;
        if (w == s && path_edges.size() >= 2 && inc.edge != path_edges.back()) {
          std::uint64_t mask = std::uint64_t{1} << inc.edge;
          for (int e : path_edges) mask |= std::uint64_t{1} << e;
          const std::size_t len = path_edges.size() + 1;
          if (len % 2 == 0) {
            even = true;
          } else if (odd_cycles.insert(mask).second) {
            ++odd_per_component[labels[ix(s)]];
          }
          continue;
        }
        if (w <= s || on_path[ix(w)]) continue;
        on_path[ix(w)] = true;
        path_edges.push_back(inc.edge);
        self(self, w);
        path_edges.pop_back();
        on_path[ix(w)] = false;
      }
    };
    on_path[ix(s)] = true;
    extend(extend, s);
  }
  if (even) return true;
  return std::any_of(odd_per_component.begin(), odd_per_component.end(),
                     [](const auto& kv) { return kv.second >= 2; });
}

}  // namespace critgroup
