#include "critgroup/decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "critgroup/error.hpp"

namespace critgroup {
namespace {

using Index = std::size_t;
inline Index ix(int i) { return static_cast<Index>(i); }

// Lowpoint DFS shared by bridge and block detection.
class LowpointDfs {
 public:
  explicit LowpointDfs(const Graph& g)
      : g_(g), disc_(ix(g.vertex_count()), -1), low_(ix(g.vertex_count()), 0) {
    for (int s = 0; s < g.vertex_count(); ++s) {
      if (disc_[ix(s)] < 0) visit(s, -1);
    }
  }

  std::vector<int> bridges;
  std::vector<std::vector<int>> blocks;

 private:
  void visit(int v, int parent_edge) {
    disc_[ix(v)] = low_[ix(v)] = timer_++;
    for (const auto& inc : g_.incidence(v)) {
      if (inc.edge == parent_edge) continue;
      const int w = inc.neighbor;
      if (disc_[ix(w)] < 0) {
        stack_.push_back(inc.edge);
        visit(w, inc.edge);
        low_[ix(v)] = std::min(low_[ix(v)], low_[ix(w)]);
        if (low_[ix(w)] > disc_[ix(v)]) bridges.push_back(inc.edge);
        if (low_[ix(w)] >= disc_[ix(v)]) {
          std::vector<int> block;
          int e;
          do {
            e = stack_.back();
            stack_.pop_back();
            block.push_back(e);
          } while (e != inc.edge);
          std::sort(block.begin(), block.end());
          blocks.push_back(std::move(block));
        }
      } else if (disc_[ix(w)] < disc_[ix(v)]) {
        stack_.push_back(inc.edge);
        low_[ix(v)] = std::min(low_[ix(v)], disc_[ix(w)]);
      }
    }
  }

  const Graph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  std::vector<int> stack_;
  int timer_ = 0;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(ix(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[ix(x)] != x) x = parent[ix(x)] = parent[ix(parent[ix(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[ix(b)] = a;
    return true;
  }
};

}  // namespace

std::vector<int> bridges(const Graph& g) {
  auto b = LowpointDfs(g).bridges;
  std::sort(b.begin(), b.end());
  return b;
}

bool is_two_edge_connected(const Graph& g) {
  return g.vertex_count() >= 2 && g.is_connected() && bridges(g).empty();
}

std::vector<std::vector<int>> blocks(const Graph& g) {
  auto b = LowpointDfs(g).blocks;
  std::sort(b.begin(), b.end());
  return b;
}

std::vector<int> canonical_spanning_forest(const Graph& g) {
  UnionFind uf(g.vertex_count());
  std::vector<int> forest;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (uf.unite(g.edge(i).u, g.edge(i).v)) forest.push_back(i);
  }
  return forest;
}

bool is_spanning_forest(const Graph& g, const std::vector<int>& edges) {
  UnionFind uf(g.vertex_count());
  std::vector<bool> seen(ix(g.edge_count()), false);
  for (int e : edges) {
    if (e < 0 || e >= g.edge_count() || seen[ix(e)]) return false;
    seen[ix(e)] = true;
    if (!uf.unite(g.edge(e).u, g.edge(e).v)) return false;
  }
  return static_cast<int>(edges.size()) == g.vertex_count() - g.component_count();
}

bool is_spanning_tree(const Graph& g, const std::vector<int>& edges) {
  return g.is_connected() && is_spanning_forest(g, edges);
}

std::optional<EarDecomposition> ear_decomposition(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorKind::NotConnected, "ear decomposition needs a connected graph");
  if (!is_two_edge_connected(g)) return std::nullopt;

  // DFS tree from vertex 0.
  const int n = g.vertex_count();
  std::vector<int> order;
  std::vector<int> depth(ix(n), -1);
  std::vector<int> parent_edge(ix(n), -1);
  std::vector<std::pair<int, std::size_t>> stack{{0, 0}};
  depth[0] = 0;
  order.push_back(0);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& inc = g.incidence(v);
    if (next == inc.size()) {
      stack.pop_back();
      continue;
    }
    const Incidence step = inc[next++];
    if (depth[ix(step.neighbor)] >= 0) continue;
    depth[ix(step.neighbor)] = depth[ix(v)] + 1;
    parent_edge[ix(step.neighbor)] = step.edge;
    order.push_back(step.neighbor);
    stack.emplace_back(step.neighbor, 0);
  }

  // Chain decomposition: for each vertex in preorder, each back edge down to
  // a descendant starts a chain that climbs the tree to a visited vertex.
  std::vector<bool> visited(ix(n), false);
  EarDecomposition d;
  for (int v : order) {
    for (const auto& inc : g.incidence(v)) {
      const int w = inc.neighbor;
      if (inc.edge == parent_edge[ix(w)] || inc.edge == parent_edge[ix(v)]) continue;
      if (depth[ix(w)] <= depth[ix(v)]) continue;
      visited[ix(v)] = true;
      Ear ear;
      ear.vertices = {v};
      ear.edges = {inc.edge};
      int x = w;
      while (!visited[ix(x)]) {
        visited[ix(x)] = true;
        ear.vertices.push_back(x);
        ear.edges.push_back(parent_edge[ix(x)]);
        x = g.edge(parent_edge[ix(x)]).other(x);
      }
      ear.vertices.push_back(x);
      ear.closed = x == v;
      d.ears.push_back(std::move(ear));
    }
  }
  return d;
}

bool verify_ear_decomposition(const Graph& g, const EarDecomposition& d) {
  if (d.ears.empty()) return false;
  std::vector<bool> vused(ix(g.vertex_count()), false);
  std::vector<bool> eused(ix(g.edge_count()), false);
  for (std::size_t k = 0; k < d.ears.size(); ++k) {
    const Ear& ear = d.ears[k];
    const std::size_t len = ear.edges.size();
    if (len == 0 || ear.vertices.size() != len + 1) return false;
    for (int v : ear.vertices) {
      if (v < 0 || v >= g.vertex_count()) return false;
    }
    for (std::size_t i = 0; i < len; ++i) {
      const int e = ear.edges[i];
      if (e < 0 || e >= g.edge_count() || eused[ix(e)]) return false;
      const Edge& ed = g.edge(e);
      if (!ed.has(ear.vertices[i]) || ed.other(ear.vertices[i]) != ear.vertices[i + 1]) return false;
      eused[ix(e)] = true;
    }
    const bool closed = ear.vertices.front() == ear.vertices.back();
    if (closed != ear.closed) return false;
    if (closed && len < 3) return false;
    if (k == 0) {
      if (!closed) return false;
      for (std::size_t i = 0; i < len; ++i) {
        if (vused[ix(ear.vertices[i])]) return false;
        vused[ix(ear.vertices[i])] = true;
      }
      continue;
    }
    if (!vused[ix(ear.vertices.front())] || !vused[ix(ear.vertices.back())]) return false;
    for (std::size_t i = 1; i < len; ++i) {
      if (vused[ix(ear.vertices[i])]) return false;
      vused[ix(ear.vertices[i])] = true;
    }
  }
  return std::all_of(vused.begin(), vused.end(), [](bool b) { return b; }) &&
         std::all_of(eused.begin(), eused.end(), [](bool b) { return b; });
}

AbsorptionOrder absorption_order(const Graph& g) {
  if (!g.is_connected() || !is_two_edge_connected(g)) {
    throw Error(ErrorKind::NotTwoEdgeConnected, "absorption order needs a 2-edge-connected graph");
  }
  const EarDecomposition d = *ear_decomposition(g);
  AbsorptionOrder a;

  // Base cycle: (v_0, e_0, ..., v_{L-1}); every cycle edge but the last is in T.
  const Ear& base = d.ears.front();
  const std::size_t cycle_len = base.edges.size();
  for (std::size_t i = 0; i < cycle_len; ++i) {
    a.order.push_back(OrderItem::vertex(base.vertices[i]));
    if (i + 1 < cycle_len) {
      a.order.push_back(OrderItem::edge(base.edges[i]));
      a.tree.push_back(base.edges[i]);
    }
  }

  auto position = [&](int v) {
    auto it = std::find(a.order.begin(), a.order.end(), OrderItem::vertex(v));
    return static_cast<std::size_t>(it - a.order.begin());
  };

  for (std::size_t k = 1; k < d.ears.size(); ++k) {
    Ear ear = d.ears[k];
    if (position(ear.vertices.back()) < position(ear.vertices.front())) {
      std::reverse(ear.vertices.begin(), ear.vertices.end());
      std::reverse(ear.edges.begin(), ear.edges.end());
    }
    // (u_2, e_2, ..., u_l, e_l) in the ear's own labelling.
    std::vector<OrderItem> piece;
    for (std::size_t i = 1; i < ear.edges.size(); ++i) {
      piece.push_back(OrderItem::vertex(ear.vertices[i]));
      piece.push_back(OrderItem::edge(ear.edges[i]));
      a.tree.push_back(ear.edges[i]);
    }
    if (piece.empty()) continue;
    const int v = ear.vertices.front();
    std::size_t at;
    if (v == a.first_vertex()) {
      // A closed ear at v_0 takes over the start; an open one goes after e_0
      // so the order still opens with v_0 and its leaf edge.
      at = ear.closed ? 0 : 2;
    } else {
      at = position(v) + 1;
    }
    a.order.insert(a.order.begin() + static_cast<std::ptrdiff_t>(at), piece.begin(), piece.end());
  }
  std::sort(a.tree.begin(), a.tree.end());
  return a;
}

bool verify_absorption_order(const Graph& g, const AbsorptionOrder& a) {
  if (!is_spanning_tree(g, a.tree)) {
    throw Error(ErrorKind::NotSpanningTree, "absorption order tree is not a spanning tree");
  }
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<bool> in_tree(ix(m), false);
  for (int e : a.tree) in_tree[ix(e)] = true;

  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> vpos(ix(n), kAbsent);
  std::vector<std::size_t> epos(ix(m), kAbsent);
  for (std::size_t p = 0; p < a.order.size(); ++p) {
    const OrderItem& item = a.order[p];
    if (item.is_vertex()) {
      if (item.index < 0 || item.index >= n || vpos[ix(item.index)] != kAbsent) return false;
      vpos[ix(item.index)] = p;
    } else {
      if (item.index < 0 || item.index >= m || !in_tree[ix(item.index)] ||
          epos[ix(item.index)] != kAbsent) {
        return false;
      }
      epos[ix(item.index)] = p;
    }
  }
  if (a.order.size() != ix(n) + a.tree.size()) return false;

  // (i)
  if (a.order.size() < 2 || !a.order[0].is_vertex() || a.order[1].is_vertex()) return false;
  const int v0 = a.order[0].index;
  const int e0 = a.order[1].index;
  if (!g.edge(e0).has(v0)) return false;
  for (const auto& inc : g.incidence(v0)) {
    if (inc.edge != e0 && in_tree[ix(inc.edge)]) return false;
  }
  auto before = [&](int e, std::size_t p) { return !in_tree[ix(e)] || epos[ix(e)] < p; };
  // (ii)
  for (int v = 0; v < n; ++v) {
    if (v == v0) continue;
    const std::size_t p = vpos[ix(v)];
    bool ok = false;
    for (const auto& inc : g.incidence(v)) {
      if (vpos[ix(inc.neighbor)] < p && before(inc.edge, p)) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  // (iii)
  for (int e : a.tree) {
    if (e == e0) continue;
    const std::size_t p = epos[ix(e)];
    bool ok = false;
    for (int v : {g.edge(e).u, g.edge(e).v}) {
      if (vpos[ix(v)] >= p) continue;
      bool all = true;
      for (const auto& inc : g.incidence(v)) {
        if (inc.edge != e && !before(inc.edge, p)) all = false;
      }
      if (all) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

Orientation bipartite_tree_orientation(const Graph& g, const std::vector<int>& tree) {
  if (!is_spanning_tree(g, tree)) throw Error(ErrorKind::NotSpanningTree, "edge set is not a spanning tree");
  const int n = g.vertex_count();
  std::vector<bool> in_tree(ix(g.edge_count()), false);
  for (int e : tree) in_tree[ix(e)] = true;
  std::vector<int> color(ix(n), -1);
  std::vector<int> stack;
  if (n > 0) {
    color[0] = 0;
    stack.push_back(0);
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& inc : g.incidence(v)) {
      if (!in_tree[ix(inc.edge)] || color[ix(inc.neighbor)] >= 0) continue;
      color[ix(inc.neighbor)] = 1 - color[ix(v)];
      stack.push_back(inc.neighbor);
    }
  }
  Orientation o = canonical_orientation(g);
  for (int e : tree) o[ix(e)] = color[ix(g.edge(e).u)] == 0 ? 1 : -1;
  return o;
}

bool is_bipartite_on_tree(const Graph& g, const std::vector<int>& tree,
                          const Orientation& orientation) {
  std::vector<bool> in_tree(ix(g.edge_count()), false);
  for (int e : tree) in_tree[ix(e)] = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int seen = 0;  // +1 all into v, -1 all out of v
    for (const auto& inc : g.incidence(v)) {
      if (!in_tree[ix(inc.edge)]) continue;
      const Edge& e = g.edge(inc.edge);
      const int head = orientation[ix(inc.edge)] > 0 ? e.v : e.u;
      const int dir = head == v ? 1 : -1;
      if (seen != 0 && seen != dir) return false;
      seen = dir;
    }
  }
  return true;
}

}  // namespace critgroup
