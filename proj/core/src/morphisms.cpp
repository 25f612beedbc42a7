#include "critgroup/morphisms.hpp"

#include <algorithm>

#include "critgroup/decomposition.hpp"
#include "critgroup/error.hpp"
#include "critgroup/lattice.hpp"
#include "critgroup/smith.hpp"
#include "critgroup/transforms.hpp"

namespace critgroup {
namespace {

using Index = std::size_t;
inline Index ix(int i) { return static_cast<Index>(i); }

Presentation sd_presentation(const Graph& g) {
  return edge_space_presentation(subdivision(g), subdivision_along_orientation(g),
                                 "edge-space sd");
}

Presentation line_edge_presentation(const Graph& lg) {
  return edge_space_presentation(lg, canonical_orientation(lg), "edge-space line");
}

// Sign of the G-edge `e` traversed into w (x -> w) or out of w (w -> y)
// relative to its canonical low -> high direction.
int into(const Edge& e, int w) { return e.v == w ? 1 : -1; }
int out_of(const Edge& e, int w) { return e.u == w ? 1 : -1; }

// The induced map written in Smith coordinates of both groups:
// source = sum Z_{a_i}, target = sum Z_{d_j}, and phi the matrix between them.
struct CoordinateMap {
  CokernelCoordinates source;
  CokernelCoordinates target;
  IntMatrix phi;

  // [phi | diag(d)]
  IntMatrix with_target_relations() const {
    return phi.hconcat(IntMatrix::diagonal(target.moduli));
  }
};

CoordinateMap coordinate_map(const LatticeMorphism& m) {
  CoordinateMap c{cokernel_coordinates(m.source.relations),
                  cokernel_coordinates(m.target.relations), {}};
  c.phi = c.target.to_coords * (m.matrix * c.source.from_coords);
  for (std::size_t i = 0; i < c.phi.rows(); ++i) {
    for (std::size_t j = 0; j < c.phi.cols(); ++j) {
      mpz_fdiv_r(c.phi(i, j).get_mpz_t(), c.phi(i, j).get_mpz_t(),
                 c.target.moduli[i].get_mpz_t());
    }
  }
  return c;
}

void require_valid(const LatticeMorphism& m) {
  if (!verify_morphism(m)) {
    throw Error(ErrorKind::MorphismInvalid, m.name + " does not respect the decompositions");
  }
}

FiniteAbelianGroup cokernel_of(const CoordinateMap& c) {
  if (c.target.moduli.empty()) return {};
  return cokernel_structure(c.with_target_relations());
}

FiniteAbelianGroup kernel_of(const CoordinateMap& c) {
  const std::size_t r1 = c.source.moduli.size();
  if (r1 == 0) return {};
  const IntMatrix source_relations = IntMatrix::diagonal(c.source.moduli);
  if (c.target.moduli.empty()) return cokernel_structure(source_relations);
  const IntMatrix k = kernel_lattice(c.with_target_relations());
  return lattice_quotient(k.row_range(0, r1), source_relations);
}

void require_regular(const Graph& g, int min_degree) {
  const RegularityClass rc = classify_regularity(g);
  if (!rc.is_regular()) throw Error(ErrorKind::NotRegular, "graph is not regular");
  if (rc.d1 < min_degree) {
    throw Error(ErrorKind::DegreeTooSmall, "degree " + std::to_string(rc.d1) + " < " +
                                               std::to_string(min_degree));
  }
}

}  // namespace

LatticeMorphism morphism_h(const Graph& g) {
  const Graph sd = subdivision(g);
  LatticeMorphism m{"h", IntMatrix(ix(g.edge_count()), ix(sd.edge_count())), sd_presentation(g),
                    edge_space_presentation(g)};
  for (int k = 0; k < sd.edge_count(); ++k) {
    m.matrix(ix(sd.edge(k).v - g.vertex_count()), ix(k)) = 1;
  }
  return m;
}

LatticeMorphism morphism_f(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorKind::NotConnected, "f needs a connected graph");
  require_regular(g, 2);
  const Graph sd = subdivision(g);
  const LineGraph lg = line_graph_with_junctions(g);
  LatticeMorphism m{"f", IntMatrix(ix(sd.edge_count()), ix(lg.graph.edge_count())),
                    line_edge_presentation(lg.graph), sd_presentation(g)};
  const int n = g.vertex_count();
  for (int k = 0; k < lg.graph.edge_count(); ++k) {
    const int i = lg.graph.edge(k).u;
    const int j = lg.graph.edge(k).v;
    const int w = lg.junction[ix(k)];
    // (e_i, e_j) |-> (e_i, w) + (w, e_j) in sd G
    m.matrix(ix(*sd.find_edge(w, n + i)), ix(k)) = into(g.edge(i), w);
    m.matrix(ix(*sd.find_edge(w, n + j)), ix(k)) = out_of(g.edge(j), w);
  }
  return m;
}

LatticeMorphism morphism_g(const Graph& g) {
  const RegularityClass rc = semiregular_bipartite_view(g);
  const BigInt lambda = lcm(BigInt(rc.d1), BigInt(rc.d2));
  const LineGraph lg = line_graph_with_junctions(g);
  LatticeMorphism m{"g", IntMatrix(ix(g.edge_count()), ix(lg.graph.edge_count())),
                    line_edge_presentation(lg.graph), edge_space_presentation(g)};
  for (int k = 0; k < lg.graph.edge_count(); ++k) {
    const int i = lg.graph.edge(k).u;
    const int j = lg.graph.edge(k).v;
    const int w = lg.junction[ix(k)];
    const BigInt c = lambda / g.degree(w);
    if (c * g.degree(w) != lambda) throw Error(ErrorKind::MorphismInvalid, "non-integral g entry");
    m.matrix(ix(i), ix(k)) = c * into(g.edge(i), w);
    m.matrix(ix(j), ix(k)) = c * out_of(g.edge(j), w);
  }
  return m;
}

LatticeMorphism transpose(const LatticeMorphism& m) {
  return {m.name + "^t", m.matrix.transpose(), m.target, m.source};
}

LatticeMorphism compose(const LatticeMorphism& second, const LatticeMorphism& first) {
  if (first.target.ambient_rank != second.source.ambient_rank) {
    throw Error(ErrorKind::DimensionMismatch, "cannot compose " + second.name + " after " + first.name);
  }
  return {second.name + "." + first.name, second.matrix * first.matrix, first.source,
          second.target};
}

bool verify_morphism(const LatticeMorphism& m) {
  if (m.matrix.rows() != m.target.ambient_rank || m.matrix.cols() != m.source.ambient_rank) {
    return false;
  }
  const IntMatrix z1 = m.source.cycles();
  const IntMatrix z2 = m.target.cycles();
  return LatticeSolver(z2).contains_columns(m.matrix * z1) &&
         LatticeSolver(z1).contains_columns(m.matrix.transpose() * z2);
}

FiniteAbelianGroup induced_cokernel(const LatticeMorphism& m) {
  require_valid(m);
  return cokernel_of(coordinate_map(m));
}

FiniteAbelianGroup induced_kernel(const LatticeMorphism& m) {
  require_valid(m);
  return kernel_of(coordinate_map(m));
}

bool induced_map_is_zero(const LatticeMorphism& m) {
  require_valid(m);
  return coordinate_map(m).phi.is_zero();
}

KernelCokernelReport kernel_cokernel_report(const LatticeMorphism& m) {
  require_valid(m);
  const CoordinateMap c = coordinate_map(m);
  KernelCokernelReport r;
  r.kernel = kernel_of(c);
  r.cokernel = cokernel_of(c);
  r.source_order = c.source.group().order();
  r.target_order = c.target.group().order();
  r.order_identity_holds =
      r.kernel.order() * r.target_order == r.source_order * r.cokernel.order();
  return r;
}

bool scaling_check(const LatticeMorphism& m, const BigInt& c) {
  auto scaled_by = [&c](const IntMatrix& product, const Presentation& p) {
    const CokernelCoordinates coords = cokernel_coordinates(p.relations);
    IntMatrix diff = product - c * IntMatrix::identity(product.rows());
    for (std::size_t k = 0; k < diff.cols(); ++k) {
      if (!coords.is_relation(diff.column(k))) return false;
    }
    return true;
  };
  const IntMatrix mt = m.matrix.transpose();
  return scaled_by(mt * m.matrix, m.source) && scaled_by(m.matrix * mt, m.target);
}

bool scaling_check_f(const Graph& g) {
  const LatticeMorphism f = morphism_f(g);
  require_valid(f);
  return scaling_check(f, BigInt(g.degree(0)));
}

BigInt semiregular_scale(int d1, int d2) {
  const BigInt a(d1);
  const BigInt b(d2);
  return (a + b) / gcd(a, b) * lcm(a, b);
}

bool scaling_check_g(const Graph& g) {
  const RegularityClass rc = semiregular_bipartite_view(g);
  const LatticeMorphism m = morphism_g(g);
  require_valid(m);
  return scaling_check(m, semiregular_scale(rc.d1, rc.d2));
}

IntMatrix line_cycle_generators(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorKind::NotConnected, "line cycles need a connected graph");
  const Graph lg = line_graph(g);
  const Index rows = ix(lg.edge_count());
  std::vector<IntVector> cols;

  // Walk e_a -> e_b in the line graph, signed against its i -> j orientation.
  auto step = [&](IntVector& z, int a, int b) {
    const int k = *lg.find_edge(a, b);
    z[ix(k)] += a < b ? 1 : -1;
  };

  const std::vector<int> forest = canonical_spanning_forest(g);
  std::vector<bool> in_forest(ix(g.edge_count()), false);
  for (int e : forest) in_forest[ix(e)] = true;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (in_forest[ix(e)]) continue;
    // Forest path from v back to u, then e closes the cycle.
    const Edge& ed = g.edge(e);
    std::vector<int> parent(ix(g.vertex_count()), -1);
    std::vector<bool> seen(ix(g.vertex_count()), false);
    std::vector<int> stack{ed.v};
    seen[ix(ed.v)] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incidence(x)) {
        if (!in_forest[ix(inc.edge)] || seen[ix(inc.neighbor)]) continue;
        seen[ix(inc.neighbor)] = true;
        parent[ix(inc.neighbor)] = inc.edge;
        stack.push_back(inc.neighbor);
      }
    }
    std::vector<int> walk{e};  // edges in cyclic order: e, then u -> ... -> v
    for (int x = ed.u; x != ed.v; x = g.edge(parent[ix(x)]).other(x)) {
      walk.push_back(parent[ix(x)]);
    }
    IntVector z(rows);
    for (std::size_t a = 0; a < walk.size(); ++a) step(z, walk[a], walk[(a + 1) % walk.size()]);
    cols.push_back(std::move(z));
  }

  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> at;
    for (const auto& inc : g.incidence(v)) at.push_back(inc.edge);
    std::sort(at.begin(), at.end());
    for (std::size_t b = 1; b < at.size(); ++b) {
      for (std::size_t c = b + 1; c < at.size(); ++c) {
        IntVector z(rows);
        step(z, at[0], at[b]);
        step(z, at[b], at[c]);
        step(z, at[c], at[0]);
        cols.push_back(std::move(z));
      }
    }
  }
  return IntMatrix::from_columns(rows, cols);
}

bool line_cycle_generators_span(const Graph& g) {
  const Graph lg = line_graph(g);
  const IntMatrix gens = line_cycle_generators(g);
  if (!(boundary_matrix(lg) * gens).is_zero()) return false;
  const IntMatrix z = bond_and_cycle_bases(lg, canonical_spanning_forest(lg)).cycles;
  return LatticeSolver(gens).contains_columns(z);
}

}  // namespace critgroup
