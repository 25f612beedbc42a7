#pragma once

#include <string>

#include "critgroup/abelian_group.hpp"
#include "critgroup/critical_group.hpp"
#include "critgroup/graph.hpp"
#include "critgroup/int_matrix.hpp"

namespace critgroup {

/// Integer map between the edge spaces of two graphs, meant to descend to a
/// homomorphism of critical groups. `matrix` is target-rank x source-rank.
struct LatticeMorphism {
  std::string name;
  IntMatrix matrix;
  Presentation source;
  Presentation target;
};

/// h : sd G -> G. Each half-edge maps to its parent edge; sd G carries the
/// along-the-parent orientation, so every nonzero entry is +1.
LatticeMorphism morphism_h(const Graph& g);

/// f : L G -> sd G, (uv, vw) |-> (uv, v) + (v, vw).
/// Built for connected d-regular g with d >= 2.
/// Throws Error(NotConnected), Error(NotRegular), Error(DegreeTooSmall).
LatticeMorphism morphism_f(const Graph& g);

/// g : L G -> G for connected (d1, d2)-semiregular bipartite g:
/// a line edge through a vertex of degree d maps to
/// (lcm(d1, d2) / d) * (sum of the two directed G-edges through it).
/// Throws Error(NotConnected), Error(NotSemiregularBipartite).
LatticeMorphism morphism_g(const Graph& g);

/// The adjoint map between the same two decompositions, reversed.
LatticeMorphism transpose(const LatticeMorphism& m);

/// Composite second o first (first.target must be second.source).
LatticeMorphism compose(const LatticeMorphism& second, const LatticeMorphism& first);

/// m(Z_source) in Z_target and m^t(Z_target) in Z_source, by lattice
/// membership of every basis column.
bool verify_morphism(const LatticeMorphism& m);

/// K_target / image. Throws Error(MorphismInvalid).
FiniteAbelianGroup induced_cokernel(const LatticeMorphism& m);

/// Kernel of the induced map, as the preimage lattice {x : m x in R_target}
/// modulo R_source. Throws Error(MorphismInvalid).
FiniteAbelianGroup induced_kernel(const LatticeMorphism& m);

/// Whether the induced homomorphism is zero.
bool induced_map_is_zero(const LatticeMorphism& m);

struct KernelCokernelReport {
  FiniteAbelianGroup kernel;
  FiniteAbelianGroup cokernel;
  BigInt source_order;
  BigInt target_order;
  /// |kernel| * |target| == |source| * |cokernel|.
  bool order_identity_holds = false;
};

KernelCokernelReport kernel_cokernel_report(const LatticeMorphism& m);

/// For every standard basis vector e of the source, (m^t m - c) e lies in
/// the source relations, and for every one of the target, (m m^t - c) e lies
/// in the target relations.
bool scaling_check(const LatticeMorphism& m, const BigInt& c);

/// Scaling by d for f on a connected d-regular graph.
bool scaling_check_f(const Graph& g);
/// Scaling by ((d1 + d2) / gcd) * lcm for g on a semiregular bipartite graph,
/// on both K(L G) and K(G).
bool scaling_check_g(const Graph& g);

/// Scaling constant ((d1 + d2) / gcd(d1, d2)) * lcm(d1, d2).
BigInt semiregular_scale(int d1, int d2);

/// Columns spanning the cycle lattice of L G: one global cycle L C per
/// fundamental cycle C of g, then triangles (e_a, e_b, e_c) of every local
/// clique with a the first edge at the vertex. Throws Error(NotConnected).
IntMatrix line_cycle_generators(const Graph& g);

/// Each fundamental cycle of L G is an integer combination of
/// line_cycle_generators(g).
bool line_cycle_generators_span(const Graph& g);

}  // namespace critgroup
