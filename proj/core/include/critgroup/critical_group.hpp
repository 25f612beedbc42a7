#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critgroup/abelian_group.hpp"
#include "critgroup/graph.hpp"
#include "critgroup/int_matrix.hpp"

namespace critgroup {

/// A finite abelian group written as Z^m modulo the column span of
/// `relations`.
///
/// Edge-space presentations keep their bond basis in the first
/// `bond_columns` columns and their cycle basis in the rest, which is what
/// the morphism checks need. Other presentations leave it unset.
struct Presentation {
  std::size_t ambient_rank = 0;
  IntMatrix relations;
  std::string label;
  std::optional<std::size_t> bond_columns;

  IntMatrix bonds() const;
  IntMatrix cycles() const;

  /// cokernel_structure(relations).
  FiniteAbelianGroup group() const;
};

/// |V| x |E| boundary map; column e has +1 at its head and -1 at its tail
/// under the given orientation (canonical when omitted).
IntMatrix boundary_matrix(const Graph& g);
IntMatrix boundary_matrix(const Graph& g, const Orientation& orientation);

struct BondCycleBases {
  IntMatrix bonds;   ///< |E| x |forest|: signed cut vector per forest edge.
  IntMatrix cycles;  ///< |E| x (|E| - |forest|): fundamental cycle per other edge.
};

/// Throws Error(NotSpanningForest).
BondCycleBases bond_and_cycle_bases(const Graph& g, const std::vector<int>& forest);
BondCycleBases bond_and_cycle_bases(const Graph& g, const std::vector<int>& forest,
                                    const Orientation& orientation);

/// The smallest vertex of each connected component.
std::vector<int> default_omit_set(const Graph& g);

/// Laplacian with the rows and columns of `omit` deleted (one vertex per
/// component). Throws Error(BadOmitSet).
IntMatrix reduced_laplacian(const Graph& g, const std::vector<int>& omit);
IntMatrix reduced_laplacian(const Graph& g);

/// Full |V| x |V| Laplacian.
IntMatrix laplacian(const Graph& g);

/// K(G) from the reduced Laplacian; disconnected graphs are allowed.
FiniteAbelianGroup critical_group(const Graph& g);

enum class CriticalGroupRoute {
  ReducedLaplacian,  ///< coker of the bond Gram matrix.
  CycleGram,         ///< coker of M_Z^t M_Z.
  EdgeSpace,         ///< coker of [M_B | M_Z].
};

FiniteAbelianGroup critical_group(const Graph& g, CriticalGroupRoute route);

/// Number of spanning forests, as det of the reduced Laplacian.
BigInt spanning_forest_count(const Graph& g);

/// Z^E / (B + Z) with bases from the canonical spanning forest.
Presentation edge_space_presentation(const Graph& g);
Presentation edge_space_presentation(const Graph& g, const Orientation& orientation,
                                     std::string label);

/// Z^V / (Z v0 + image of the Laplacian). Throws Error(NotConnected).
Presentation vertex_presentation(const Graph& g, int v0);

/// Z^E / (Z e0 + Laplacian of the line graph), a presentation of K(L G) on
/// the edge set of g. Throws Error(NotConnected) or Error(NoEdges).
Presentation line_presentation(const Graph& g, int e0);

/// gcd of deg(v) + deg(w) over all edges. Throws Error(NoEdges).
BigInt degree_sum_gcd(const Graph& g);

/// p-adic valuation of degree_sum_gcd. Throws Error(NotPrime), Error(NoEdges).
unsigned long k_of_p(const Graph& g, const BigInt& p);

/// Whether some component contains a closed walk of even length that is a
/// cycle or two odd cycles joined by a path: some block holds an even simple
/// cycle, or a component holds at least two odd cycles.
bool has_even_cycle(const Graph& g);

/// Same predicate by enumerating simple cycles; exponential, for small
/// graphs only.
bool has_even_cycle_bruteforce(const Graph& g);

}  // namespace critgroup
