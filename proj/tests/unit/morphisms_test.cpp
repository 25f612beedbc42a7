#include <gtest/gtest.h>

#include "critgroup/error.hpp"
#include "critgroup/families.hpp"
#include "critgroup/lattice.hpp"
#include "critgroup/morphisms.hpp"
#include "critgroup/smith.hpp"
#include "critgroup/transforms.hpp"
#include "test_graphs.hpp"

using namespace critgroup;

namespace {

// ker of the induced map built literally in Z^source:
// {x : m x in R_target} / R_source.
FiniteAbelianGroup literal_kernel(const LatticeMorphism& m) {
  const IntMatrix& rt = m.target.relations;
  IntMatrix stacked = m.matrix.hconcat((BigInt(-1) * rt));
  const IntMatrix k = kernel_lattice(stacked);
  const IntMatrix preimage = k.row_range(0, m.matrix.cols());
  return lattice_quotient(preimage, m.source.relations);
}

// coker built literally: Z^target / (R_target + image).
FiniteAbelianGroup literal_cokernel(const LatticeMorphism& m) {
  return cokernel_structure(m.target.relations.hconcat(m.matrix));
}

}  // namespace

TEST(Morphisms, AllThreeAreMorphisms) {
  for (const auto& g : critgroup::testing::regular_test_set(5)) {
    EXPECT_TRUE(verify_morphism(morphism_h(g.graph))) << g.name;
    EXPECT_TRUE(verify_morphism(morphism_f(g.graph))) << g.name;
  }
  for (const auto& g : critgroup::testing::semiregular_test_set(5)) {
    EXPECT_TRUE(verify_morphism(morphism_g(g.graph))) << g.name;
  }
  EXPECT_TRUE(verify_morphism(morphism_f(cycle_graph(5))));
}

TEST(Morphisms, HIsSurjectiveWithKnownKernel) {
  // h: K(sd G) -> K(G) is onto; its kernel has order 2^beta.
  for (const char* spec : {"complete:4", "petersen", "cube:3", "complete-bipartite:2,3"}) {
    const Graph g = generate_from_spec(spec);
    const KernelCokernelReport r = kernel_cokernel_report(morphism_h(g));
    EXPECT_TRUE(r.cokernel.is_trivial()) << spec;
    EXPECT_EQ(r.kernel.order(), pow(BigInt(2), static_cast<unsigned long>(beta(g)))) << spec;
    EXPECT_TRUE(r.order_identity_holds);
  }
}

TEST(Morphisms, CoordinateKernelMatchesLiteralConstruction) {
  for (const auto& g : critgroup::testing::regular_test_set(5)) {
    const LatticeMorphism f = morphism_f(g.graph);
    EXPECT_EQ(induced_kernel(f), literal_kernel(f)) << g.name;
    EXPECT_EQ(induced_cokernel(f), literal_cokernel(f)) << g.name;
  }
  for (const char* spec : {"complete-bipartite:2,3", "complete-bipartite:3,3", "cube:3"}) {
    const LatticeMorphism m = morphism_g(generate_from_spec(spec));
    EXPECT_EQ(induced_kernel(m), literal_kernel(m)) << spec;
    EXPECT_EQ(induced_cokernel(m), literal_cokernel(m)) << spec;
  }
}

TEST(Morphisms, DualityKernelOfTransposeIsCokernel) {
  for (const auto& g : critgroup::testing::regular_test_set(5)) {
    const LatticeMorphism f = morphism_f(g.graph);
    EXPECT_EQ(induced_kernel(f), induced_cokernel(transpose(f))) << g.name;
    EXPECT_EQ(induced_cokernel(f), induced_kernel(transpose(f))) << g.name;
  }
}

TEST(Morphisms, Scaling) {
  for (const auto& g : critgroup::testing::regular_test_set(5)) {
    EXPECT_TRUE(scaling_check_f(g.graph)) << g.name;
    const LatticeMorphism f = morphism_f(g.graph);
    // The wrong constant must fail.
    EXPECT_FALSE(scaling_check(f, BigInt(g.graph.degree(0) + 1))) << g.name;
  }
  for (const auto& g : critgroup::testing::semiregular_test_set(5)) {
    EXPECT_TRUE(scaling_check_g(g.graph)) << g.name;
  }
  EXPECT_EQ(semiregular_scale(2, 3), 30);
  EXPECT_EQ(semiregular_scale(3, 3), 6);
}

TEST(Morphisms, ZeroMorphismForCoprimeCompleteBipartite) {
  EXPECT_TRUE(induced_map_is_zero(morphism_g(complete_bipartite_graph(2, 3))));
  EXPECT_FALSE(induced_map_is_zero(morphism_g(complete_bipartite_graph(3, 3))));
}

TEST(Morphisms, CompositionAndTranspose) {
  const Graph g = complete_graph(4);
  const LatticeMorphism hf = compose(morphism_h(g), morphism_f(g));
  EXPECT_EQ(hf.name, "h.f");
  EXPECT_TRUE(verify_morphism(hf));
  EXPECT_EQ(transpose(transpose(hf)).matrix, hf.matrix);
  EXPECT_THROW(compose(morphism_f(complete_graph(5)), morphism_f(complete_graph(5))), Error);
}

TEST(Morphisms, Preconditions) {
  EXPECT_THROW(morphism_f(path_graph(3)), Error);
  EXPECT_THROW(morphism_f(Graph(4, {{0, 1}, {2, 3}})), Error);
  EXPECT_THROW(morphism_g(complete_graph(3)), Error);
  LatticeMorphism bad = morphism_f(complete_graph(4));
  bad.matrix(0, 0) += 1;
  EXPECT_FALSE(verify_morphism(bad));
  EXPECT_THROW(induced_kernel(bad), Error);
}

TEST(Morphisms, LineCycleGeneratorsSpan) {
  for (const auto& g : critgroup::testing::enumerated(5)) {
    EXPECT_TRUE(line_cycle_generators_span(g.graph)) << g.name;
  }
  EXPECT_TRUE(line_cycle_generators_span(petersen_graph()));
  EXPECT_THROW(line_cycle_generators(Graph(4, {{0, 1}, {2, 3}})), Error);
}
