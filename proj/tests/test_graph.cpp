#include "tiling/graph.hpp"
#include "tiling/matching.hpp"
#include "tiling/regions.hpp"
#include "tiling/rewrite.hpp"
#include "tiling/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace tiling;

namespace {

WeightedGraph cycle(std::size_t n, const std::vector<Rational>& w) {
    WeightedGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex();
    for (VertexId i = 0; i < n; ++i) g.add_edge(i, static_cast<VertexId>((i + 1) % n), w[i]);
    return g;
}

}  // namespace

TEST(Graph, TextRoundTrip) {
    WeightedGraph g;
    g.add_vertex(3, Point{make_rational(1, 2), -1});
    g.add_vertex(7);
    g.add_edge(3, 7, make_rational(2, 3));
    g.add_edge(7, 3, 5);
    const std::string text = to_text(g);
    EXPECT_EQ(text, "v 3 1/2 -1/1\nv 7\ne 3 7 2/3\ne 7 3 5/1\n");
    EXPECT_EQ(parse_graph(text), g);
}

TEST(Graph, ParserIgnoresCommentsAndBlankLines) {
    WeightedGraph g = parse_graph("# header\n\nv 0\nv 1  # trailing\ne 0 1 3\n");
    EXPECT_EQ(g.vertex_count(), 2u);
    EXPECT_EQ(g.edges()[0].weight, 3);
}

TEST(Graph, ParserReportsLineNumbers) {
    try {
        parse_graph("v 0\nv 1\ne 0 1 x\n");
        FAIL() << "expected GraphError";
    } catch (const GraphError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
    EXPECT_THROW(parse_graph("v 0\nv 0\n"), GraphError);
    EXPECT_THROW(parse_graph("v 0\ne 0 0 1\n"), GraphError);
    EXPECT_THROW(parse_graph("v 0\ne 0 1 1\n"), GraphError);
    EXPECT_THROW(parse_graph("v 0\nv 1\ne 0 1 0\n"), GraphError);
    EXPECT_THROW(parse_graph("w 0\n"), GraphError);
}

TEST(Matching, SmallGraphs) {
    EXPECT_EQ(matching_gen_fn(WeightedGraph{}), 1);
    EXPECT_EQ(matching_gen_fn(cycle(4, {2, 3, 5, 7})), 2 * 5 + 3 * 7);
    EXPECT_EQ(matching_gen_fn(cycle(3, {1, 1, 1})), 0);
    WeightedGraph parallel;
    parallel.add_vertex();
    parallel.add_vertex();
    parallel.add_edge(0, 1, 2);
    parallel.add_edge(0, 1, make_rational(1, 3));
    EXPECT_EQ(matching_gen_fn(parallel), make_rational(7, 3));
}

TEST(Matching, CompleteGraphCountsPairings) {
    WeightedGraph k6;
    for (int i = 0; i < 6; ++i) k6.add_vertex();
    for (VertexId u = 0; u < 6; ++u)
        for (VertexId v = u + 1; v < 6; ++v) k6.add_edge(u, v, 1);
    EXPECT_EQ(matching_gen_fn(k6), 15);
}

TEST(Matching, AztecDiamondGraphs) {
    const long expected[] = {1, 2, 8, 64, 1024, 32768};
    for (std::size_t n = 1; n <= 5; ++n)
        EXPECT_EQ(matching_gen_fn(build_aztec_graph(tile_pattern(all_ones_pattern(), n))), expected[n]) << n;
}

TEST(ForcedEdges, StripsPendantEdges) {
    WeightedGraph g = cycle(4, {2, 3, 5, 7});
    VertexId p = g.add_vertex(), q = g.add_vertex();
    g.add_edge(p, 0, 11);
    g.add_edge(q, 1, 13);
    ForcedElimination fe = eliminate_forced(g);
    EXPECT_EQ(fe.factor, 11 * 13 * 5);
    EXPECT_EQ(fe.residual.vertex_count(), 0u);
    EXPECT_EQ(matching_gen_fn(g), fe.factor * matching_gen_fn(fe.residual));
}

TEST(ForcedEdges, IsolatedVertexGivesZero) {
    WeightedGraph g;
    g.add_vertex();
    g.add_vertex();
    g.add_vertex();
    g.add_edge(0, 1, 4);
    ForcedElimination fe = eliminate_forced(g);
    EXPECT_EQ(fe.factor, 0);
    EXPECT_EQ(matching_gen_fn(g), 0);
}

TEST(Rewrite, VertexSplitPreservesCount) {
    WeightedGraph g = cycle(6, {2, 3, 5, 7, 11, 13});
    g.add_edge(0, 3, make_rational(1, 2));
    WeightedGraph s = vertex_split(g, 0, {1}, {3, 5});
    EXPECT_EQ(s.vertex_count(), 8u);
    EXPECT_EQ(matching_gen_fn(s), matching_gen_fn(g));
    EXPECT_THROW(vertex_split(g, 0, {1}, {3}), GraphError);
    EXPECT_THROW(vertex_split(g, 0, {1, 3}, {3, 5}), GraphError);
}

TEST(Rewrite, MergeParallelSumsWeights) {
    WeightedGraph g = cycle(4, {1, 1, 1, 1});
    g.add_edge(0, 1, make_rational(1, 2));
    g.add_edge(1, 0, make_rational(1, 4));
    WeightedGraph m = merge_parallel(g);
    EXPECT_EQ(m.edge_count(), 4u);
    EXPECT_EQ(m.edges()[0].weight, make_rational(7, 4));
    EXPECT_EQ(matching_gen_fn(m), matching_gen_fn(g));
}

TEST(Rewrite, StarScaling) {
    WeightedGraph g = cycle(4, {2, 3, 5, 7});
    RewriteResult r = star_scale(g, 1, 3);
    EXPECT_EQ(matching_gen_fn(r.graph), 3 * matching_gen_fn(g));
    EXPECT_EQ(r.receipt.factor, make_rational(1, 3));
    EXPECT_THROW(star_scale(g, 1, 0), GraphError);
    EXPECT_THROW(star_scale(g, 9, 1), GraphError);
}

TEST(Rewrite, UrbanRenewalOnFixedCell) {
    // Inner 4-cycle 0..3 with spokes to 4..7; outer vertices joined in a path.
    WeightedGraph g;
    for (int i = 0; i < 8; ++i) g.add_vertex();
    g.add_edge(0, 1, 2);
    g.add_edge(1, 2, 3);
    g.add_edge(2, 3, 5);
    g.add_edge(3, 0, 7);
    for (VertexId k = 0; k < 4; ++k) g.add_edge(k + 4, k, 1);
    g.add_edge(4, 5, make_rational(1, 2));
    g.add_edge(6, 7, 4);
    RewriteResult r = urban_renewal(g, {{0, 1, 2, 3}, {4, 5, 6, 7}}, SpiderVariant::full);
    EXPECT_EQ(r.receipt.factor, 2 * 5 + 3 * 7);
    EXPECT_EQ(r.graph.vertex_count(), 4u);
    EXPECT_EQ(matching_gen_fn(g), r.receipt.factor * matching_gen_fn(r.graph));
}

TEST(Rewrite, UrbanRenewalRejectsWrongShape) {
    WeightedGraph g;
    for (int i = 0; i < 8; ++i) g.add_vertex();
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 3, 1);
    g.add_edge(3, 0, 1);
    for (VertexId k = 0; k < 4; ++k) g.add_edge(k + 4, k, 2);
    EXPECT_THROW(urban_renewal(g, {{0, 1, 2, 3}, {4, 5, 6, 7}}, SpiderVariant::full), ShapeError);
    EXPECT_THROW(urban_renewal(g, {{0, 1, 2}, {4, 5, 6}}, SpiderVariant::full), ShapeError);
    EXPECT_THROW(urban_renewal(g, {{0, 1, 2, 3}, {4, 5, 6, 6}}, SpiderVariant::full), ShapeError);
}

TEST(Rewrite, CityReplacementOnStandaloneCity) {
    for (std::size_t k = 1; k <= 3; ++k) {
        CityGraph c = build_city({k, CityKind::extended}, make_rational(3, 2));
        RewriteResult r = city_replace(c.graph, c.roles);
        EXPECT_EQ(r.receipt.factor, pow(2 * make_rational(9, 4), static_cast<long>(k)));
        EXPECT_EQ(matching_gen_fn(c.graph), r.receipt.factor * matching_gen_fn(r.graph)) << k;
    }
}

class LemmaProperty : public ::testing::TestWithParam<std::pair<Lemma, std::string>> {};

TEST_P(LemmaProperty, RandomInstancesPreserveWeightedCount) {
    Rng rng(static_cast<std::uint64_t>(GetParam().first) + 1);
    int nonzero = 0;
    for (int k = 0; k < 25; ++k) {
        LemmaInstance inst = random_lemma_instance(GetParam().first, rng);
        const Rational before = matching_gen_fn(inst.before);
        EXPECT_EQ(before, inst.factor * matching_gen_fn(inst.after)) << "case " << k;
        if (before != 0) ++nonzero;
    }
    EXPECT_GT(nonzero, 20);
}

INSTANTIATE_TEST_SUITE_P(AllLemmas, LemmaProperty, ::testing::ValuesIn(lemma_names()),
                         [](const auto& info) {
                             std::string name = info.param.second;
                             std::replace(name.begin(), name.end(), '-', '_');
                             return name;
                         });
