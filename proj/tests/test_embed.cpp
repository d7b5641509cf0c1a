#include <random>

#include "doctest.h"
#include "hyperham/connect_embed.hpp"
#include "hyperham/generators.hpp"
#include "hyperham/search.hpp"

using namespace hyperham;

TEST_CASE("connect ends in a complete graph") {
    const auto p = threshold_params(3, 2);
    const auto h = complete_kgraph(3, 20);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto r = connect_ends(h, p, OrderedEnd{0, 1}, OrderedEnd{2, 3}, VertexSet{4, 5, 6}, s);
        REQUIRE(r.path);
        CHECK(r.path->length() == 3);
        CHECK(validate_lpath(h, *r.path));
        CHECK(ends(*r.path) == std::pair{OrderedEnd{0, 1}, OrderedEnd{2, 3}});
        for (Vertex v : r.path->vertices()) CHECK_FALSE(VertexSet({4, 5, 6}).contains(v));
    }
    const auto q = threshold_params(3, 1);
    const auto loose = connect_ends(h, q, OrderedEnd{0}, OrderedEnd{1}, VertexSet{}, 1);
    REQUIRE(loose.path);
    CHECK(loose.path->length() == 2);
}

TEST_CASE("connect ends rejects bad ends") {
    const auto p = threshold_params(3, 2);
    const auto ext = extremal_construction(3, 2, 9).graph;
    CHECK_THROWS_AS(connect_ends(ext, p, OrderedEnd{0, 1}, OrderedEnd{5, 6}, VertexSet{}, 0), ContractViolation);
    const auto h = complete_kgraph(3, 10);
    CHECK_THROWS_AS(connect_ends(h, p, OrderedEnd{0, 1}, OrderedEnd{1, 2}, VertexSet{}, 0), ContractViolation);
    CHECK_THROWS_AS(connect_ends(h, p, OrderedEnd{0, 1}, OrderedEnd{3, 2}, VertexSet{3}, 0), ContractViolation);
}

TEST_CASE("connect ends failure agrees with the exact oracle on a sparse graph") {
    const auto p = threshold_params(3, 2);
    const Hypergraph h(3, 8, {{0, 1, 2}, {5, 6, 7}});
    const auto r = connect_ends(h, p, OrderedEnd{0, 1}, OrderedEnd{6, 7}, VertexSet{}, 0);
    CHECK_FALSE(r.path);
    CHECK(find_lpath_between(h, OrderedEnd{0, 1}, OrderedEnd{6, 7}, 3, VertexSet::range(2, 6)).outcome ==
          SearchOutcome::None);
}

TEST_CASE("peeling") {
    const auto k10 = complete_kgraph(3, 10);
    const auto same = peel_to_positive_codegree(k10, 3);
    CHECK(same.graph == k10);
    CHECK(same.deletions == 0);
    const Hypergraph one(3, 5, {{1, 2, 3}});
    const auto gone = peel_to_positive_codegree(one, 1);
    CHECK(gone.graph.edge_count() == 0);
    CHECK(gone.ratio_trace == std::vector<Rational>{1});
    // peeling is idempotent
    const auto h = random_kgraph(3, 14, 0.3, 8);
    const auto once = peel_to_positive_codegree(h, 2);
    CHECK(peel_to_positive_codegree(once.graph, 2).graph == once.graph);
    if (once.graph.edge_count() > 0) CHECK(Rational(*min_positive_codegree(once.graph)) > 2);
}

TEST_CASE("peeling random partite graphs at tau = d m / k") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const unsigned m = 8;
        std::vector<VertexSet> cls{VertexSet::range(0, m), VertexSet::range(m, 2 * m), VertexSet::range(2 * m, 3 * m)};
        const auto h = random_partite(3, cls, 3 * m, 0.5, s);
        const auto d = density(h, cls);
        const Rational tau = d * m / 3;
        const auto r = peel_to_positive_codegree(h, tau);
        CHECK(ratio_non_decreasing(r.ratio_trace));
        REQUIRE(r.graph.edge_count() > 0);
        CHECK(Rational(*min_positive_codegree(r.graph)) > tau);
    }
}

TEST_CASE("density") {
    const std::vector<VertexSet> cls{VertexSet{0}, VertexSet{4}, VertexSet{5}};
    CHECK(density(complete_kgraph(3, 6), cls) == 1);
    CHECK(density(Hypergraph(3, 6), cls) == 0);
    CHECK(density(extremal_construction(3, 2, 9).graph, cls) == 1);
    CHECK_THROWS_AS(density(complete_kgraph(3, 6), {VertexSet{0}, VertexSet{}, VertexSet{1}}), ContractViolation);
    CHECK_THROWS_AS(density(complete_kgraph(3, 6), {VertexSet{0}, VertexSet{0}, VertexSet{1}}), ContractViolation);
}

TEST_CASE("partite embedding") {
    const auto p = threshold_params(3, 2);
    std::vector<VertexSet> cls{VertexSet::range(0, 9), VertexSet::range(9, 18), VertexSet::range(18, 27)};
    const auto complete = complete_partite(3, cls, 27);
    const auto r = embed_partite_path(complete, cls, 5, 2);
    REQUIRE(r.path);
    CHECK(validate_lpath(complete, *r.path));
    const auto cl = unbalanced_classes(3, 2, 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(cls[cl[i]].contains(r.path->vertices()[i]));
    CHECK_THROWS_AS(embed_partite_path(complete, cls, 11, 2), ContractViolation);

    std::vector<VertexSet> c12{VertexSet::range(0, 12), VertexSet::range(12, 24), VertexSet::range(24, 36)};
    const auto half = random_partite(3, c12, 36, 0.5, 4);
    EmbedOptions eo;
    eo.d = make_rational(1, 2);
    const auto s = embed_partite_path(half, c12, 5, 2, eo);
    REQUIRE(s.path);
    CHECK(validate_lpath(half, *s.path));
    (void)p;
}

TEST_CASE("complete partite embedding never fails within the hypothesis") {
    for (unsigned k = 3; k <= 4; ++k)
        for (unsigned l = 1; l < k; ++l)
            for (unsigned m = 4; m <= 12; m += 4) {
                std::vector<VertexSet> cls;
                for (unsigned i = 0; i < k; ++i) cls.push_back(VertexSet::range(i * m, (i + 1) * m));
                const auto h = complete_partite(k, cls, k * m);
                for (std::size_t n = k; n <= k * m; ++n) {
                    if (n % (k - l) != l % (k - l)) continue;
                    const auto sizes = unbalanced_sizes(k, l, n);
                    if (*std::max_element(sizes.begin(), sizes.end()) * k > m) continue;
                    const auto r = embed_partite_path(h, cls, n, l);
                    CHECK(r.path.has_value());
                }
            }
}

TEST_CASE("cluster graph") {
    const auto k9 = complete_kgraph(3, 9);
    std::vector<VertexSet> parts{VertexSet{0, 1, 2}, VertexSet{3, 4, 5}, VertexSet{6, 7, 8}};
    CHECK(build_cluster_graph(k9, parts, 1).cluster.edge_count() == 1);
    CHECK(build_cluster_graph(Hypergraph(3, 9), parts, make_rational(1, 10)).cluster.edge_count() == 0);
    CHECK_THROWS_AS(build_cluster_graph(k9, {VertexSet{0, 1}, VertexSet{2, 3, 4}}, 1), ContractViolation);

    const auto ext = extremal_construction(3, 2, 27).graph;
    std::vector<VertexSet> nine;
    for (Vertex i = 0; i < 9; ++i) nine.push_back(VertexSet::range(3 * i, 3 * i + 3));
    const auto cg = build_cluster_graph(ext, nine, make_rational(1, 100));
    const std::vector<Vertex> pure{0, 1, 2};
    CHECK_FALSE(cg.cluster.has_edge(pure));
    const std::vector<Vertex> mixed{0, 4, 5};
    CHECK(cg.cluster.has_edge(mixed));
}

TEST_CASE("tiling") {
    const auto p = threshold_params(3, 2);
    const auto k30 = complete_kgraph(3, 30);
    const auto direct = tile_paths(k30, p, {});
    CHECK(direct.coverage == 1);
    CHECK(direct.paths.size() == 1);
    const auto none = tile_paths(Hypergraph(3, 12), p, {});
    CHECK(none.paths.empty());
    CHECK(none.coverage == 0);

    const auto ext = extremal_construction(3, 2, 27);
    const auto r = tile_paths(ext.graph, p, {});
    CHECK(r.coverage >= 1 - Rational(ext.a.size()) / 27);

    TileOptions co;
    co.mode = TileMode::Cluster;
    co.seed = 5;
    const auto big = complete_kgraph(3, 36);
    const auto c = tile_paths(big, p, co);
    CHECK(c.lp_status == "feasible");
    CHECK(c.coverage > 0);
    const auto fallback = tile_paths(ext.graph, p, co);
    CHECK(fallback.coverage > 0);
}
