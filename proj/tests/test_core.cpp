#include <sstream>

#include "doctest.h"
#include "hyperham/generators.hpp"
#include "hyperham/hypergraph.hpp"
#include "hyperham/hypergraph_io.hpp"
#include "hyperham/params.hpp"
#include "hyperham/shadow.hpp"

using namespace hyperham;

TEST_CASE("binomial and colex rank") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
    BinomialTable t(10, 3);
    std::vector<std::uint64_t> ranks;
    for_each_combination(6, 3, [&](std::span<const Vertex> s) { ranks.push_back(t.rank(s)); });
    std::sort(ranks.begin(), ranks.end());
    for (std::size_t i = 0; i < ranks.size(); ++i) CHECK(ranks[i] == i);
}

TEST_CASE("stable hash is fixed") {
    CHECK(stable_hash({1, 2, 3}) == stable_hash({1, 2, 3}));
    CHECK(stable_hash({1, 2, 3}) != stable_hash({3, 2, 1}));
    CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
}

TEST_CASE("degree queries") {
    const Hypergraph empty(3, 6);
    CHECK(degree(empty, VertexSet{0, 1}) == 0);
    const auto k5 = complete_kgraph(3, 5);
    CHECK(degree(k5, VertexSet{0, 1}) == 3);
    CHECK(degree(k5, VertexSet{0}) == 6);
    CHECK(degree(k5, VertexSet{0, 1, 2}) == 1);
    CHECK_THROWS_AS(degree(k5, VertexSet{0, 1, 2, 3}), InvalidQuery);
    CHECK(degree_into(k5, VertexSet{0, 1}, VertexSet{2, 3}) == 2);
    CHECK(degree_into(k5, VertexSet{0, 1}, VertexSet{}) == 0);
    CHECK(degree_into(k5, VertexSet{0, 1}, VertexSet::range(0, 5)) == degree(k5, VertexSet{0, 1}));
    CHECK_THROWS_AS(degree_into(k5, VertexSet{0}, VertexSet{}), InvalidQuery);
    CHECK(neighborhood(k5, VertexSet{0, 1}) == VertexSet{2, 3, 4});
    CHECK(neighborhood(empty, VertexSet{0, 1}).empty());
    CHECK_THROWS_AS(neighborhood(k5, VertexSet{0, 1, 2}), InvalidQuery);
    CHECK(min_codegree(k5) == 3);
    CHECK(*min_positive_codegree(k5) == 3);
    CHECK_FALSE(min_positive_codegree(empty).has_value());
    CHECK(isolated_vertices(k5).empty());
    CHECK(isolated_vertices(empty) == VertexSet::range(0, 6));
}

TEST_CASE("extremal construction queries") {
    const auto ext = extremal_construction(3, 2, 9);
    const auto& h = ext.graph;
    CHECK(ext.a == VertexSet{0, 1, 2, 3});
    CHECK(degree(h, VertexSet{0, 1}) == 0);
    CHECK(degree(h, VertexSet{2, 3}) == 0);
    CHECK(neighborhood(h, VertexSet{0, 5}) == VertexSet{4, 6, 7, 8});
    CHECK(min_codegree(h) == 0);
    CHECK(*min_positive_codegree(h) == 4);
    CHECK(isolated_vertices(h).empty());
    CHECK(is_strong_independent(h, ext.a));
    CHECK(is_strong_independent(h, VertexSet{7}));
    CHECK_FALSE(is_strong_independent(h, VertexSet{0, 4, 5}));
    const auto b = induced_subgraph(h, VertexSet::range(4, 9));
    CHECK(b.graph == complete_kgraph(3, 5));
    CHECK(b.original == std::vector<Vertex>{4, 5, 6, 7, 8});

    const auto loose = extremal_construction(3, 1, 8);
    CHECK(loose.a.size() == 5);
    CHECK(*min_positive_codegree(loose.graph) == 2);
    CHECK_THROWS_AS(extremal_construction(3, 2, 10), ContractViolation);
}

TEST_CASE("induced subgraph edge cases") {
    const auto k5 = complete_kgraph(3, 5);
    CHECK(induced_subgraph(k5, VertexSet::range(0, 5)).graph == k5);
    const auto none = induced_subgraph(k5, VertexSet{});
    CHECK(none.graph.n() == 0);
    CHECK(none.graph.edge_count() == 0);
    CHECK_THROWS_AS(induced_subgraph(k5, VertexSet{0, 9}), InvalidQuery);
}

TEST_CASE("hypergraph construction validates edges") {
    CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1}}), InvalidQuery);
    CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1, 1}}), InvalidQuery);
    CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1, 7}}), InvalidQuery);
    const Hypergraph h(3, 4, {{2, 1, 0}, {0, 1, 2}, {3, 1, 0}});
    CHECK(h.edge_count() == 2);
    const std::vector<Vertex> e{0, 1, 3};
    CHECK(h.has_edge(e));
}

TEST_CASE("sparse codegree index agrees with dense") {
    // C(300, 2) stays dense for k=3; k=5 on 150 vertices exceeds the dense limit.
    const auto h = random_kgraph(5, 40, 0.002, 7);
    std::vector<std::vector<Vertex>> edges = h.edge_list();
    const Hypergraph big(5, 150, edges);
    for (const auto& e : edges) {
        std::vector<Vertex> s(e.begin(), e.end() - 1);
        CHECK(big.codegree(s) == h.codegree(s));
    }
    CHECK(big.positive_set_count() == h.positive_set_count());
}

TEST_CASE("shadow index") {
    const auto ext = extremal_construction(4, 3, 8);
    const ShadowIndex sh(ext.graph);
    const std::vector<Vertex> two_a{0, 1}, mixed{0, 5}, edge{0, 4, 5, 6};
    CHECK_FALSE(sh.positive(two_a));
    CHECK(sh.positive(mixed));
    CHECK(sh.positive(edge));
    CHECK(sh.positive(std::vector<Vertex>{}));
}

TEST_CASE("hypergraph text round trip") {
    const auto h = random_kgraph(3, 9, 0.4, 11);
    std::stringstream s;
    write_hypergraph(s, h);
    CHECK(read_hypergraph(s) == h);
    std::istringstream bad("3 4 1\n0 1\n");
    CHECK_THROWS_AS(read_hypergraph(bad), FormatError);
    std::istringstream dup("# c\n3 4 2\n0 1 2\n0 1 2\n");
    CHECK_THROWS_AS(read_hypergraph(dup), FormatError);
    std::istringstream order("3 4 1\n2 1 0\n");
    CHECK_THROWS_AS(read_hypergraph(order), FormatError);
    CHECK_THROWS_AS(load_hypergraph("/nonexistent/graph.txt"), FormatError);
}

TEST_CASE("threshold params") {
    const auto p32 = threshold_params(3, 2);
    CHECK(p32.ctmod == 3);
    CHECK(p32.dcover == make_rational(2, 3));
    CHECK(p32.weights == std::vector<unsigned>{2, 2, 2});
    const auto p31 = threshold_params(3, 1);
    CHECK(p31.ctmod == 2);
    CHECK(p31.dcover == make_rational(1, 2));
    CHECK(p31.weights == std::vector<unsigned>{2, 1, 1});
    const auto p53 = threshold_params(5, 3);
    CHECK(p53.ctmod == 4);
    CHECK(p53.ceilkl == 3);
    CHECK(p53.weight_sum == 16);
    CHECK(p53.t_abs == 21);
    CHECK_THROWS_AS(threshold_params(3, 3), ContractViolation);
    CHECK_THROWS_AS(threshold_params(2, 1), ContractViolation);
}

TEST_CASE("generators") {
    CHECK(complete_kgraph(3, 4).edge_count() == 4);
    CHECK(random_kgraph(3, 8, 0, 5).edge_count() == 0);
    CHECK(random_kgraph(3, 8, 1, 5) == complete_kgraph(3, 8));
    CHECK(random_kgraph(3, 10, 0.5, 42) == random_kgraph(3, 10, 0.5, 42));
    CHECK(random_kgraph(3, 10, 0.5, 42) != random_kgraph(3, 10, 0.5, 43));
    const std::vector<VertexSet> cls{VertexSet{0, 1}, VertexSet{2, 3}, VertexSet{4, 5}};
    CHECK(complete_partite(3, cls, 6).edge_count() == 8);
    CHECK(random_partite(3, cls, 6, 1, 3) == complete_partite(3, cls, 6));
}

TEST_CASE("rational text") {
    CHECK(to_string(make_rational(2, 4)) == "1/2");
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(parse_rational("6/8") == make_rational(3, 4));
    CHECK(parse_rational("5") == 5);
    CHECK_THROWS(parse_rational("x/2"));
}
