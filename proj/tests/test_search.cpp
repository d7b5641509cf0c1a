#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "hyperham/generators.hpp"
#include "hyperham/params.hpp"
#include "hyperham/search.hpp"

using namespace hyperham;

namespace {

/// Naive oracle: every ordering of the vertices.
bool brute_force_hamilton(const Hypergraph& h, unsigned l) {
    if (h.n() % (h.k() - l) != 0 || h.n() <= h.k()) return false;
    std::vector<Vertex> order(h.n());
    std::iota(order.begin(), order.end(), 0);
    do {
        if (is_hamilton_lcycle(h, l, order)) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

std::size_t brute_force_sis(const Hypergraph& h) {
    std::size_t best = 0;
    for (unsigned mask = 0; mask < (1u << h.n()); ++mask) {
        std::vector<Vertex> s;
        for (Vertex v = 0; v < h.n(); ++v)
            if (mask >> v & 1) s.push_back(v);
        if (s.size() > best && is_strong_independent(h, VertexSet(s))) best = s.size();
    }
    return best;
}

}  // namespace

TEST_CASE("hamilton search examples") {
    const auto found = find_hamilton_lcycle(complete_kgraph(3, 6), 2);
    CHECK(found.outcome == SearchOutcome::Found);
    REQUIRE(found.value);
    CHECK(is_hamilton_lcycle(complete_kgraph(3, 6), *found.value));
    CHECK(find_hamilton_lcycle(extremal_construction(3, 2, 9).graph, 2).outcome == SearchOutcome::None);
    const auto odd = find_hamilton_lcycle(complete_kgraph(3, 7), 1);
    CHECK(odd.outcome == SearchOutcome::None);
    CHECK(odd.nodes == 0);
    SearchOptions tiny;
    tiny.budget.node_limit = 3;
    CHECK(find_hamilton_lcycle(extremal_construction(3, 2, 12).graph, 2, tiny).outcome ==
          SearchOutcome::BudgetExhausted);
}

TEST_CASE("hamilton search agrees with permutation enumeration") {
    std::mt19937_64 rng(2024);
    for (unsigned n = 4; n <= 7; ++n)
        for (unsigned l = 1; l <= 2; ++l)
            for (int trial = 0; trial < 25; ++trial) {
                const double p = 0.3 + 0.65 * unit_double(rng);
                const auto h = random_kgraph(3, n, p, rng());
                const auto res = find_hamilton_lcycle(h, l);
                REQUIRE(res.outcome != SearchOutcome::BudgetExhausted);
                CHECK((res.outcome == SearchOutcome::Found) == brute_force_hamilton(h, l));
                if (res.value) CHECK(is_hamilton_lcycle(h, *res.value));
            }
}

TEST_CASE("k=4 hamilton search agrees with enumeration") {
    std::mt19937_64 rng(7);
    for (unsigned l = 1; l <= 3; ++l)
        for (int trial = 0; trial < 10; ++trial) {
            const auto h = random_kgraph(4, 6, 0.5 + 0.5 * unit_double(rng), rng());
            CHECK((find_hamilton_lcycle(h, l).outcome == SearchOutcome::Found) == brute_force_hamilton(h, l));
        }
}

TEST_CASE("pruning only changes node counts") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned n = 9;
        const auto h = random_kgraph(3, n, 0.45 + 0.3 * unit_double(rng), rng());
        SearchOptions plain;
        plain.frontier_prune = false;
        plain.shadow_prune = false;
        const auto a = find_hamilton_lcycle(h, 2);
        const auto b = find_hamilton_lcycle(h, 2, plain);
        CHECK(a.outcome == b.outcome);
        CHECK(a.nodes <= b.nodes);
    }
}

TEST_CASE("parallel root split matches sequential search") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto h = random_kgraph(3, 9, 0.5 + 0.3 * unit_double(rng), rng());
        SearchOptions par;
        par.workers = 3;
        const auto a = find_hamilton_lcycle(h, 2);
        const auto b = find_hamilton_lcycle(h, 2, par);
        CHECK(a.outcome == b.outcome);
        CHECK(a.value == b.value);
    }
}

TEST_CASE("adding edges never loses a cycle") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        auto h = random_kgraph(3, 8, 0.5, rng());
        bool had = find_hamilton_lcycle(h, 1).outcome == SearchOutcome::Found;
        for (int step = 0; step < 5; ++step) {
            auto edges = h.edge_list();
            std::vector<Vertex> e{static_cast<Vertex>(rng() % 8), static_cast<Vertex>(rng() % 8),
                                  static_cast<Vertex>(rng() % 8)};
            std::sort(e.begin(), e.end());
            if (std::adjacent_find(e.begin(), e.end()) != e.end()) continue;
            edges.push_back(e);
            h = Hypergraph(3, 8, edges);
            const bool has = find_hamilton_lcycle(h, 1).outcome == SearchOutcome::Found;
            CHECK((!had || has));
            had = has;
        }
    }
}

TEST_CASE("shuffled candidate order finds valid cycles") {
    SearchOptions opt;
    opt.shuffle_seed = 3;
    const auto h = complete_kgraph(3, 9);
    const auto r = find_hamilton_lcycle(h, 1, opt);
    // 2 does not divide 9
    CHECK(r.outcome == SearchOutcome::None);
    const auto t = find_hamilton_lcycle(h, 2, opt);
    REQUIRE(t.value);
    CHECK(is_hamilton_lcycle(h, *t.value));
}

TEST_CASE("path between prescribed ends") {
    const Hypergraph one(3, 5, {{0, 2, 4}});
    const auto single = find_lpath_between(one, OrderedEnd{0}, OrderedEnd{4}, 1, VertexSet{2});
    REQUIRE(single.value);
    CHECK(single.value->vertices() == std::vector<Vertex>{0, 2, 4});

    const auto k10 = complete_kgraph(3, 10);
    const auto r = find_lpath_between(k10, OrderedEnd{0, 1}, OrderedEnd{2, 3}, 3, VertexSet::range(4, 10));
    REQUIRE(r.value);
    CHECK(r.value->length() == 3);
    CHECK(ends(*r.value) == std::pair{OrderedEnd{0, 1}, OrderedEnd{2, 3}});

    const auto ext = extremal_construction(3, 2, 9);
    CHECK(find_lpath_between(ext.graph, OrderedEnd{0, 1}, OrderedEnd{5, 6}, 3, VertexSet::range(0, 9)).outcome ==
          SearchOutcome::None);
    CHECK_THROWS_AS(find_lpath_between(k10, OrderedEnd{0, 1}, OrderedEnd{1, 3}, 3, VertexSet{}), ContractViolation);
    CHECK(find_lpath_between(k10, OrderedEnd{0, 1}, OrderedEnd{2, 3}, 4, VertexSet{4}).outcome ==
          SearchOutcome::None);
}

TEST_CASE("maximum strong independent set") {
    const auto empty = max_strong_independent_set(Hypergraph(3, 6));
    CHECK(*empty.value == VertexSet::range(0, 6));
    const auto ext = max_strong_independent_set(extremal_construction(3, 2, 9).graph);
    CHECK(ext.value->size() >= 4);
    const Hypergraph path(3, 7, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}});
    CHECK(max_strong_independent_set(path).value->size() == 3);
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 40; ++trial) {
        const auto h = random_kgraph(3, 10, 0.02 + 0.2 * unit_double(rng), rng());
        const auto r = max_strong_independent_set(h);
        CHECK(r.outcome == SearchOutcome::Found);
        CHECK(r.value->size() == brute_force_sis(h));
    }
    SearchBudget tiny;
    tiny.node_limit = 1;
    const auto cut = max_strong_independent_set(random_kgraph(3, 40, 0.01, 3), tiny);
    CHECK(cut.outcome == SearchOutcome::BudgetExhausted);
    CHECK(cut.value.has_value());
}

TEST_CASE("absorbing tuples") {
    const auto k12 = complete_kgraph(3, 12);
    const std::vector<Vertex> tuple{0, 1, 2, 3, 4, 5, 6};
    CHECK(is_absorbing_tuple(k12, 2, tuple, VertexSet{9}));
    CHECK_THROWS_AS(is_absorbing_tuple(k12, 2, tuple, VertexSet{3}), ContractViolation);
    CHECK_THROWS_AS(is_absorbing_tuple(k12, 2, {0, 1, 2}, VertexSet{9}), ContractViolation);
    CHECK_THROWS_AS(is_absorbing_tuple(k12, 2, tuple, VertexSet{9, 10}), ContractViolation);
    auto edges = k12.edge_list();
    edges.erase(std::find(edges.begin(), edges.end(), std::vector<Vertex>{1, 2, 3}));
    CHECK_FALSE(is_absorbing_tuple(Hypergraph(3, 12, edges), 2, tuple, VertexSet{9}));

    const auto a = sample_absorbing_density(k12, 2, VertexSet{11}, 50, 9);
    CHECK(a.hits == 50);
    CHECK(a.estimate == 1);
    CHECK(a.t_abs == 7);
    const auto b = sample_absorbing_density(k12, 2, VertexSet{11}, 50, 9);
    CHECK(a.hits == b.hits);
    CHECK(sample_absorbing_density(Hypergraph(3, 12), 2, VertexSet{11}, 20, 1).estimate == 0);
    const auto ext = extremal_construction(3, 2, 12).graph;
    const auto c = sample_absorbing_density(ext, 2, VertexSet{11}, 200, 4);
    const auto d = sample_absorbing_density(ext, 2, VertexSet{11}, 200, 4);
    CHECK(c.hits == d.hits);
    CHECK(c.hits <= c.samples);
}
