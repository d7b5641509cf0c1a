#include "hyperham/generators.hpp"

#include <random>
#include <string>

#include "hyperham/params.hpp"

namespace hyperham {

namespace {

/// Calls f on k-subsets of {0..n-1} in colex order (last element slowest).
template <class F>
void for_each_colex(unsigned n, unsigned k, F&& f) {
    if (k > n) return;
    std::vector<Vertex> c(k);
    for (unsigned i = 0; i < k; ++i) c[i] = i;
    while (true) {
        f(c);
        unsigned i = 0;
        while (i + 1 < k && c[i] + 1 == c[i + 1]) {
            c[i] = i;
            ++i;
        }
        if (++c[i] >= n) return;
    }
}

template <class F>
void for_each_partite_tuple(const std::vector<VertexSet>& classes, F&& f) {
    const std::size_t k = classes.size();
    for (const auto& c : classes)
        if (c.empty()) return;
    std::vector<std::size_t> idx(k, 0);
    std::vector<Vertex> e(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) e[i] = classes[i][idx[i]];
        f(e);
        std::size_t i = 0;
        while (i < k && ++idx[i] == classes[i].size()) idx[i++] = 0;
        if (i == k) return;
    }
}

}  // namespace

ExtremalGraph extremal_construction(unsigned k, unsigned l, unsigned n) {
    const unsigned block = ctmod(k, l);
    if (l < 1 || l >= k) throw ContractViolation("extremal_construction: need 1 <= l < k");
    if (n == 0 || n % block != 0) {
        throw ContractViolation("extremal_construction: n=" + std::to_string(n) + " is not a positive multiple of ctmod=" +
                                std::to_string(block));
    }
    const unsigned a_size = n / block + 1;
    if (a_size > n) throw ContractViolation("extremal_construction: |A| exceeds n");
    std::vector<std::vector<Vertex>> edges;
    for_each_combination(n, k, [&](std::span<const Vertex> e) {
        unsigned in_a = 0;
        for (Vertex v : e) in_a += v < a_size;
        if (in_a <= 1) edges.emplace_back(e.begin(), e.end());
    });
    return {Hypergraph(k, n, std::move(edges)), VertexSet::range(0, a_size)};
}

Hypergraph complete_kgraph(unsigned k, unsigned n) {
    if (n < k) throw ContractViolation("complete_kgraph: need n >= k");
    std::vector<std::vector<Vertex>> edges;
    for_each_combination(n, k, [&](std::span<const Vertex> e) { edges.emplace_back(e.begin(), e.end()); });
    return Hypergraph(k, n, std::move(edges));
}

Hypergraph random_kgraph(unsigned k, unsigned n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw ContractViolation("random_kgraph: p must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Vertex>> edges;
    for_each_colex(n, k, [&](const std::vector<Vertex>& e) {
        if (unit_double(rng) < p) edges.push_back(e);
    });
    return Hypergraph(k, n, std::move(edges));
}

Hypergraph complete_partite(unsigned k, const std::vector<VertexSet>& classes, unsigned n) {
    return random_partite(k, classes, n, 1.0, 0);
}

Hypergraph random_partite(unsigned k, const std::vector<VertexSet>& classes, unsigned n, double p,
                          std::uint64_t seed) {
    if (classes.size() != k) throw ContractViolation("random_partite: need exactly k classes");
    if (!(p >= 0.0 && p <= 1.0)) throw ContractViolation("random_partite: p must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Vertex>> edges;
    for_each_partite_tuple(classes, [&](const std::vector<Vertex>& e) {
        if (unit_double(rng) < p) edges.push_back(e);
    });
    return Hypergraph(k, n, std::move(edges));
}

}  // namespace hyperham
