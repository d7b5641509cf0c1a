#include <map>
#include <random>

#include "hyperham/connect_embed.hpp"

namespace hyperham {

ClusterGraph build_cluster_graph(const Hypergraph& h, const std::vector<VertexSet>& partition, const Rational& d) {
    const unsigned k = h.k();
    ClusterGraph g;
    g.partition = partition;
    g.d = d;
    g.m = partition.empty() ? 0 : partition.front().size();
    std::vector<int> part(h.n(), -1);
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (partition[i].size() != g.m || g.m == 0)
            throw ContractViolation("build_cluster_graph: parts must be nonempty and of equal size");
        require_vertices(h, partition[i].span(), "build_cluster_graph");
        for (Vertex v : partition[i]) {
            if (part[v] != -1) throw ContractViolation("build_cluster_graph: parts overlap");
            part[v] = static_cast<int>(i);
        }
    }
    std::map<std::vector<Vertex>, std::size_t> crossing;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        std::vector<Vertex> key;
        for (Vertex v : h.edge(e)) {
            if (part[v] < 0) break;
            key.push_back(static_cast<Vertex>(part[v]));
        }
        if (key.size() != k) continue;
        std::sort(key.begin(), key.end());
        if (std::adjacent_find(key.begin(), key.end()) != key.end()) continue;
        ++crossing[key];
    }
    Rational cells(1);
    for (unsigned i = 0; i < k; ++i) cells *= static_cast<unsigned long>(g.m);
    std::vector<std::vector<Vertex>> edges;
    for (auto& [key, count] : crossing)
        if (Rational(count) / cells >= d) edges.push_back(key);
    g.cluster = Hypergraph(k, static_cast<unsigned>(partition.size()), std::move(edges));
    return g;
}

std::vector<VertexSet> random_balanced_partition(unsigned n, std::size_t t, std::size_t m, std::uint64_t seed) {
    if (t * m > n) throw ContractViolation("random_balanced_partition: t*m exceeds n");
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::mt19937_64 rng(seed);
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    std::vector<VertexSet> parts;
    for (std::size_t i = 0; i < t; ++i)
        parts.emplace_back(std::vector<Vertex>(order.begin() + i * m, order.begin() + (i + 1) * m));
    return parts;
}

}  // namespace hyperham
