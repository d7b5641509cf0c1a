#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperham/hypergraph.hpp"
#include "hyperham/lpath.hpp"
#include "hyperham/params.hpp"
#include "hyperham/rational.hpp"

namespace hyperham {

// Greedy connection

struct ConnectResult {
    std::optional<LPath> path;  ///< empty on failure
    unsigned attempts = 0;
};

/// Greedy l-path of length ceilkl from x to y whose interior avoids
/// `forbidden`. Template positions are filled left to right, each with a
/// uniformly random vertex keeping every window's image of positive degree;
/// a dead end restarts, up to `retry_cap` attempts.
/// Throws ContractViolation for zero-degree or overlapping ends.
ConnectResult connect_ends(const Hypergraph& h, const ThresholdParams& params, const OrderedEnd& x,
                           const OrderedEnd& y, const VertexSet& forbidden, std::uint64_t seed,
                           unsigned retry_cap = 50);

// Peeling and partite embedding

struct PeelResult {
    Hypergraph graph;
    /// k|E|/|S| before the first deletion and after each deletion that
    /// leaves S nonempty; S is the family of positive-degree (k-1)-sets.
    std::vector<Rational> ratio_trace;
    std::size_t deletions = 0;
};

/// Deletes (k-1)-sets of degree in [1, tau] with their edges until none is
/// left. Deletion order: least colex rank first.
PeelResult peel_to_positive_codegree(const Hypergraph& h, const Rational& tau);

bool ratio_non_decreasing(const std::vector<Rational>& trace);

/// d(V_1..V_k): crossing edges over the product of class sizes.
/// Throws ContractViolation for empty, overlapping or wrongly counted classes.
Rational density(const Hypergraph& h, const std::vector<VertexSet>& classes);

struct EmbedOptions {
    std::optional<Rational> d;     ///< density used for tau = d*m/k; measured when absent
    bool check_hypothesis = true;  ///< equal class sizes and |U_i| <= d*m/k
    std::uint64_t seed = 0;
    unsigned attempts = 20;
};

struct EmbedResult {
    std::optional<LPath> path;
    Rational tau;
    std::size_t peeled_edges = 0;  ///< edges left after peeling
};

/// Embeds an l-path on `path_vertices` vertices whose i-th unbalanced class
/// lands in classes[i]. Only edges meeting every class once are used.
EmbedResult embed_partite_path(const Hypergraph& h, const std::vector<VertexSet>& classes, std::size_t path_vertices,
                               unsigned l, const EmbedOptions& opt = {});

/// Unbalanced class sizes |U_1|..|U_k| of an l-path on n vertices.
std::vector<std::size_t> unbalanced_sizes(unsigned k, unsigned l, std::size_t n);

// Cluster graph

struct ClusterGraph {
    std::vector<VertexSet> partition;  ///< V_1..V_t; the rest of V(H) is exceptional
    Rational d;
    std::size_t m = 0;  ///< common part size
    Hypergraph cluster;  ///< on t vertices
};

/// Cluster k-graph by density threshold alone: {i_1..i_k} is an edge iff
/// d(V_i1..V_ik) >= d. Throws ContractViolation for unequal or overlapping parts.
ClusterGraph build_cluster_graph(const Hypergraph& h, const std::vector<VertexSet>& partition, const Rational& d);

/// t parts of size m from a seeded shuffle of V(H); t*m <= n.
std::vector<VertexSet> random_balanced_partition(unsigned n, std::size_t t, std::size_t m, std::uint64_t seed);

// Tiling

enum class TileMode { Direct, Cluster };

struct TileOptions {
    TileMode mode = TileMode::Direct;
    double beta = 0.1;
    std::uint64_t seed = 0;
    std::size_t clusters = 0;  ///< 0 picks parts of size 2k
    Rational d{1, 4};
};

struct TileReport {
    std::vector<LPath> paths;
    Rational coverage;        ///< |union of path vertices| / n
    std::string lp_status;    ///< "n/a", "feasible" or "infeasible"
    bool fell_back = false;   ///< cluster mode handed over to direct mode
    std::size_t clusters_used = 0;
};

TileReport tile_paths(const Hypergraph& h, const ThresholdParams& params, const TileOptions& opt);

std::string to_string(TileMode m);

}  // namespace hyperham
