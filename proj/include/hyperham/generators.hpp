#pragma once

#include <cstdint>

#include "hyperham/hypergraph.hpp"

namespace hyperham {

struct ExtremalGraph {
    Hypergraph graph;
    VertexSet a;  ///< the strong independent side, vertices 0..n/ctmod
};

/// The extremal construction: |A| = n/ctmod + 1 on the lowest indices, edges
/// are all k-sets meeting A at most once. Requires ctmod(k,l) | n, n > 0.
ExtremalGraph extremal_construction(unsigned k, unsigned l, unsigned n);

/// All k-subsets of n vertices; requires n >= k.
Hypergraph complete_kgraph(unsigned k, unsigned n);

/// Each k-subset (enumerated in colex order, one uniform draw apiece from a
/// mt19937_64 seeded with `seed`) is kept with probability p.
Hypergraph random_kgraph(unsigned k, unsigned n, double p, std::uint64_t seed);

/// Complete k-partite k-graph over the given classes.
Hypergraph complete_partite(unsigned k, const std::vector<VertexSet>& classes, unsigned n);

/// k-partite graph over `classes` keeping each crossing k-tuple with
/// probability p (colex order of (class-0 index, ..., class-(k-1) index)).
Hypergraph random_partite(unsigned k, const std::vector<VertexSet>& classes, unsigned n, double p,
                          std::uint64_t seed);

}  // namespace hyperham
