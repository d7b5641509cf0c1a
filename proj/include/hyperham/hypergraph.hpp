#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "hyperham/combinatorics.hpp"
#include "hyperham/errors.hpp"

namespace hyperham {

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    explicit VertexSet(std::vector<Vertex> members);

    /// {first, ..., last-1}
    static VertexSet range(Vertex first, Vertex last);

    bool contains(Vertex v) const;
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    Vertex operator[](std::size_t i) const { return members_[i]; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    std::span<const Vertex> span() const { return members_; }
    const std::vector<Vertex>& members() const { return members_; }

    VertexSet set_union(const VertexSet& other) const;
    VertexSet set_difference(const VertexSet& other) const;
    VertexSet set_intersection(const VertexSet& other) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

/// k-uniform hypergraph on vertices 0..n-1.
///
/// Edges are kept in canonical (sorted) form, ordered lexicographically.
/// A codegree index maps every (k-1)-subset to its sorted extension list; it
/// is built eagerly, using a dense colex-rank table when C(n, k-1) is small and
/// a sorted key array otherwise. Immutable after construction.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(unsigned k, unsigned n);
    /// Edges may be given in any vertex order; duplicates collapse.
    /// Throws InvalidQuery on wrong arity, repeated vertices or out-of-range vertices.
    Hypergraph(unsigned k, unsigned n, std::vector<std::vector<Vertex>> edges);

    unsigned k() const { return k_; }
    unsigned n() const { return n_; }
    std::size_t edge_count() const { return k_ == 0 ? 0 : edges_.size() / k_; }
    std::span<const Vertex> edge(std::size_t i) const { return {edges_.data() + i * k_, k_}; }
    std::vector<std::vector<Vertex>> edge_list() const;

    /// `sorted` must be a strictly increasing k-sequence of valid vertices.
    bool has_edge(std::span<const Vertex> sorted) const;
    /// Extensions x of a sorted (k-1)-set S with S+x an edge, increasing.
    std::span<const Vertex> extensions(std::span<const Vertex> sorted) const;
    std::size_t codegree(std::span<const Vertex> sorted) const { return extensions(sorted).size(); }

    /// Indices of edges containing v.
    std::span<const std::uint32_t> incident_edges(Vertex v) const {
        return {incidence_.data() + incidence_offsets_[v], incidence_offsets_[v + 1] - incidence_offsets_[v]};
    }

    /// Codegree of every (k-1)-set with at least one extension.
    std::vector<std::size_t> positive_codegrees() const;
    /// Number of (k-1)-sets with positive codegree.
    std::size_t positive_set_count() const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.k_ == b.k_ && a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void build_index();
    std::size_t bucket_of(std::span<const Vertex> sorted) const;  // npos when absent

    unsigned k_ = 0;
    unsigned n_ = 0;
    std::vector<Vertex> edges_;  // flat, edge i at [i*k, (i+1)*k)

    BinomialTable binom_;
    bool dense_ = true;
    std::vector<std::uint64_t> keys_;     // sparse mode: sorted ranks
    std::vector<std::uint32_t> offsets_;  // bucket b: ext_[offsets_[b], offsets_[b+1])
    std::vector<Vertex> ext_;

    std::vector<std::uint32_t> incidence_offsets_;
    std::vector<std::uint32_t> incidence_;
};

/// Number of edges containing S (|S| <= k). For |S| = k this is 0 or 1.
std::size_t degree(const Hypergraph& h, const VertexSet& s);
/// Number of x in W with S + x an edge; requires |S| = k-1.
std::size_t degree_into(const Hypergraph& h, const VertexSet& s, const VertexSet& w);
/// N(S) for a (k-1)-set S.
VertexSet neighborhood(const Hypergraph& h, const VertexSet& s);
/// Minimum codegree over all (k-1)-sets; requires n >= k-1.
std::size_t min_codegree(const Hypergraph& h);
/// Minimum codegree over (k-1)-sets of positive codegree; nullopt for edgeless H.
std::optional<std::size_t> min_positive_codegree(const Hypergraph& h);
VertexSet isolated_vertices(const Hypergraph& h);
bool is_strong_independent(const Hypergraph& h, const VertexSet& s);

struct InducedSubgraph {
    Hypergraph graph;
    std::vector<Vertex> original;  ///< original[i] = vertex of H relabelled to i
};

/// H[U], relabelled 0..|U|-1 by increasing original index.
InducedSubgraph induced_subgraph(const Hypergraph& h, const VertexSet& u);

/// Throws InvalidQuery if any vertex of `s` is >= h.n().
void require_vertices(const Hypergraph& h, std::span<const Vertex> s, const char* what);

}  // namespace hyperham
