#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperham/hypergraph.hpp"

namespace hyperham {

/// Ordered l-tuple at one end of an l-path.
class OrderedEnd {
public:
    OrderedEnd() = default;
    OrderedEnd(std::initializer_list<Vertex> v) : vertices_(v) {}
    explicit OrderedEnd(std::vector<Vertex> v) : vertices_(std::move(v)) {}

    std::size_t size() const { return vertices_.size(); }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }
    std::span<const Vertex> span() const { return vertices_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    VertexSet as_set() const { return VertexSet(vertices_); }

    friend bool operator==(const OrderedEnd&, const OrderedEnd&) = default;

private:
    std::vector<Vertex> vertices_;
};

/// k-uniform l-path stored as its vertex sequence. The edges are the windows
/// of length k starting at positions 0, (k-l), 2(k-l), ...
class LPath {
public:
    /// Throws ContractViolation unless 1 <= l < k, |V| >= k, |V| = l mod (k-l)
    /// and vertices are distinct.
    LPath(unsigned k, unsigned l, std::vector<Vertex> vertices);

    unsigned k() const { return k_; }
    unsigned l() const { return l_; }
    std::size_t size() const { return vertices_.size(); }
    /// Number of edges m, with size() = m(k-l)+l.
    std::size_t length() const { return (vertices_.size() - l_) / (k_ - l_); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::span<const Vertex> window(std::size_t i) const { return {vertices_.data() + i * (k_ - l_), k_}; }

    /// `k l p v0 v1 ...`
    std::string to_line() const;

    friend bool operator==(const LPath&, const LPath&) = default;

private:
    unsigned k_;
    unsigned l_;
    std::vector<Vertex> vertices_;
};

/// k-uniform l-cycle, held in a canonical rotation/reflection so that equal
/// cycles compare equal.
class LCycle {
public:
    /// Throws ContractViolation unless (k-l) | |V|, |V| > k and vertices are distinct.
    LCycle(unsigned k, unsigned l, std::vector<Vertex> vertices);

    unsigned k() const { return k_; }
    unsigned l() const { return l_; }
    std::size_t size() const { return vertices_.size(); }
    std::size_t length() const { return vertices_.size() / (k_ - l_); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::vector<Vertex> window(std::size_t i) const;

    std::string to_line() const;

    friend bool operator==(const LCycle&, const LCycle&) = default;

private:
    unsigned k_;
    unsigned l_;
    std::vector<Vertex> vertices_;
};

/// Lexicographically least sequence among the rotations by multiples of
/// (k-l) and the window-aligned reflections.
std::vector<Vertex> canonical_cycle_order(unsigned k, unsigned l, std::vector<Vertex> order);

/// True iff every window of P is an edge of H and k matches.
/// Throws InvalidQuery if P uses a vertex outside H.
bool validate_lpath(const Hypergraph& h, const LPath& p);

std::pair<OrderedEnd, OrderedEnd> ends(const LPath& p);

/// PQ, merging the shared end once. Throws ContractViolation when P's last
/// end differs from Q's first end or the paths share any other vertex.
LPath concatenate(const LPath& p, const LPath& q);

/// True iff `order` visits every vertex of H once and each window (with
/// wraparound) is an edge. False whenever (k-l) does not divide n.
bool is_hamilton_lcycle(const Hypergraph& h, unsigned l, std::span<const Vertex> order);
bool is_hamilton_lcycle(const Hypergraph& h, const LCycle& c);

/// Consecutive blocks of ctmod(k,l) vertices from the first vertex, the last
/// block possibly smaller. Each block lies inside an edge of the structure.
std::vector<std::vector<Vertex>> cover_partition(const LPath& p);
std::vector<std::vector<Vertex>> cover_partition(const LCycle& c);

struct SisWitness {
    std::size_t bound = 0;               ///< ceil(n / ctmod)
    std::vector<std::size_t> positions;  ///< witness positions that exist in the path
    bool attains_bound = false;          ///< positions.size() == bound
};

/// The closed-form strong-independence value of an l-path on n vertices and
/// the witness at positions (k-l-1) + i*ctmod (0-based), truncated to the path.
/// Throws ContractViolation for invalid n.
SisWitness max_sis_in_path(unsigned k, unsigned l, std::size_t n);

/// Class index (0-based) of each path position under the unbalanced
/// partition: class 0 is the witness set, the rest is dealt round-robin.
std::vector<unsigned> unbalanced_classes(unsigned k, unsigned l, std::size_t n);

/// U_1..U_k as vertex sets of P.
std::vector<VertexSet> unbalanced_partition(const LPath& p);

/// LPath on 0..m(k-l)+l-1 in natural order; m >= 1.
LPath abstract_path(unsigned k, unsigned l, std::size_t m);

}  // namespace hyperham
