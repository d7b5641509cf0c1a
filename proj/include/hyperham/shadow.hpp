#pragma once

#include <unordered_set>
#include <vector>

#include "hyperham/hypergraph.hpp"

namespace hyperham {

/// Answers "deg(S) >= 1" for any S with |S| <= k by precomputing, for each
/// size s < k-1, every s-subset that lies inside some edge. Sizes k-1 and k
/// defer to the hypergraph's own index.
class ShadowIndex {
public:
    explicit ShadowIndex(const Hypergraph& h);

    const Hypergraph& graph() const { return *h_; }

    /// `s` need not be sorted; it must hold distinct valid vertices.
    bool positive(std::span<const Vertex> s) const;

private:
    const Hypergraph* h_;
    BinomialTable binom_;
    std::vector<std::vector<bool>> dense_;                 // per size, when small
    std::vector<std::unordered_set<std::uint64_t>> sparse_;  // per size otherwise
};

}  // namespace hyperham
