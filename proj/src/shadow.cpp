#include "hyperham/shadow.hpp"

#include <algorithm>

namespace hyperham {

namespace {
constexpr std::uint64_t kDenseShadowLimit = std::uint64_t{1} << 24;
}

ShadowIndex::ShadowIndex(const Hypergraph& h) : h_(&h), binom_(std::max(h.n(), 1u), h.k()) {
    const unsigned k = h.k();
    dense_.resize(k);
    sparse_.resize(k);
    for (unsigned s = 1; s + 1 < k; ++s) {
        const std::uint64_t space = binomial(h.n(), s);
        const bool dense = space <= kDenseShadowLimit;
        if (dense) dense_[s].assign(space, false);
        for (std::size_t i = 0; i < h.edge_count(); ++i) {
            for_each_sub_combination(h.edge(i), s, [&](std::span<const Vertex> sub) {
                const auto r = binom_.rank(sub);
                if (dense) {
                    dense_[s][r] = true;
                } else {
                    sparse_[s].insert(r);
                }
            });
        }
    }
}

bool ShadowIndex::positive(std::span<const Vertex> s) const {
    const unsigned k = h_->k();
    if (s.empty()) return h_->edge_count() > 0;
    if (s.size() > k) return false;
    Vertex buf[32];
    std::vector<Vertex> heap;
    Vertex* sorted = buf;
    if (s.size() > 32) {
        heap.resize(s.size());
        sorted = heap.data();
    }
    std::copy(s.begin(), s.end(), sorted);
    std::sort(sorted, sorted + s.size());
    std::span<const Vertex> view(sorted, s.size());
    if (s.size() == k) return h_->has_edge(view);
    if (s.size() + 1 == k) return h_->codegree(view) > 0;
    const auto r = binom_.rank(view);
    if (!dense_[s.size()].empty()) return dense_[s.size()][r];
    return sparse_[s.size()].count(r) > 0;
}

}  // namespace hyperham
