#include "hyperham/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace hyperham {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;
constexpr std::size_t kNoBucket = std::numeric_limits<std::size_t>::max();

void sort_unique(std::vector<Vertex>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members) : members_(members) { sort_unique(members_); }

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) { sort_unique(members_); }

VertexSet VertexSet::range(Vertex first, Vertex last) {
    VertexSet s;
    if (last > first) {
        s.members_.resize(last - first);
        std::iota(s.members_.begin(), s.members_.end(), first);
    }
    return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

VertexSet VertexSet::set_union(const VertexSet& other) const {
    VertexSet out;
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out.members_));
    return out;
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
    VertexSet out;
    std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out.members_));
    return out;
}

VertexSet VertexSet::set_intersection(const VertexSet& other) const {
    VertexSet out;
    std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out.members_));
    return out;
}

Hypergraph::Hypergraph(unsigned k, unsigned n) : Hypergraph(k, n, {}) {}

Hypergraph::Hypergraph(unsigned k, unsigned n, std::vector<std::vector<Vertex>> edges) : k_(k), n_(n) {
    if (k < 2) throw InvalidQuery("uniformity k must be at least 2");
    for (auto& e : edges) {
        if (e.size() != k) {
            throw InvalidQuery("edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(k));
        }
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw InvalidQuery("edge repeats a vertex");
        if (e.back() >= n) throw InvalidQuery("edge vertex " + std::to_string(e.back()) + " out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (edges.size() * k >= std::numeric_limits<std::uint32_t>::max()) throw InvalidQuery("too many edges");
    edges_.reserve(edges.size() * k);
    for (const auto& e : edges) edges_.insert(edges_.end(), e.begin(), e.end());
    build_index();
}

void Hypergraph::build_index() {
    const unsigned r = k_ - 1;
    binom_ = BinomialTable(std::max(n_, 1u), k_);
    const std::size_t m = edge_count();

    std::uint64_t key_space = 0;
    try {
        key_space = binomial(n_, r);
    } catch (const std::overflow_error&) {
        key_space = std::numeric_limits<std::uint64_t>::max();
    }
    dense_ = key_space <= kDenseLimit;

    std::vector<Vertex> sub(r);
    auto for_each_facet = [&](auto&& fn) {
        for (std::size_t i = 0; i < m; ++i) {
            auto e = edge(i);
            for (unsigned skip = 0; skip < k_; ++skip) {
                unsigned t = 0;
                for (unsigned j = 0; j < k_; ++j)
                    if (j != skip) sub[t++] = e[j];
                fn(binom_.rank(sub), e[skip]);
            }
        }
    };

    if (dense_) {
        offsets_.assign(key_space + 1, 0);
        for_each_facet([&](std::uint64_t rank, Vertex) { ++offsets_[rank + 1]; });
        std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
        ext_.resize(m * k_);
        std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
        for_each_facet([&](std::uint64_t rank, Vertex x) { ext_[cursor[rank]++] = x; });
        for (std::size_t b = 0; b + 1 < offsets_.size(); ++b) {
            std::sort(ext_.begin() + offsets_[b], ext_.begin() + offsets_[b + 1]);
        }
    } else {
        std::vector<std::pair<std::uint64_t, Vertex>> pairs;
        pairs.reserve(m * k_);
        for_each_facet([&](std::uint64_t rank, Vertex x) { pairs.emplace_back(rank, x); });
        std::sort(pairs.begin(), pairs.end());
        keys_.clear();
        offsets_.clear();
        ext_.clear();
        ext_.reserve(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (i == 0 || pairs[i].first != pairs[i - 1].first) {
                keys_.push_back(pairs[i].first);
                offsets_.push_back(static_cast<std::uint32_t>(i));
            }
            ext_.push_back(pairs[i].second);
        }
        offsets_.push_back(static_cast<std::uint32_t>(pairs.size()));
    }

    incidence_offsets_.assign(std::size_t(n_) + 1, 0);
    for (Vertex v : edges_) ++incidence_offsets_[v + 1];
    std::partial_sum(incidence_offsets_.begin(), incidence_offsets_.end(), incidence_offsets_.begin());
    incidence_.resize(edges_.size());
    std::vector<std::uint32_t> cursor(incidence_offsets_.begin(), incidence_offsets_.end() - 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (Vertex v : edge(i)) incidence_[cursor[v]++] = static_cast<std::uint32_t>(i);
    }
}

std::size_t Hypergraph::bucket_of(std::span<const Vertex> sorted) const {
    const std::uint64_t rank = binom_.rank(sorted);
    if (dense_) return rank;
    auto it = std::lower_bound(keys_.begin(), keys_.end(), rank);
    if (it == keys_.end() || *it != rank) return kNoBucket;
    return static_cast<std::size_t>(it - keys_.begin());
}

std::span<const Vertex> Hypergraph::extensions(std::span<const Vertex> sorted) const {
    const std::size_t b = bucket_of(sorted);
    if (b == kNoBucket) return {};
    return {ext_.data() + offsets_[b], offsets_[b + 1] - offsets_[b]};
}

bool Hypergraph::has_edge(std::span<const Vertex> sorted) const {
    auto ext = extensions(sorted.first(k_ - 1));
    return std::binary_search(ext.begin(), ext.end(), sorted[k_ - 1]);
}

std::vector<std::vector<Vertex>> Hypergraph::edge_list() const {
    std::vector<std::vector<Vertex>> out;
    out.reserve(edge_count());
    for (std::size_t i = 0; i < edge_count(); ++i) out.emplace_back(edge(i).begin(), edge(i).end());
    return out;
}

std::vector<std::size_t> Hypergraph::positive_codegrees() const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b + 1 < offsets_.size(); ++b) {
        const std::size_t d = offsets_[b + 1] - offsets_[b];
        if (d > 0) out.push_back(d);
    }
    return out;
}

std::size_t Hypergraph::positive_set_count() const {
    std::size_t count = 0;
    for (std::size_t b = 0; b + 1 < offsets_.size(); ++b) count += offsets_[b + 1] > offsets_[b];
    return count;
}

void require_vertices(const Hypergraph& h, std::span<const Vertex> s, const char* what) {
    for (Vertex v : s) {
        if (v >= h.n()) throw InvalidQuery(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
    }
}

std::size_t degree(const Hypergraph& h, const VertexSet& s) {
    require_vertices(h, s.span(), "degree");
    if (s.size() > h.k()) throw InvalidQuery("degree: |S| exceeds k");
    if (s.size() == h.k()) return h.has_edge(s.span()) ? 1 : 0;
    if (s.size() + 1 == h.k()) return h.codegree(s.span());
    std::size_t count = 0;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        if (std::includes(e.begin(), e.end(), s.begin(), s.end())) ++count;
    }
    return count;
}

std::size_t degree_into(const Hypergraph& h, const VertexSet& s, const VertexSet& w) {
    require_vertices(h, s.span(), "degree_into");
    if (s.size() + 1 != h.k()) throw InvalidQuery("degree_into: |S| must be k-1");
    auto ext = h.extensions(s.span());
    std::size_t count = 0;
    for (Vertex x : ext) count += w.contains(x);
    return count;
}

VertexSet neighborhood(const Hypergraph& h, const VertexSet& s) {
    require_vertices(h, s.span(), "neighborhood");
    if (s.size() + 1 != h.k()) throw InvalidQuery("neighborhood: |S| must be k-1");
    auto ext = h.extensions(s.span());
    return VertexSet(std::vector<Vertex>(ext.begin(), ext.end()));
}

std::size_t min_codegree(const Hypergraph& h) {
    if (h.n() + 1 < h.k()) throw InvalidQuery("min_codegree: fewer than k-1 vertices");
    const std::uint64_t total = binomial(h.n(), h.k() - 1);
    const auto positive = h.positive_codegrees();
    if (positive.size() < total) return 0;
    return *std::min_element(positive.begin(), positive.end());
}

std::optional<std::size_t> min_positive_codegree(const Hypergraph& h) {
    const auto positive = h.positive_codegrees();
    if (positive.empty()) return std::nullopt;
    return *std::min_element(positive.begin(), positive.end());
}

VertexSet isolated_vertices(const Hypergraph& h) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < h.n(); ++v)
        if (h.incident_edges(v).empty()) out.push_back(v);
    return VertexSet(std::move(out));
}

bool is_strong_independent(const Hypergraph& h, const VertexSet& s) {
    require_vertices(h, s.span(), "is_strong_independent");
    for (Vertex v : s) {
        for (auto ei : h.incident_edges(v)) {
            for (Vertex u : h.edge(ei))
                if (u != v && s.contains(u)) return false;
        }
    }
    return true;
}

InducedSubgraph induced_subgraph(const Hypergraph& h, const VertexSet& u) {
    require_vertices(h, u.span(), "induced_subgraph");
    std::vector<Vertex> relabel(h.n(), std::numeric_limits<Vertex>::max());
    for (std::size_t i = 0; i < u.size(); ++i) relabel[u[i]] = static_cast<Vertex>(i);
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return u.contains(v); })) {
            std::vector<Vertex> mapped;
            mapped.reserve(e.size());
            for (Vertex v : e) mapped.push_back(relabel[v]);
            edges.push_back(std::move(mapped));
        }
    }
    return {Hypergraph(h.k(), static_cast<unsigned>(u.size()), std::move(edges)), u.members()};
}

}  // namespace hyperham
