#include <algorithm>
#include <bit>
#include <chrono>

#include "hyperham/search.hpp"

namespace hyperham {

namespace {

using Clock = std::chrono::steady_clock;

/// Fixed-width bitset over the vertices of H.
class Bits {
public:
    explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
    void set(std::size_t i) { w_[i / 64] |= 1ULL << (i % 64); }
    void reset(std::size_t i) { w_[i / 64] &= ~(1ULL << (i % 64)); }
    bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }
    bool none() const {
        return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    std::size_t count_and(const Bits& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
        return c;
    }
    Bits minus(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
        return r;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            for (auto x = w_[i]; x; x &= x - 1) f(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
    }

private:
    std::vector<std::uint64_t> w_;
};

/// Maximum independent set in the 2-section: a set is strongly independent
/// iff no two of its vertices share an edge.
class MisSolver {
public:
    MisSolver(const Hypergraph& h, const SearchBudget& budget, Clock::time_point start)
        : n_(h.n()), adj_(n_, Bits(n_)), budget_(budget), start_(start) {
        for (std::size_t i = 0; i < h.edge_count(); ++i) {
            auto e = h.edge(i);
            for (auto a : e)
                for (auto b : e)
                    if (a != b) adj_[a].set(b);
        }
    }

    bool solve() {
        Bits all(n_);
        for (std::size_t v = 0; v < n_; ++v) all.set(v);
        best_ = greedy(all);
        std::vector<Vertex> cur;
        return branch(all, cur);
    }

    const std::vector<Vertex>& best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::vector<Vertex> greedy(Bits p) const {
        std::vector<Vertex> out;
        while (!p.none()) {
            std::size_t pick = 0, low = SIZE_MAX;
            p.for_each([&](std::size_t v) {
                const auto d = adj_[v].count_and(p);
                if (d < low) low = d, pick = v;
            });
            out.push_back(static_cast<Vertex>(pick));
            p = p.minus(adj_[pick]);
            p.reset(pick);
        }
        return out;
    }

    /// Greedy clique cover of p: an independent set takes at most one vertex per clique.
    std::size_t clique_cover_bound(const Bits& p) const {
        std::vector<Bits> cliques;
        p.for_each([&](std::size_t v) {
            for (auto& c : cliques) {
                if (c.subset_of(adj_[v])) {
                    c.set(v);
                    return;
                }
            }
            cliques.emplace_back(n_);
            cliques.back().set(v);
        });
        return cliques.size();
    }

    // Returns false when the budget ran out.
    bool branch(Bits p, std::vector<Vertex>& cur) {
        if (++nodes_ > budget_.node_limit) return false;
        if ((nodes_ & 1023) == 0 &&
            std::chrono::duration<double>(Clock::now() - start_).count() > budget_.time_limit)
            return false;
        const std::size_t depth = cur.size();
        // Vertices with no neighbour left in p can always be taken.
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::size_t> lone;
            p.for_each([&](std::size_t v) {
                if (adj_[v].count_and(p) == 0) lone.push_back(v);
            });
            for (auto v : lone) {
                cur.push_back(static_cast<Vertex>(v));
                p.reset(v);
                changed = true;
            }
        }
        bool ok = true;
        if (p.none()) {
            if (cur.size() > best_.size()) best_ = cur;
        } else if (cur.size() + clique_cover_bound(p) > best_.size()) {
            std::size_t pick = 0, high = 0;
            p.for_each([&](std::size_t v) {
                const auto d = adj_[v].count_and(p);
                if (d > high) high = d, pick = v;
            });
            Bits with = p.minus(adj_[pick]);
            with.reset(pick);
            cur.push_back(static_cast<Vertex>(pick));
            ok = branch(with, cur);
            cur.pop_back();
            if (ok) {
                p.reset(pick);
                ok = branch(p, cur);
            }
        }
        cur.resize(depth);
        return ok;
    }

    std::size_t n_;
    std::vector<Bits> adj_;
    SearchBudget budget_;
    Clock::time_point start_;
    std::vector<Vertex> best_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

SearchResult<VertexSet> max_strong_independent_set(const Hypergraph& h, const SearchBudget& budget) {
    const auto start = Clock::now();
    MisSolver solver(h, budget, start);
    const bool done = solver.solve();
    SearchResult<VertexSet> res;
    res.outcome = done ? SearchOutcome::Found : SearchOutcome::BudgetExhausted;
    res.value = VertexSet(solver.best());
    res.nodes = solver.nodes();
    res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (!is_strong_independent(h, *res.value)) throw std::logic_error("max_strong_independent_set: unsound result");
    return res;
}

}  // namespace hyperham
