#include "hyperham/search.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <random>

#include "hyperham/shadow.hpp"

namespace hyperham {

std::string to_string(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::Found: return "found";
        case SearchOutcome::None: return "none";
        case SearchOutcome::BudgetExhausted: return "budget";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;
constexpr Vertex kUnset = ~Vertex{0};

/// Positions 0..P-1 to be mapped injectively to vertices; every window must
/// become an edge. Fixed positions are pre-assigned, the rest draw from pool.
struct Template {
    unsigned k = 0;
    std::size_t positions = 0;
    std::vector<std::vector<std::size_t>> windows;
    std::vector<Vertex> fixed;  // kUnset for free positions
    std::vector<Vertex> pool;
    /// Optional ordering constraint image[first] < image[second].
    std::optional<std::pair<std::size_t, std::size_t>> less_than;
};

enum class Status { Found, None, Exhausted };

class Engine {
public:
    Engine(const Hypergraph& h, const ShadowIndex* shadow, const Template& t, const SearchOptions& opt,
           Clock::time_point start, std::uint64_t node_limit)
        : h_(h), shadow_(shadow), t_(t), opt_(opt), start_(start), node_limit_(node_limit) {
        windows_of_.resize(t.positions);
        for (std::size_t w = 0; w < t.windows.size(); ++w)
            for (auto p : t.windows[w]) windows_of_[p].push_back(w);
        for (std::size_t p = 0; p < t.positions; ++p)
            if (t.fixed[p] == kUnset) free_.push_back(p);
        std::vector<std::size_t> order(t.positions, 0);
        for (std::size_t i = 0; i < free_.size(); ++i) order[free_[i]] = i + 1;
        complete_at_.resize(t.positions);
        for (std::size_t w = 0; w < t.windows.size(); ++w) {
            std::size_t last = 0;
            bool any = false;
            for (auto p : t.windows[w])
                if (order[p] >= last && t.fixed[p] == kUnset) last = order[p], any = true;
            if (any) complete_at_[free_[last - 1]].push_back(w);
            else fully_fixed_.push_back(w);
        }
        image_ = t.fixed;
        used_.assign(h.n(), 0);
        in_pool_.assign(h.n(), 0);
        for (Vertex v : t.pool) in_pool_[v] = 1;
        for (Vertex v : t.fixed)
            if (v != kUnset) used_[v] = 1;
        if (opt.shuffle_seed) rng_.seed(*opt.shuffle_seed);
    }

    /// Rejects templates whose fixed part already violates a window.
    bool fixed_part_ok() const {
        for (auto w : fully_fixed_)
            if (!window_is_edge(w)) return false;
        for (std::size_t p = 0; p < t_.positions; ++p)
            if (t_.fixed[p] != kUnset && !position_ok(p, false)) return false;
        return true;
    }

    std::vector<Vertex> candidates(std::size_t idx) {
        const std::size_t p = free_[idx];
        std::vector<Vertex> out;
        for (auto w : windows_of_[p]) {
            std::vector<Vertex> s;
            for (auto q : t_.windows[w])
                if (q != p && image_[q] != kUnset) s.push_back(image_[q]);
            if (s.size() + 1 == t_.k) {
                std::sort(s.begin(), s.end());
                for (Vertex v : h_.extensions(s))
                    if (in_pool_[v] && !used_[v]) out.push_back(v);
                shuffle(out);
                return out;
            }
        }
        for (Vertex v : t_.pool)
            if (!used_[v]) out.push_back(v);
        shuffle(out);
        return out;
    }

    Status run(std::size_t idx) {
        if (idx == free_.size()) return Status::Found;
        for (Vertex c : candidates(idx)) {
            const auto st = try_branch(idx, c);
            if (st != Status::None) return st;
        }
        return Status::None;
    }

    Status try_branch(std::size_t idx, Vertex c) {
        if (++nodes_ > node_limit_) return Status::Exhausted;
        if ((nodes_ & 4095) == 0 &&
            std::chrono::duration<double>(Clock::now() - start_).count() > opt_.budget.time_limit)
            return Status::Exhausted;
        const std::size_t p = free_[idx];
        image_[p] = c;
        used_[c] = 1;
        Status st = Status::None;
        if (position_ok(p, true)) st = run(idx + 1);
        if (st != Status::Found) {
            image_[p] = kUnset;
            used_[c] = 0;
        }
        return st;
    }

    std::size_t free_count() const { return free_.size(); }
    std::uint64_t nodes() const { return nodes_; }
    const std::vector<Vertex>& image() const { return image_; }

private:
    bool window_is_edge(std::size_t w) const {
        std::vector<Vertex> s;
        for (auto q : t_.windows[w]) s.push_back(image_[q]);
        std::sort(s.begin(), s.end());
        return h_.has_edge(s);
    }

    bool position_ok(std::size_t p, bool check_complete) const {
        if (t_.less_than) {
            auto [a, b] = *t_.less_than;
            if ((p == a || p == b) && image_[a] != kUnset && image_[b] != kUnset && image_[a] >= image_[b])
                return false;
        }
        if (check_complete)
            for (auto w : complete_at_[p])
                if (!window_is_edge(w)) return false;
        for (auto w : windows_of_[p]) {
            std::vector<Vertex> s;
            std::size_t missing = 0;
            for (auto q : t_.windows[w]) {
                if (image_[q] != kUnset) s.push_back(image_[q]);
                else ++missing;
            }
            if (missing == 0) continue;
            if (opt_.shadow_prune && shadow_ && !shadow_->positive(s)) return false;
            if (opt_.frontier_prune && missing == 1) {
                std::sort(s.begin(), s.end());
                auto ext = h_.extensions(s);
                if (std::none_of(ext.begin(), ext.end(), [&](Vertex v) { return in_pool_[v] && !used_[v]; }))
                    return false;
            }
        }
        return true;
    }

    void shuffle(std::vector<Vertex>& v) {
        if (!opt_.shuffle_seed) return;
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng_() % i]);
    }

    const Hypergraph& h_;
    const ShadowIndex* shadow_;
    const Template& t_;
    const SearchOptions& opt_;
    Clock::time_point start_;
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
    std::mt19937_64 rng_;
    std::vector<std::size_t> free_;
    std::vector<std::vector<std::size_t>> windows_of_;
    std::vector<std::vector<std::size_t>> complete_at_;
    std::vector<std::size_t> fully_fixed_;
    std::vector<Vertex> image_;
    std::vector<char> used_;
    std::vector<char> in_pool_;
};

struct TemplateResult {
    Status status = Status::None;
    std::vector<Vertex> image;
    std::uint64_t nodes = 0;
};

TemplateResult solve_template(const Hypergraph& h, const ShadowIndex* shadow, const Template& t,
                              const SearchOptions& opt, Clock::time_point start, std::uint64_t node_limit) {
    Engine root(h, shadow, t, opt, start, node_limit);
    if (!root.fixed_part_ok()) return {};
    if (root.free_count() == 0) return {Status::Found, root.image(), 0};
    if (opt.workers <= 1) {
        const auto st = root.run(0);
        return {st, st == Status::Found ? root.image() : std::vector<Vertex>{}, root.nodes()};
    }
    // Parallel: every root branch explored by its own engine, combined in
    // candidate order so the answer matches the sequential search.
    const auto cands = root.candidates(0);
    std::vector<TemplateResult> branch(cands.size());
    for (std::size_t lo = 0; lo < cands.size(); lo += opt.workers) {
        std::vector<std::future<TemplateResult>> jobs;
        for (std::size_t i = lo; i < std::min(cands.size(), lo + opt.workers); ++i) {
            jobs.push_back(std::async(std::launch::async, [&, i] {
                Engine e(h, shadow, t, opt, start, node_limit);
                const auto st = e.try_branch(0, cands[i]);
                return TemplateResult{st, st == Status::Found ? e.image() : std::vector<Vertex>{}, e.nodes()};
            }));
        }
        for (std::size_t i = lo; i < lo + jobs.size(); ++i) branch[i] = jobs[i - lo].get();
    }
    TemplateResult out;
    for (auto& b : branch) {
        out.nodes += b.nodes;
        if (out.status != Status::None) continue;
        if (b.status != Status::None) {
            out.status = b.status;
            out.image = std::move(b.image);
        }
    }
    return out;
}

double elapsed(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

SearchOutcome outcome_of(Status s) {
    switch (s) {
        case Status::Found: return SearchOutcome::Found;
        case Status::None: return SearchOutcome::None;
        case Status::Exhausted: return SearchOutcome::BudgetExhausted;
    }
    return SearchOutcome::None;
}

std::vector<std::vector<std::size_t>> stride_windows(unsigned k, unsigned l, std::size_t positions, std::size_t count,
                                                     bool wrap) {
    std::vector<std::vector<std::size_t>> out(count);
    for (std::size_t i = 0; i < count; ++i)
        for (unsigned j = 0; j < k; ++j) {
            const std::size_t p = i * (k - l) + j;
            out[i].push_back(wrap ? p % positions : p);
        }
    return out;
}

}  // namespace

SearchResult<LCycle> find_hamilton_lcycle(const Hypergraph& h, unsigned l, const SearchOptions& opt) {
    const auto start = Clock::now();
    const unsigned k = h.k(), n = h.n();
    if (l < 1 || l >= k) throw ContractViolation("find_hamilton_lcycle: need 1 <= l < k");
    SearchResult<LCycle> res;
    if (n % (k - l) != 0 || n <= k || !isolated_vertices(h).empty()) {
        res.seconds = elapsed(start);
        return res;
    }
    ShadowIndex shadow(h);
    Template t;
    t.k = k;
    t.positions = n;
    t.windows = stride_windows(k, l, n, n / (k - l), true);
    for (Vertex v = 1; v < n; ++v) t.pool.push_back(v);
    if (k - l == 1) t.less_than = std::pair<std::size_t, std::size_t>{1, n - 1};

    Status status = Status::None;
    for (unsigned r = 0; r < k - l && status == Status::None; ++r) {
        t.fixed.assign(n, kUnset);
        t.fixed[r] = 0;
        const auto left = opt.budget.node_limit - std::min(opt.budget.node_limit, res.nodes);
        auto tr = solve_template(h, opt.shadow_prune ? &shadow : nullptr, t, opt, start, left);
        res.nodes += tr.nodes;
        status = tr.status;
        if (status == Status::Found) {
            LCycle c(k, l, tr.image);
            if (!is_hamilton_lcycle(h, c)) throw std::logic_error("find_hamilton_lcycle: unsound result");
            res.value = std::move(c);
        }
    }
    res.outcome = outcome_of(status);
    res.seconds = elapsed(start);
    return res;
}

SearchResult<LPath> find_lpath_between(const Hypergraph& h, const OrderedEnd& x, const OrderedEnd& y, std::size_t m,
                                       const VertexSet& allowed, const SearchOptions& opt) {
    const auto start = Clock::now();
    const unsigned k = h.k();
    const auto l = static_cast<unsigned>(x.size());
    if (l < 1 || l >= k || y.size() != l) throw ContractViolation("find_lpath_between: ends must be l-tuples, 1 <= l < k");
    if (m < 1) throw ContractViolation("find_lpath_between: length must be positive");
    require_vertices(h, x.span(), "find_lpath_between");
    require_vertices(h, y.span(), "find_lpath_between");
    require_vertices(h, allowed.span(), "find_lpath_between");
    const auto xs = x.as_set(), ys = y.as_set();
    if (xs.size() != l || ys.size() != l || !xs.set_intersection(ys).empty())
        throw ContractViolation("find_lpath_between: ends must be disjoint tuples of distinct vertices");

    SearchResult<LPath> res;
    const std::size_t positions = m * (k - l) + l;
    const auto pool = allowed.set_difference(xs.set_union(ys));
    if (positions < 2 * l || pool.size() < positions - 2 * l) {
        res.seconds = elapsed(start);
        return res;
    }
    Template t;
    t.k = k;
    t.positions = positions;
    t.windows = stride_windows(k, l, positions, m, false);
    t.fixed.assign(positions, kUnset);
    for (unsigned i = 0; i < l; ++i) {
        t.fixed[i] = x[i];
        t.fixed[positions - l + i] = y[i];
    }
    t.pool = pool.members();
    std::optional<ShadowIndex> shadow;
    if (opt.shadow_prune) shadow.emplace(h);
    auto tr = solve_template(h, shadow ? &*shadow : nullptr, t, opt, start, opt.budget.node_limit);
    res.nodes = tr.nodes;
    res.outcome = outcome_of(tr.status);
    if (tr.status == Status::Found) {
        LPath p(k, l, tr.image);
        if (!validate_lpath(h, p)) throw std::logic_error("find_lpath_between: unsound result");
        res.value = std::move(p);
    }
    res.seconds = elapsed(start);
    return res;
}

}  // namespace hyperham
