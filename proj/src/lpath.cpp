#include "hyperham/lpath.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "hyperham/params.hpp"

namespace hyperham {

namespace {

bool all_distinct(const std::vector<Vertex>& v) {
    std::vector<Vertex> s(v);
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

std::string format_line(unsigned k, unsigned l, char kind, const std::vector<Vertex>& v) {
    std::ostringstream os;
    os << k << ' ' << l << ' ' << kind;
    for (Vertex x : v) os << ' ' << x;
    return os.str();
}

bool window_is_edge(const Hypergraph& h, std::vector<Vertex>& buf) {
    std::sort(buf.begin(), buf.end());
    return h.has_edge(buf);
}

std::vector<std::vector<Vertex>> blocks_of(const std::vector<Vertex>& seq, unsigned block) {
    std::vector<std::vector<Vertex>> out;
    for (std::size_t start = 0; start < seq.size(); start += block) {
        const std::size_t stop = std::min(seq.size(), start + block);
        out.emplace_back(seq.begin() + static_cast<std::ptrdiff_t>(start), seq.begin() + static_cast<std::ptrdiff_t>(stop));
    }
    return out;
}

}  // namespace

LPath::LPath(unsigned k, unsigned l, std::vector<Vertex> vertices) : k_(k), l_(l), vertices_(std::move(vertices)) {
    if (l < 1 || l >= k) throw ContractViolation("LPath: need 1 <= l < k");
    const std::size_t n = vertices_.size();
    if (n < k || (n - l) % (k - l) != 0) {
        throw ContractViolation("LPath: " + std::to_string(n) + " vertices is not m(k-l)+l for any m >= 1");
    }
    if (!all_distinct(vertices_)) throw ContractViolation("LPath: repeated vertex");
}

std::string LPath::to_line() const { return format_line(k_, l_, 'p', vertices_); }

LCycle::LCycle(unsigned k, unsigned l, std::vector<Vertex> vertices) : k_(k), l_(l) {
    if (l < 1 || l >= k) throw ContractViolation("LCycle: need 1 <= l < k");
    const std::size_t n = vertices.size();
    if (n <= k || n % (k - l) != 0) {
        throw ContractViolation("LCycle: need more than k vertices and (k-l) | n");
    }
    if (!all_distinct(vertices)) throw ContractViolation("LCycle: repeated vertex");
    vertices_ = canonical_cycle_order(k, l, std::move(vertices));
}

std::vector<Vertex> LCycle::window(std::size_t i) const {
    std::vector<Vertex> w(k_);
    const std::size_t n = vertices_.size();
    for (unsigned j = 0; j < k_; ++j) w[j] = vertices_[(i * (k_ - l_) + j) % n];
    return w;
}

std::string LCycle::to_line() const { return format_line(k_, l_, 'c', vertices_); }

std::vector<Vertex> canonical_cycle_order(unsigned k, unsigned l, std::vector<Vertex> order) {
    const std::size_t n = order.size();
    const std::size_t stride = k - l;
    if (n == 0) return order;
    std::vector<Vertex> best = order;
    std::vector<Vertex> cand(n);
    auto consider = [&](const std::vector<Vertex>& base) {
        for (std::size_t r = 0; r < n; r += stride) {
            for (std::size_t i = 0; i < n; ++i) cand[i] = base[(i + r) % n];
            if (cand < best) best = cand;
        }
    };
    consider(order);
    // Reversal moves window starts to -k (mod k-l); realign before rotating.
    std::vector<Vertex> rev(order.rbegin(), order.rend());
    const std::size_t shift = (stride - (k % stride)) % stride;
    std::vector<Vertex> aligned(n);
    for (std::size_t i = 0; i < n; ++i) aligned[i] = rev[(i + shift) % n];
    consider(aligned);
    return best;
}

bool validate_lpath(const Hypergraph& h, const LPath& p) {
    require_vertices(h, p.vertices(), "validate_lpath");
    if (p.k() != h.k()) return false;
    std::vector<Vertex> buf(p.k());
    for (std::size_t i = 0; i < p.length(); ++i) {
        auto w = p.window(i);
        buf.assign(w.begin(), w.end());
        if (!window_is_edge(h, buf)) return false;
    }
    return true;
}

std::pair<OrderedEnd, OrderedEnd> ends(const LPath& p) {
    const auto& v = p.vertices();
    return {OrderedEnd(std::vector<Vertex>(v.begin(), v.begin() + p.l())),
            OrderedEnd(std::vector<Vertex>(v.end() - p.l(), v.end()))};
}

LPath concatenate(const LPath& p, const LPath& q) {
    if (p.k() != q.k() || p.l() != q.l()) throw ContractViolation("concatenate: paths differ in (k, l)");
    const auto [pa, pb] = ends(p);
    const auto [qa, qb] = ends(q);
    if (pb != qa) throw ContractViolation("concatenate: last end of P is not the first end of Q");
    const VertexSet shared = VertexSet(p.vertices()).set_intersection(VertexSet(q.vertices()));
    if (shared != pb.as_set()) throw ContractViolation("concatenate: paths share a vertex outside the common end");
    std::vector<Vertex> merged(p.vertices());
    merged.insert(merged.end(), q.vertices().begin() + p.l(), q.vertices().end());
    return LPath(p.k(), p.l(), std::move(merged));
}

bool is_hamilton_lcycle(const Hypergraph& h, unsigned l, std::span<const Vertex> order) {
    const unsigned k = h.k();
    const std::size_t n = h.n();
    if (l < 1 || l >= k) return false;
    if (order.size() != n || n <= k || n % (k - l) != 0) return false;
    std::vector<bool> seen(n, false);
    for (Vertex v : order) {
        if (v >= n || seen[v]) return false;
        seen[v] = true;
    }
    std::vector<Vertex> buf(k);
    for (std::size_t i = 0; i < n / (k - l); ++i) {
        for (unsigned j = 0; j < k; ++j) buf[j] = order[(i * (k - l) + j) % n];
        if (!window_is_edge(h, buf)) return false;
    }
    return true;
}

bool is_hamilton_lcycle(const Hypergraph& h, const LCycle& c) {
    return c.k() == h.k() && is_hamilton_lcycle(h, c.l(), c.vertices());
}

std::vector<std::vector<Vertex>> cover_partition(const LPath& p) {
    return blocks_of(p.vertices(), ctmod(p.k(), p.l()));
}

std::vector<std::vector<Vertex>> cover_partition(const LCycle& c) {
    return blocks_of(c.vertices(), ctmod(c.k(), c.l()));
}

SisWitness max_sis_in_path(unsigned k, unsigned l, std::size_t n) {
    if (l < 1 || l >= k || n < k || (n - l) % (k - l) != 0) {
        throw ContractViolation("max_sis_in_path: n must be m(k-l)+l with m >= 1");
    }
    const std::size_t block = ctmod(k, l);
    SisWitness w;
    w.bound = (n + block - 1) / block;
    for (std::size_t i = 0; i < w.bound; ++i) {
        const std::size_t pos = (k - l - 1) + i * block;
        if (pos < n) w.positions.push_back(pos);
    }
    w.attains_bound = w.positions.size() == w.bound;
    return w;
}

std::vector<unsigned> unbalanced_classes(unsigned k, unsigned l, std::size_t n) {
    const auto witness = max_sis_in_path(k, l, n);
    std::vector<unsigned> cls(n, 0);
    std::vector<bool> in_first(n, false);
    for (auto pos : witness.positions) in_first[pos] = true;
    std::size_t j = 0;  // 1-based rank among the remaining positions
    for (std::size_t pos = 0; pos < n; ++pos) {
        if (in_first[pos]) continue;
        ++j;
        // u_j joins U_i with i = j mod (k-1), i in [2, k]
        cls[pos] = static_cast<unsigned>((j + (k - 1) - 2) % (k - 1)) + 1;
    }
    return cls;
}

std::vector<VertexSet> unbalanced_partition(const LPath& p) {
    const auto cls = unbalanced_classes(p.k(), p.l(), p.size());
    std::vector<std::vector<Vertex>> parts(p.k());
    for (std::size_t pos = 0; pos < p.size(); ++pos) parts[cls[pos]].push_back(p.vertices()[pos]);
    std::vector<VertexSet> out;
    out.reserve(p.k());
    for (auto& part : parts) out.emplace_back(std::move(part));
    return out;
}

LPath abstract_path(unsigned k, unsigned l, std::size_t m) {
    if (m < 1) throw ContractViolation("abstract_path: length must be at least 1");
    if (l < 1 || l >= k) throw ContractViolation("abstract_path: need 1 <= l < k");
    std::vector<Vertex> v(m * (k - l) + l);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<Vertex>(i);
    return LPath(k, l, std::move(v));
}

}  // namespace hyperham
