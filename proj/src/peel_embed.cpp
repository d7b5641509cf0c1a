#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "hyperham/connect_embed.hpp"
#include "hyperham/shadow.hpp"

namespace hyperham {

PeelResult peel_to_positive_codegree(const Hypergraph& h, const Rational& tau) {
    const unsigned k = h.k();
    const std::size_t edges = h.edge_count();
    BinomialTable binom(h.n() + 1, k);
    auto rank = [&](std::span<const Vertex> s) { return binom.rank(s); };

    // (k-1)-set rank -> live edges containing it
    std::map<std::uint64_t, std::vector<std::size_t>> holders;
    std::vector<std::vector<std::uint64_t>> faces(edges);
    for (std::size_t i = 0; i < edges; ++i) {
        for_each_sub_combination(h.edge(i), k - 1, [&](std::span<const Vertex> s) {
            const auto r = rank(s);
            holders[r].push_back(i);
            faces[i].push_back(r);
        });
    }
    std::map<std::uint64_t, std::size_t> deg;
    std::set<std::uint64_t> eligible;
    for (auto& [r, list] : holders) {
        deg[r] = list.size();
        if (Rational(list.size()) <= tau) eligible.insert(r);
    }
    std::vector<char> alive(edges, 1);
    std::size_t live_edges = edges;
    std::size_t live_sets = deg.size();

    PeelResult res;
    auto record = [&] {
        if (live_sets > 0) res.ratio_trace.push_back(Rational(k * live_edges) / Rational(live_sets));
    };
    record();
    while (!eligible.empty()) {
        const auto s = *eligible.begin();
        eligible.erase(eligible.begin());
        for (auto e : holders[s]) {
            if (!alive[e]) continue;
            alive[e] = 0;
            --live_edges;
            for (auto f : faces[e]) {
                auto& d = deg[f];
                --d;
                if (d == 0) {
                    --live_sets;
                    eligible.erase(f);
                } else if (Rational(d) <= tau) {
                    eligible.insert(f);
                }
            }
        }
        ++res.deletions;
        record();
    }

    std::vector<std::vector<Vertex>> kept;
    for (std::size_t i = 0; i < edges; ++i)
        if (alive[i]) kept.emplace_back(h.edge(i).begin(), h.edge(i).end());
    res.graph = Hypergraph(k, h.n(), std::move(kept));

    // Once k*tau <= |I|/|S| every deletion keeps the ratio from falling.
    if (!res.ratio_trace.empty() && Rational(k) * tau <= res.ratio_trace.front() &&
        !ratio_non_decreasing(res.ratio_trace))
        throw std::logic_error("peel_to_positive_codegree: incidence ratio decreased");
    return res;
}

bool ratio_non_decreasing(const std::vector<Rational>& trace) {
    return std::is_sorted(trace.begin(), trace.end());
}

Rational density(const Hypergraph& h, const std::vector<VertexSet>& classes) {
    if (classes.size() != h.k()) throw ContractViolation("density: need exactly k classes");
    std::vector<int> cls(h.n(), -1);
    Rational denom(1);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].empty()) throw ContractViolation("density: empty class");
        require_vertices(h, classes[i].span(), "density");
        for (Vertex v : classes[i]) {
            if (cls[v] != -1) throw ContractViolation("density: classes overlap");
            cls[v] = static_cast<int>(i);
        }
        denom *= static_cast<unsigned long>(classes[i].size());
    }
    std::size_t crossing = 0;
    std::vector<char> hit(h.k());
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        std::fill(hit.begin(), hit.end(), 0);
        bool ok = true;
        for (Vertex v : h.edge(e)) {
            if (cls[v] < 0 || hit[cls[v]]) {
                ok = false;
                break;
            }
            hit[cls[v]] = 1;
        }
        if (ok) ++crossing;
    }
    return Rational(crossing) / denom;
}

std::vector<std::size_t> unbalanced_sizes(unsigned k, unsigned l, std::size_t n) {
    std::vector<std::size_t> sizes(k, 0);
    for (auto c : unbalanced_classes(k, l, n)) ++sizes[c];
    return sizes;
}

EmbedResult embed_partite_path(const Hypergraph& h, const std::vector<VertexSet>& classes, std::size_t path_vertices,
                               unsigned l, const EmbedOptions& opt) {
    const unsigned k = h.k();
    if (classes.size() != k) throw ContractViolation("embed_partite_path: need exactly k classes");
    if (l < 1 || l >= k || path_vertices < k || path_vertices % (k - l) != l % (k - l))
        throw ContractViolation("embed_partite_path: no l-path has that many vertices");
    std::size_t m = classes[0].size();
    for (const auto& c : classes) {
        if (opt.check_hypothesis && c.size() != m) throw ContractViolation("embed_partite_path: classes differ in size");
        m = std::min(m, c.size());
    }
    const Rational d = opt.d ? *opt.d : density(h, classes);

    EmbedResult res;
    res.tau = d * static_cast<unsigned long>(m) / k;
    const auto sizes = unbalanced_sizes(k, l, path_vertices);
    for (unsigned i = 0; i < k; ++i) {
        if (opt.check_hypothesis && Rational(sizes[i]) > res.tau)
            throw ContractViolation("embed_partite_path: a target class exceeds d*m/k");
        if (sizes[i] > classes[i].size()) return res;
    }

    // Crossing edges only, then peel.
    std::vector<int> cls(h.n(), -1);
    for (unsigned i = 0; i < k; ++i)
        for (Vertex v : classes[i]) {
            if (cls[v] != -1) throw ContractViolation("embed_partite_path: classes overlap");
            cls[v] = static_cast<int>(i);
        }
    std::vector<std::vector<Vertex>> crossing;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        std::vector<char> hit(k, 0);
        bool ok = true;
        for (Vertex v : h.edge(e)) {
            if (cls[v] < 0 || hit[cls[v]]) {
                ok = false;
                break;
            }
            hit[cls[v]] = 1;
        }
        if (ok) crossing.emplace_back(h.edge(e).begin(), h.edge(e).end());
    }
    const auto peeled = peel_to_positive_codegree(Hypergraph(k, h.n(), std::move(crossing)), res.tau).graph;
    res.peeled_edges = peeled.edge_count();
    if (peeled.edge_count() == 0) return res;

    const auto pattern = unbalanced_classes(k, l, path_vertices);
    const ShadowIndex shadow(peeled);
    std::mt19937_64 rng(opt.seed);
    constexpr Vertex unset = ~Vertex{0};
    for (unsigned attempt = 0; attempt < opt.attempts; ++attempt) {
        std::vector<Vertex> image(path_vertices, unset);
        std::vector<char> used(h.n(), 0);
        // First edge: a random peeled edge laid out by class.
        const auto first = peeled.edge(rng() % peeled.edge_count());
        bool ok = true;
        for (std::size_t p = 0; p < k; ++p) {
            auto it = std::find_if(first.begin(), first.end(),
                                   [&](Vertex v) { return cls[v] == static_cast<int>(pattern[p]); });
            if (it == first.end() || used[*it]) {
                ok = false;
                break;
            }
            image[p] = *it;
            used[*it] = 1;
        }
        for (std::size_t p = k; p < path_vertices && ok; ++p) {
            // Earliest window containing p; later windows see a subset of it.
            const std::size_t w = (p - k + 1 + (k - l) - 1) / (k - l);
            std::vector<Vertex> s;
            for (std::size_t q = w * (k - l); q < p; ++q) s.push_back(image[q]);
            std::vector<Vertex> valid;
            for (Vertex z : classes[pattern[p]]) {
                if (used[z]) continue;
                s.push_back(z);
                if (shadow.positive(s)) valid.push_back(z);
                s.pop_back();
            }
            if (valid.empty()) {
                ok = false;
                break;
            }
            image[p] = valid[rng() % valid.size()];
            used[image[p]] = 1;
        }
        if (!ok) continue;
        LPath path(k, l, image);
        if (!validate_lpath(h, path)) throw std::logic_error("embed_partite_path: invalid embedding");
        res.path = std::move(path);
        return res;
    }
    return res;
}

}  // namespace hyperham
