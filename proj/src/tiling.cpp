#include <algorithm>
#include <random>

#include "hyperham/connect_embed.hpp"
#include "hyperham/fractional_matching.hpp"

namespace hyperham {

std::string to_string(TileMode m) { return m == TileMode::Direct ? "direct" : "cluster"; }

namespace {

/// Greedy growth over the vertices not marked in `used`: start from an edge
/// inside the unused vertices, extend both ends until stuck, repeat.
std::vector<LPath> grow_paths(const Hypergraph& h, unsigned l, std::vector<char>& used, std::uint64_t seed) {
    const unsigned k = h.k();
    std::mt19937_64 rng(seed);
    auto shuffle = [&](auto& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
    };
    auto free_edge = [&](std::size_t e) {
        auto ed = h.edge(e);
        return std::none_of(ed.begin(), ed.end(), [&](Vertex v) { return used[v]; });
    };
    // Appends k-l fresh vertices completing an edge with the last l of seq.
    auto extend_back = [&](std::vector<Vertex>& seq) {
        std::vector<Vertex> tail(seq.end() - l, seq.end());
        std::sort(tail.begin(), tail.end());
        std::vector<std::vector<Vertex>> options;
        for (auto e : h.incident_edges(seq.back())) {
            auto ed = h.edge(e);
            if (!std::includes(ed.begin(), ed.end(), tail.begin(), tail.end())) continue;
            std::vector<Vertex> fresh;
            bool ok = true;
            for (Vertex v : ed) {
                if (std::binary_search(tail.begin(), tail.end(), v)) continue;
                if (used[v]) {
                    ok = false;
                    break;
                }
                fresh.push_back(v);
            }
            if (ok) options.push_back(std::move(fresh));
        }
        if (options.empty()) return false;
        auto pick = options[rng() % options.size()];
        shuffle(pick);
        for (Vertex v : pick) {
            seq.push_back(v);
            used[v] = 1;
        }
        return true;
    };

    std::vector<std::size_t> order(h.edge_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    shuffle(order);
    std::vector<LPath> paths;
    for (auto e : order) {
        if (!free_edge(e)) continue;
        std::vector<Vertex> seq(h.edge(e).begin(), h.edge(e).end());
        shuffle(seq);
        for (Vertex v : seq) used[v] = 1;
        for (bool grew = true; grew;) {
            grew = extend_back(seq);
            std::reverse(seq.begin(), seq.end());
            grew = extend_back(seq) || grew;
            std::reverse(seq.begin(), seq.end());
        }
        paths.emplace_back(k, l, std::move(seq));
    }
    return paths;
}

std::size_t floor_of(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q.get_ui();
}

void run_cluster_mode(const Hypergraph& h, const ThresholdParams& params, const TileOptions& opt, TileReport& rep,
                      std::vector<char>& used) {
    const unsigned k = h.k(), n = h.n();
    const std::size_t t = opt.clusters ? opt.clusters : n / (2 * k);
    if (t < k) return;
    const std::size_t m = n / t;
    const auto cg = build_cluster_graph(h, random_balanced_partition(n, t, m, stable_hash({opt.seed, 1})), opt.d);

    std::vector<Vertex> keep;
    for (Vertex c = 0; c < t; ++c)
        if (!cg.cluster.incident_edges(c).empty()) keep.push_back(c);
    keep.resize(keep.size() - keep.size() % params.ctmod);
    if (keep.size() < k) return;
    const auto reduced = induced_subgraph(cg.cluster, VertexSet(keep));
    rep.clusters_used = keep.size();

    const auto pfm = find_weighted_pfm(reduced.graph, params);
    const auto* q = std::get_if<WeightedFractionalMatching>(&pfm);
    if (!q) {
        rep.lp_status = "infeasible";
        return;
    }
    rep.lp_status = "feasible";

    const Rational scale = (1 - Rational(opt.beta) / 2) * static_cast<unsigned long>(m);
    std::vector<std::size_t> cursor(t, 0);
    std::size_t var_index = 0;
    for (const auto& a : q->assignment) {
        ++var_index;
        // Role 0 (weight k-1) is the head cluster, the remaining clusters follow in order.
        std::vector<Vertex> roles{reduced.original[a.var.head]};
        for (Vertex c : a.var.edge)
            if (c != a.var.head) roles.push_back(reduced.original[c]);
        std::vector<VertexSet> slices;
        bool empty_slice = false;
        for (unsigned r = 0; r < k; ++r) {
            const Vertex c = roles[r];
            const auto want = floor_of(a.q * params.weights[r] * scale);
            const auto& members = cg.partition[c].members();
            const auto take = std::min(want, members.size() - cursor[c]);
            slices.emplace_back(std::vector<Vertex>(members.begin() + cursor[c], members.begin() + cursor[c] + take));
            cursor[c] += take;
            empty_slice = empty_slice || take == 0;
        }
        if (empty_slice) continue;

        std::size_t total = 0;
        for (const auto& s : slices) total += s.size();
        std::size_t np = total;
        while (np >= k && np % (k - params.l) != params.l % (k - params.l)) --np;
        for (; np >= k; np -= (k - params.l)) {
            const auto sizes = unbalanced_sizes(k, params.l, np);
            bool fits = true;
            for (unsigned r = 0; r < k; ++r) fits = fits && sizes[r] <= slices[r].size();
            if (fits) {
                EmbedOptions eo;
                eo.check_hypothesis = false;
                eo.seed = stable_hash({opt.seed, 2, var_index});
                auto er = embed_partite_path(h, slices, np, params.l, eo);
                if (er.path) {
                    for (Vertex v : er.path->vertices()) used[v] = 1;
                    rep.paths.push_back(std::move(*er.path));
                    break;
                }
            }
            if (np < k + (k - params.l)) break;
        }
    }
}

}  // namespace

TileReport tile_paths(const Hypergraph& h, const ThresholdParams& params, const TileOptions& opt) {
    if (h.k() != params.k) throw ContractViolation("tile_paths: params.k differs from H");
    TileReport rep;
    rep.lp_status = "n/a";
    std::vector<char> used(h.n(), 0);
    if (opt.mode == TileMode::Cluster) {
        run_cluster_mode(h, params, opt, rep, used);
        if (rep.lp_status != "feasible") {
            rep.fell_back = true;
            auto more = grow_paths(h, params.l, used, stable_hash({opt.seed, 3}));
            for (auto& p : more) rep.paths.push_back(std::move(p));
        }
    } else {
        rep.paths = grow_paths(h, params.l, used, opt.seed);
    }

    std::vector<char> seen(h.n(), 0);
    std::size_t covered = 0;
    for (const auto& p : rep.paths) {
        if (!validate_lpath(h, p)) throw std::logic_error("tile_paths: invalid path");
        for (Vertex v : p.vertices()) {
            if (seen[v]) throw std::logic_error("tile_paths: paths overlap");
            seen[v] = 1;
            ++covered;
        }
    }
    rep.coverage = h.n() == 0 ? Rational(0) : Rational(covered) / Rational(h.n());
    return rep;
}

}  // namespace hyperham
