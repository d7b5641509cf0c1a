#include "hyperham/fractional_matching.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hyperham/simplex.hpp"

namespace hyperham {

namespace {

/// Column of variable (edge i, head position j) in the constraint matrix.
std::vector<std::pair<std::size_t, Rational>> incidence_column(const Hypergraph& h, const ThresholdParams& params,
                                                               std::size_t edge, unsigned head_pos) {
    std::vector<std::pair<std::size_t, Rational>> col;
    auto e = h.edge(edge);
    for (unsigned p = 0; p < h.k(); ++p) {
        col.emplace_back(e[p], Rational(p == head_pos ? params.head_weight() : params.tail_weight()));
    }
    return col;
}

WeightedFractionalMatching to_matching(const Hypergraph& h, const std::vector<Rational>& x) {
    WeightedFractionalMatching q;
    const unsigned k = h.k();
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        for (unsigned j = 0; j < k; ++j) {
            const Rational& v = x[i * k + j];
            if (v != 0) q.assignment.push_back({OrderedEdgeVar{{e.begin(), e.end()}, e[j]}, v});
        }
    }
    return q;
}

void require_params(const Hypergraph& h, const ThresholdParams& params) {
    if (params.k != h.k()) throw ContractViolation("fractional matching: params.k differs from H");
}

void require_known_var(const Hypergraph& h, const OrderedEdgeVar& var) {
    if (var.edge.size() != h.k() || !std::is_sorted(var.edge.begin(), var.edge.end())) {
        throw ContractViolation("unknown variable: edge is not a canonical k-set");
    }
    if (var.edge.back() >= h.n()) throw ContractViolation("unknown variable: vertex out of range");
    if (std::adjacent_find(var.edge.begin(), var.edge.end()) != var.edge.end() || !h.has_edge(var.edge)) {
        throw ContractViolation("unknown variable: not an edge of H");
    }
    if (!std::binary_search(var.edge.begin(), var.edge.end(), var.head)) {
        throw ContractViolation("unknown variable: head is not in the edge");
    }
}

}  // namespace

PfmHypotheses check_pfm_hypotheses(const Hypergraph& h, const ThresholdParams& params) {
    PfmHypotheses out;
    out.divisible = h.n() % params.ctmod == 0;
    out.no_isolated = isolated_vertices(h).empty();
    const auto dplus = min_positive_codegree(h);
    // Vacuous for edgeless H; the isolated-vertex hypothesis catches that case.
    out.codegree = !dplus || Rational(*dplus) >= params.dcover * h.n();
    return out;
}

std::vector<Rational> vertex_loads(const Hypergraph& h, const ThresholdParams& params,
                                   const WeightedFractionalMatching& q) {
    std::vector<Rational> load(h.n());
    for (const auto& a : q.assignment) {
        for (Vertex v : a.var.edge) {
            load[v] += a.q * (v == a.var.head ? params.head_weight() : params.tail_weight());
        }
    }
    return load;
}

PfmResult find_weighted_pfm(const Hypergraph& h, const ThresholdParams& params) {
    require_params(h, params);
    if (h.n() == 0) throw ContractViolation("find_weighted_pfm: H has no vertices");
    const auto isolated = isolated_vertices(h);
    if (!isolated.empty()) {
        FarkasCertificate cert{std::vector<Rational>(h.n())};
        cert.y[isolated[0]] = 1;
        return cert;
    }
    LinearProgram lp;
    lp.rows = h.n();
    lp.b.assign(h.n(), Rational(1));
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        for (unsigned j = 0; j < h.k(); ++j) lp.columns.push_back(incidence_column(h, params, i, j));
    }
    auto res = solve_lp(lp);
    if (res.status == LpStatus::Infeasible) {
        if (res.farkas.empty()) throw std::logic_error("find_weighted_pfm: solver returned no certificate");
        return FarkasCertificate{std::move(res.farkas)};
    }
    return to_matching(h, res.x);
}

MinMaxResult find_min_max_pfm(const Hypergraph& h, const ThresholdParams& params) {
    auto feasible = find_weighted_pfm(h, params);
    if (auto* cert = std::get_if<FarkasCertificate>(&feasible)) return *cert;

    // Scale q = z / t with 0 <= z <= 1: maximising t minimises M = 1/t.
    LinearProgram lp;
    lp.rows = h.n();
    lp.b.assign(h.n(), Rational(0));
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        for (unsigned j = 0; j < h.k(); ++j) {
            lp.columns.push_back(incidence_column(h, params, i, j));
            lp.upper.emplace_back(Rational(1));
            lp.c.emplace_back(0);
        }
    }
    std::vector<std::pair<std::size_t, Rational>> tcol;
    for (std::size_t v = 0; v < h.n(); ++v) tcol.emplace_back(v, Rational(-1));
    lp.columns.push_back(std::move(tcol));
    lp.upper.emplace_back(std::nullopt);
    lp.c.emplace_back(-1);

    auto res = solve_lp(lp);
    if (res.status != LpStatus::Optimal || res.x.back() <= 0) {
        throw std::logic_error("find_min_max_pfm: scaled program failed on a feasible instance");
    }
    const Rational t = res.x.back();
    res.x.pop_back();
    for (auto& v : res.x) v /= t;
    return MinMaxMatching{to_matching(h, res.x), 1 / t};
}

bool verify_pfm(const Hypergraph& h, const ThresholdParams& params, const WeightedFractionalMatching& q) {
    require_params(h, params);
    std::vector<OrderedEdgeVar> seen;
    for (const auto& a : q.assignment) {
        require_known_var(h, a.var);
        seen.push_back(a.var);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        throw ContractViolation("verify_pfm: variable listed twice");
    }
    Rational total;
    for (const auto& a : q.assignment) {
        if (a.q < 0) return false;
        total += a.q;
    }
    for (const auto& load : vertex_loads(h, params, q)) {
        if (load != 1) return false;
    }
    return total == Rational(h.n()) / params.weight_sum;
}

bool verify_certificate(const Hypergraph& h, const ThresholdParams& params, const FarkasCertificate& cert) {
    require_params(h, params);
    if (cert.y.size() != h.n()) return false;
    Rational sum;
    for (const auto& v : cert.y) sum += v;
    if (sum <= 0) return false;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        Rational tails;
        for (Vertex v : e) tails += cert.y[v];
        tails *= params.tail_weight();
        for (Vertex head : e) {
            const Rational dot = tails + cert.y[head] * (Rational(params.head_weight()) - params.tail_weight());
            if (dot > 0) return false;
        }
    }
    return true;
}

std::vector<OrderedEdgeWeight> expand_collapsed(const WeightedFractionalMatching& q) {
    std::vector<OrderedEdgeWeight> out;
    for (const auto& a : q.assignment) {
        std::vector<Vertex> tails;
        for (Vertex v : a.var.edge)
            if (v != a.var.head) tails.push_back(v);
        std::vector<std::vector<Vertex>> orders;
        do {
            std::vector<Vertex> order{a.var.head};
            order.insert(order.end(), tails.begin(), tails.end());
            orders.push_back(std::move(order));
        } while (std::next_permutation(tails.begin(), tails.end()));
        const Rational share = a.q / static_cast<unsigned long>(orders.size());
        for (auto& o : orders) out.push_back({std::move(o), share});
    }
    return out;
}

WeightedFractionalMatching collapse_ordered(const std::vector<OrderedEdgeWeight>& weights) {
    std::map<OrderedEdgeVar, Rational> sums;
    for (const auto& w : weights) {
        std::vector<Vertex> edge(w.order);
        std::sort(edge.begin(), edge.end());
        sums[OrderedEdgeVar{std::move(edge), w.order.front()}] += w.q;
    }
    WeightedFractionalMatching out;
    for (auto& [var, q] : sums) out.assignment.push_back({var, q});
    return out;
}

bool verify_uncollapsed_pfm(const Hypergraph& h, const ThresholdParams& params,
                            const std::vector<OrderedEdgeWeight>& weights) {
    std::vector<Rational> load(h.n());
    Rational total;
    for (const auto& w : weights) {
        std::vector<Vertex> edge(w.order);
        std::sort(edge.begin(), edge.end());
        require_known_var(h, OrderedEdgeVar{edge, w.order.front()});
        if (w.q < 0) return false;
        total += w.q;
        for (std::size_t i = 0; i < w.order.size(); ++i) load[w.order[i]] += params.weights[i] * w.q;
    }
    for (const auto& l : load)
        if (l != 1) return false;
    return total == Rational(h.n()) / params.weight_sum;
}

}  // namespace hyperham
