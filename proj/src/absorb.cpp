#include <random>

#include "hyperham/params.hpp"
#include "hyperham/search.hpp"

namespace hyperham {

bool is_absorbing_tuple(const Hypergraph& h, unsigned l, const std::vector<Vertex>& tuple, const VertexSet& t,
                        const SearchOptions& opt) {
    const auto params = threshold_params(h.k(), l);
    if (tuple.size() != params.t_abs) throw ContractViolation("is_absorbing_tuple: tuple length must be t_abs");
    if (t.size() != h.k() - l) throw ContractViolation("is_absorbing_tuple: |T| must be k-l");
    require_vertices(h, tuple, "is_absorbing_tuple");
    require_vertices(h, t.span(), "is_absorbing_tuple");
    const VertexSet body(tuple);
    if (body.size() != tuple.size()) throw ContractViolation("is_absorbing_tuple: tuple repeats a vertex");
    if (!body.set_intersection(t).empty()) throw ContractViolation("is_absorbing_tuple: tuple meets T");

    const LPath q(h.k(), l, tuple);
    if (!validate_lpath(h, q)) return false;
    auto [x, y] = ends(q);
    const VertexSet interior = body.set_difference(x.as_set().set_union(y.as_set()));
    auto res = find_lpath_between(h, x, y, q.length() + 1, interior.set_union(t), opt);
    if (res.outcome == SearchOutcome::BudgetExhausted) throw BudgetExhausted("is_absorbing_tuple: inner search undecided");
    return res.outcome == SearchOutcome::Found;
}

AbsorbStats sample_absorbing_density(const Hypergraph& h, unsigned l, const VertexSet& t, std::uint64_t samples,
                                     std::uint64_t seed, const SearchOptions& opt) {
    const auto params = threshold_params(h.k(), l);
    if (t.size() != h.k() - l) throw ContractViolation("sample_absorbing_density: |T| must be k-l");
    require_vertices(h, t.span(), "sample_absorbing_density");
    auto outside = VertexSet::range(0, h.n()).set_difference(t).members();
    if (outside.size() < params.t_abs) throw ContractViolation("sample_absorbing_density: too few vertices outside T");

    AbsorbStats stats;
    stats.t_abs = params.t_abs;
    std::mt19937_64 rng(seed);
    std::vector<Vertex> tuple(params.t_abs);
    for (std::uint64_t s = 0; s < samples; ++s) {
        // Partial Fisher-Yates: the prefix is a uniform ordered tuple.
        for (unsigned i = 0; i < params.t_abs; ++i) {
            std::swap(outside[i], outside[i + rng() % (outside.size() - i)]);
            tuple[i] = outside[i];
        }
        ++stats.samples;
        if (is_absorbing_tuple(h, l, tuple, t, opt)) ++stats.hits;
    }
    stats.estimate = samples == 0 ? Rational(0) : Rational(stats.hits) / Rational(stats.samples);
    return stats;
}

}  // namespace hyperham
