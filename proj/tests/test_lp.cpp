#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "hyperham/fractional_matching.hpp"
#include "hyperham/generators.hpp"
#include "hyperham/simplex.hpp"

using namespace hyperham;

namespace {

using BigQ = boost::multiprecision::cpp_rational;

/// Independent phase-1 feasibility check for the weighted matching system,
/// written against a different rational type with Dantzig's entering rule.
bool oracle_feasible(const Hypergraph& h, const ThresholdParams& params) {
    const std::size_t rows = h.n();
    std::vector<std::vector<BigQ>> cols;
    for (std::size_t e = 0; e < h.edge_count(); ++e)
        for (unsigned j = 0; j < h.k(); ++j) {
            std::vector<BigQ> c(rows, 0);
            for (unsigned p = 0; p < h.k(); ++p)
                c[h.edge(e)[p]] = p == j ? params.head_weight() : params.tail_weight();
            cols.push_back(std::move(c));
        }
    const std::size_t nx = cols.size(), width = nx + rows;
    // tableau rows: [A | I | b]
    std::vector<std::vector<BigQ>> t(rows, std::vector<BigQ>(width + 1, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < nx; ++j) t[i][j] = cols[j][i];
        t[i][nx + i] = 1;
        t[i][width] = 1;
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = nx + i;
    for (int iter = 0;; ++iter) {
        // reduced cost of column j for cost 1 on artificials: -sum of column over rows
        // whose basic variable is artificial, plus own cost.
        std::size_t enter = width;
        BigQ most = 0;
        for (std::size_t j = 0; j < width; ++j) {
            BigQ rc = j >= nx ? 1 : 0;
            for (std::size_t i = 0; i < rows; ++i)
                if (basis[i] >= nx) rc -= t[i][j];
            const bool better = iter < 2000 ? rc < most : (rc < 0 && enter == width);
            if (better) most = rc, enter = j;
        }
        if (enter == width) break;
        std::size_t leave = rows;
        BigQ ratio;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            BigQ r = t[i][width] / t[i][enter];
            if (leave == rows || r < ratio || (r == ratio && basis[i] < basis[leave])) ratio = r, leave = i;
        }
        REQUIRE(leave != rows);
        const BigQ piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const BigQ f = t[i][enter];
            for (std::size_t j = 0; j <= width; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    BigQ infeas = 0;
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] >= nx) infeas += t[i][width];
    return infeas == 0;
}

}  // namespace

TEST_CASE("simplex on a small program") {
    // min -x0 - x1  s.t. x0 + 2x1 + s = 4, 3x0 + x1 + s' = 6
    LinearProgram lp;
    lp.rows = 2;
    lp.columns = {{{0, 1}, {1, 3}}, {{0, 2}, {1, 1}}, {{0, 1}}, {{1, 1}}};
    lp.b = {4, 6};
    lp.c = {-1, -1, 0, 0};
    const auto r = solve_lp(lp);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == make_rational(-14, 5));
    CHECK(r.x[0] == make_rational(8, 5));
    CHECK(r.x[1] == make_rational(6, 5));
}

TEST_CASE("simplex infeasible with certificate") {
    // x0 + x1 = 1, x0 + x1 = 2
    LinearProgram lp;
    lp.rows = 2;
    lp.columns = {{{0, 1}, {1, 1}}, {{0, 1}, {1, 1}}};
    lp.b = {1, 2};
    const auto r = solve_lp(lp);
    REQUIRE(r.status == LpStatus::Infeasible);
    REQUIRE(r.farkas.size() == 2);
    CHECK(r.farkas[0] + r.farkas[1] <= 0);
    CHECK(r.farkas[0] * 1 + r.farkas[1] * 2 > 0);
}

TEST_CASE("simplex unbounded and bounded variables") {
    LinearProgram lp;
    lp.rows = 1;
    lp.columns = {{{0, 1}}, {{0, -1}}};
    lp.b = {1};
    lp.c = {0, -1};
    CHECK(solve_lp(lp).status == LpStatus::Unbounded);
    lp.upper = {std::nullopt, Rational(3)};
    const auto r = solve_lp(lp);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.x[1] == 3);
    CHECK(r.x[0] == 4);
}

TEST_CASE("pfm on the complete 3-graph on 6") {
    const auto p = threshold_params(3, 2);
    const auto h = complete_kgraph(3, 6);
    const auto res = find_weighted_pfm(h, p);
    const auto* q = std::get_if<WeightedFractionalMatching>(&res);
    REQUIRE(q);
    CHECK(verify_pfm(h, p, *q));
    // uniform solution
    WeightedFractionalMatching uniform;
    for (auto& e : h.edge_list())
        for (Vertex v : e) uniform.assignment.push_back({{e, v}, make_rational(1, 60)});
    CHECK(verify_pfm(h, p, uniform));
    auto perturbed = *q;
    perturbed.assignment.front().q += make_rational(1, 1000);
    CHECK_FALSE(verify_pfm(h, p, perturbed));
    WeightedFractionalMatching zero;
    zero.assignment.push_back({{{0, 1, 2}, 0}, 0});
    CHECK_FALSE(verify_pfm(h, p, zero));
    WeightedFractionalMatching unknown;
    unknown.assignment.push_back({{{0, 1, 9}, 0}, 1});
    CHECK_THROWS_AS(verify_pfm(h, p, unknown), ContractViolation);
    WeightedFractionalMatching twice;
    twice.assignment = {{{{0, 1, 2}, 0}, 1}, {{{0, 1, 2}, 0}, 1}};
    CHECK_THROWS_AS(verify_pfm(h, p, twice), ContractViolation);

    const auto mm = find_min_max_pfm(h, p);
    const auto* best = std::get_if<MinMaxMatching>(&mm);
    REQUIRE(best);
    CHECK(verify_pfm(h, p, best->matching));
    CHECK(best->max_value <= make_rational(1, 60));
}

TEST_CASE("isolated vertex gives the indicator certificate") {
    const auto p = threshold_params(3, 2);
    const Hypergraph h(3, 6, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
    const auto res = find_weighted_pfm(h, p);
    const auto* y = std::get_if<FarkasCertificate>(&res);
    REQUIRE(y);
    std::vector<Rational> expect(6);
    expect[5] = 1;
    CHECK(y->y == expect);
    CHECK(verify_certificate(h, p, *y));
    CHECK_FALSE(verify_certificate(h, p, FarkasCertificate{std::vector<Rational>(6, Rational(1))}));
    CHECK(std::holds_alternative<FarkasCertificate>(find_min_max_pfm(Hypergraph(3, 4), p)));
}

TEST_CASE("single edge min-max matching") {
    const auto p = threshold_params(3, 1);
    const Hypergraph h(3, 3, {{0, 1, 2}});
    const auto mm = find_min_max_pfm(h, p);
    const auto* best = std::get_if<MinMaxMatching>(&mm);
    REQUIRE(best);
    CHECK(best->max_value == make_rational(1, 4));
    REQUIRE(best->matching.assignment.size() == 3);
    for (const auto& a : best->matching.assignment) CHECK(a.q == make_rational(1, 4));
}

TEST_CASE("extremal graph is infeasible, confirmed by an independent solver") {
    const auto p = threshold_params(3, 2);
    const auto ext = extremal_construction(3, 2, 9);
    CHECK_FALSE(oracle_feasible(ext.graph, p));
    const auto res = find_weighted_pfm(ext.graph, p);
    const auto* y = std::get_if<FarkasCertificate>(&res);
    REQUIRE(y);
    CHECK(verify_certificate(ext.graph, p, *y));
    // the hand certificate: 1 on A, -1/2 on B
    FarkasCertificate hand{std::vector<Rational>(9)};
    for (Vertex v = 0; v < 9; ++v) hand.y[v] = ext.a.contains(v) ? Rational(1) : make_rational(-1, 2);
    CHECK(verify_certificate(ext.graph, p, hand));
}

TEST_CASE("solver agrees with the independent oracle on random instances") {
    for (unsigned l = 1; l <= 2; ++l) {
        const auto p = threshold_params(3, l);
        for (std::uint64_t s = 0; s < 12; ++s) {
            const auto h = random_kgraph(3, 6 + static_cast<unsigned>(s % 3), 0.35 + 0.05 * static_cast<double>(s % 5), s);
            const auto res = find_weighted_pfm(h, p);
            const bool feasible = std::holds_alternative<WeightedFractionalMatching>(res);
            CHECK(feasible == oracle_feasible(h, p));
            if (feasible) CHECK(verify_pfm(h, p, std::get<WeightedFractionalMatching>(res)));
            else CHECK(verify_certificate(h, p, std::get<FarkasCertificate>(res)));
        }
    }
}

TEST_CASE("uncollapsed view") {
    const auto p = threshold_params(3, 1);
    const auto h = complete_kgraph(3, 6);
    const auto res = find_weighted_pfm(h, p);
    const auto& q = std::get<WeightedFractionalMatching>(res);
    const auto expanded = expand_collapsed(q);
    CHECK(expanded.size() == 2 * q.assignment.size());
    CHECK(verify_uncollapsed_pfm(h, p, expanded));
    const auto back = collapse_ordered(expanded);
    CHECK(verify_pfm(h, p, back));
}

TEST_CASE("pfm hypotheses") {
    const auto p = threshold_params(3, 2);
    CHECK(check_pfm_hypotheses(complete_kgraph(3, 9), p).all());
    const auto ext = check_pfm_hypotheses(extremal_construction(3, 2, 9).graph, p);
    CHECK(ext.divisible);
    CHECK(ext.no_isolated);
    CHECK_FALSE(ext.codegree);
    CHECK_FALSE(check_pfm_hypotheses(complete_kgraph(3, 8), p).divisible);
}
