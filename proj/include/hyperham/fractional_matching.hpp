#pragma once

#include <variant>
#include <vector>

#include "hyperham/hypergraph.hpp"
#include "hyperham/params.hpp"
#include "hyperham/rational.hpp"

namespace hyperham {

/// One collapsed ordered edge: all orderings of `edge` with `head` first
/// share a variable, since positions 2..k carry the same weight.
struct OrderedEdgeVar {
    std::vector<Vertex> edge;  ///< canonical (sorted)
    Vertex head = 0;

    friend auto operator<=>(const OrderedEdgeVar&, const OrderedEdgeVar&) = default;
};

struct Assignment {
    OrderedEdgeVar var;
    Rational q;
};

/// Nonnegative weights on collapsed ordered edges. Variables not listed are 0.
struct WeightedFractionalMatching {
    std::vector<Assignment> assignment;
};

/// y with y.chi <= 0 for every ordered-edge incidence vector chi and y.1 > 0.
struct FarkasCertificate {
    std::vector<Rational> y;
};

struct MinMaxMatching {
    WeightedFractionalMatching matching;
    Rational max_value;  ///< M, the least possible maximum variable value
};

using PfmResult = std::variant<WeightedFractionalMatching, FarkasCertificate>;
using MinMaxResult = std::variant<MinMaxMatching, FarkasCertificate>;

/// The hypotheses under which a weighted perfect fractional matching is
/// guaranteed: ctmod | n, no isolated vertices, min positive codegree >= dcover*n.
struct PfmHypotheses {
    bool divisible = false;
    bool no_isolated = false;
    bool codegree = false;
    bool all() const { return divisible && no_isolated && codegree; }
};
PfmHypotheses check_pfm_hypotheses(const Hypergraph& h, const ThresholdParams& params);

/// Weighted perfect fractional matching with weights (k-1, ctmod-1, ...),
/// or a Farkas certificate; exact. H must have at least one vertex.
PfmResult find_weighted_pfm(const Hypergraph& h, const ThresholdParams& params);

/// Among perfect matchings, one minimising the largest collapsed variable.
MinMaxResult find_min_max_pfm(const Hypergraph& h, const ThresholdParams& params);

/// Exact check of nonnegativity, every per-vertex weighted sum = 1 and
/// total mass n/W. Throws ContractViolation for variables not in H.
bool verify_pfm(const Hypergraph& h, const ThresholdParams& params, const WeightedFractionalMatching& q);

bool verify_certificate(const Hypergraph& h, const ThresholdParams& params, const FarkasCertificate& y);

/// Per-vertex weighted load sum_i w_i q(e) over variables touching each vertex.
std::vector<Rational> vertex_loads(const Hypergraph& h, const ThresholdParams& params,
                                   const WeightedFractionalMatching& q);

// Uncollapsed view: one weight per ordering of an edge.

struct OrderedEdgeWeight {
    std::vector<Vertex> order;  ///< position i carries weight w_i
    Rational q;
};

/// Spreads each collapsed value evenly over the (k-1)! orderings with that head.
std::vector<OrderedEdgeWeight> expand_collapsed(const WeightedFractionalMatching& q);
/// Sums orderings sharing (edge, head).
WeightedFractionalMatching collapse_ordered(const std::vector<OrderedEdgeWeight>& weights);
/// Perfection check in the uncollapsed formulation.
bool verify_uncollapsed_pfm(const Hypergraph& h, const ThresholdParams& params,
                            const std::vector<OrderedEdgeWeight>& weights);

}  // namespace hyperham
