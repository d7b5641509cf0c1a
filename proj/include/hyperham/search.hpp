#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "hyperham/hypergraph.hpp"
#include "hyperham/lpath.hpp"
#include "hyperham/rational.hpp"

namespace hyperham {

struct SearchBudget {
    std::uint64_t node_limit = 100'000'000;
    double time_limit = std::numeric_limits<double>::infinity();  ///< seconds
};

struct SearchOptions {
    SearchBudget budget;
    bool frontier_prune = true;  ///< zero-degree frontier into unused vertices
    bool shadow_prune = true;    ///< partially filled windows must have positive degree
    /// Candidates in increasing index order unless a shuffle seed is given.
    std::optional<std::uint64_t> shuffle_seed;
    /// >1 splits the first branching point across threads. Each root branch
    /// then receives the whole budget.
    unsigned workers = 1;
};

enum class SearchOutcome { Found, None, BudgetExhausted };

std::string to_string(SearchOutcome o);

template <class T>
struct SearchResult {
    SearchOutcome outcome = SearchOutcome::None;
    std::optional<T> value;
    std::uint64_t nodes = 0;
    double seconds = 0;
};

/// Raised by operations that return a plain answer when an inner search
/// runs out of budget.
class BudgetExhausted : public std::runtime_error {
public:
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Exact search for a Hamilton l-cycle. Vertex 0 is anchored at each offset
/// in [0, k-l); in the tight case the orientation is fixed by v[1] < v[n-1].
SearchResult<LCycle> find_hamilton_lcycle(const Hypergraph& h, unsigned l, const SearchOptions& opt = {});

/// Exact search for an l-path with m edges, first end x, last end y and
/// interior vertices from `allowed`. l = |x| = |y|.
SearchResult<LPath> find_lpath_between(const Hypergraph& h, const OrderedEnd& x, const OrderedEnd& y, std::size_t m,
                                       const VertexSet& allowed, const SearchOptions& opt = {});

/// Maximum strong independent set by branch and bound over the 2-section.
/// On budget exhaustion the value holds the best set found so far.
SearchResult<VertexSet> max_strong_independent_set(const Hypergraph& h, const SearchBudget& budget = {});

struct AbsorbStats {
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
    Rational estimate;  ///< hits / samples
    unsigned t_abs = 0;
};

/// True iff `tuple` is an l-path and tuple + T spans an l-path with the same
/// ends. Throws BudgetExhausted if the inner search cannot decide.
bool is_absorbing_tuple(const Hypergraph& h, unsigned l, const std::vector<Vertex>& tuple, const VertexSet& t,
                        const SearchOptions& opt = {});

/// Uniform ordered t_abs-tuples of distinct vertices outside T.
AbsorbStats sample_absorbing_density(const Hypergraph& h, unsigned l, const VertexSet& t, std::uint64_t samples,
                                     std::uint64_t seed, const SearchOptions& opt = {});

}  // namespace hyperham
