#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hyperham/rational.hpp"

namespace hyperham {

/// minimize c.x  subject to  A x = b,  0 <= x_j <= upper_j.
/// Columns are sparse (row, coefficient) lists.
struct LinearProgram {
    std::size_t rows = 0;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> columns;
    std::vector<Rational> b;
    std::vector<Rational> c;                     ///< empty means all zero
    std::vector<std::optional<Rational>> upper;  ///< empty means unbounded above

    std::size_t cols() const { return columns.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> x;
    Rational objective;
    /// Set when infeasible and the program has no finite upper bounds:
    /// y.A_j <= 0 for every column and y.b > 0.
    std::vector<Rational> farkas;
    std::size_t pivots = 0;
};

/// Exact two-phase primal simplex over the rationals. Bland's rule
/// (lowest-index entering and leaving variable) guarantees termination.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace hyperham
