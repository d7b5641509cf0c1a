#include "hyperham/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperham {

namespace {

enum class At : unsigned char { Basic, Lower, Upper };

class Tableau {
public:
    explicit Tableau(const LinearProgram& lp)
        : m_(lp.rows), n_(lp.cols()), total_(lp.cols() + lp.rows), rows_(m_, std::vector<Rational>(total_)),
          xb_(m_), basis_(m_), at_(total_, At::Lower), upper_(total_), cost_row_(total_) {
        for (std::size_t j = 0; j < n_; ++j) {
            for (const auto& [r, v] : lp.columns[j]) {
                if (r >= m_) throw std::invalid_argument("solve_lp: row index out of range");
                rows_[r][j] += v;
            }
            if (!lp.upper.empty() && lp.upper[j]) {
                if (*lp.upper[j] < 0) throw std::invalid_argument("solve_lp: negative upper bound");
                upper_[j] = *lp.upper[j];
            }
        }
        sign_.assign(m_, 1);
        for (std::size_t i = 0; i < m_; ++i) {
            xb_[i] = lp.b[i];
            if (xb_[i] < 0) {
                sign_[i] = -1;
                xb_[i] = -xb_[i];
                for (auto& v : rows_[i]) v = -v;
            }
            rows_[i][n_ + i] = 1;
            basis_[i] = n_ + i;
            at_[n_ + i] = At::Basic;
        }
    }

    void set_costs(const std::vector<Rational>& c) {
        costs_ = c;
        for (std::size_t j = 0; j < total_; ++j) {
            cost_row_[j] = costs_[j];
        }
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational& cb = costs_[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < total_; ++j) {
                if (rows_[i][j] != 0) cost_row_[j] -= cb * rows_[i][j];
            }
        }
    }

    /// Runs to optimality; returns false if unbounded.
    bool optimise(std::size_t& pivots) {
        while (true) {
            std::size_t enter = total_;
            for (std::size_t j = 0; j < total_; ++j) {
                if (at_[j] == At::Basic || frozen(j)) continue;
                const int s = sgn(cost_row_[j]);
                if ((at_[j] == At::Lower && s < 0) || (at_[j] == At::Upper && s > 0)) {
                    enter = j;
                    break;
                }
            }
            if (enter == total_) return true;
            if (!step(enter)) return false;
            ++pivots;
        }
    }

    /// Pivots basic artificials out where a structural column allows it;
    /// remaining ones sit on redundant rows.
    void expel_artificials(std::size_t& pivots) {
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < n_) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (at_[j] != At::Basic && rows_[r][j] != 0 && !frozen(j)) {
                    const Rational value = at_[j] == At::Upper ? *upper_[j] : Rational(0);
                    pivot(r, j);
                    xb_[r] = value;
                    ++pivots;
                    break;
                }
            }
        }
    }

    void freeze_artificials() {
        for (std::size_t j = n_; j < total_; ++j) upper_[j] = Rational(0);
        frozen_artificials_ = true;
    }

    std::vector<Rational> values() const {
        std::vector<Rational> x(total_);
        for (std::size_t j = 0; j < total_; ++j)
            if (at_[j] == At::Upper) x[j] = *upper_[j];
        for (std::size_t i = 0; i < m_; ++i) x[basis_[i]] = xb_[i];
        return x;
    }

    /// y_i = c_B B^{-1} e_i, mapped back through the row sign flips.
    std::vector<Rational> duals() const {
        std::vector<Rational> y(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            y[i] = costs_[n_ + i] - cost_row_[n_ + i];
            if (sign_[i] < 0) y[i] = -y[i];
        }
        return y;
    }

    bool any_at_upper() const {
        for (std::size_t j = 0; j < n_; ++j)
            if (at_[j] == At::Upper) return true;
        return false;
    }

    std::size_t structural() const { return n_; }
    std::size_t total() const { return total_; }

private:
    static int sgn(const Rational& v) { return ::sgn(v); }

    bool frozen(std::size_t j) const { return frozen_artificials_ && j >= n_; }

    /// One iteration with entering column `enter`; false when unbounded.
    bool step(std::size_t enter) {
        const int dir = at_[enter] == At::Lower ? 1 : -1;  // entering moves by dir*theta
        std::optional<Rational> best;
        std::size_t leave_row = m_;
        std::size_t leave_var = total_;
        if (upper_[enter]) {
            best = *upper_[enter];
            leave_var = enter;
        }
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational& a = rows_[i][enter];
            if (a == 0) continue;
            // x_B(i) changes at rate -dir*a
            const int rate = -dir * sgn(a);
            Rational limit;
            if (rate < 0) {
                limit = xb_[i] / abs(a);
            } else {
                const auto& u = upper_[basis_[i]];
                if (!u) continue;
                limit = (*u - xb_[i]) / abs(a);
            }
            if (!best || limit < *best || (limit == *best && basis_[i] < leave_var)) {
                best = limit;
                leave_row = i;
                leave_var = basis_[i];
            }
        }
        if (!best) return false;
        const Rational theta = *best;
        if (theta != 0) {
            for (std::size_t i = 0; i < m_; ++i) {
                const Rational& a = rows_[i][enter];
                if (a != 0) xb_[i] -= dir * a * theta;
            }
        }
        if (leave_row == m_) {
            at_[enter] = at_[enter] == At::Lower ? At::Upper : At::Lower;
            return true;
        }
        const Rational entering_value = dir > 0 ? theta : *upper_[enter] - theta;
        const std::size_t old = basis_[leave_row];
        const int rate = -dir * sgn(rows_[leave_row][enter]);
        pivot(leave_row, enter);
        at_[old] = rate < 0 ? At::Lower : At::Upper;
        xb_[leave_row] = entering_value;
        return true;
    }

    void pivot(std::size_t r, std::size_t j) {
        auto& prow = rows_[r];
        const Rational inv = 1 / prow[j];
        std::vector<std::size_t> nz;
        for (std::size_t c = 0; c < total_; ++c) {
            if (prow[c] != 0) {
                prow[c] *= inv;
                nz.push_back(c);
            }
        }
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || rows_[i][j] == 0) continue;
            const Rational f = rows_[i][j];
            for (auto c : nz) rows_[i][c] -= f * prow[c];
        }
        if (cost_row_[j] != 0) {
            const Rational f = cost_row_[j];
            for (auto c : nz) cost_row_[c] -= f * prow[c];
        }
        at_[basis_[r]] = At::Lower;
        basis_[r] = j;
        at_[j] = At::Basic;
    }

    std::size_t m_, n_, total_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> xb_;
    std::vector<std::size_t> basis_;
    std::vector<At> at_;
    std::vector<std::optional<Rational>> upper_;
    std::vector<Rational> costs_;
    std::vector<Rational> cost_row_;
    std::vector<int> sign_;
    bool frozen_artificials_ = false;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
    if (lp.b.size() != lp.rows) throw std::invalid_argument("solve_lp: b has wrong size");
    if (!lp.c.empty() && lp.c.size() != lp.cols()) throw std::invalid_argument("solve_lp: c has wrong size");
    if (!lp.upper.empty() && lp.upper.size() != lp.cols()) throw std::invalid_argument("solve_lp: upper has wrong size");

    Tableau t(lp);
    LpResult result;

    std::vector<Rational> phase1(t.total());
    for (std::size_t j = t.structural(); j < t.total(); ++j) phase1[j] = 1;
    t.set_costs(phase1);
    t.optimise(result.pivots);

    auto x = t.values();
    Rational infeasibility;
    for (std::size_t j = t.structural(); j < t.total(); ++j) infeasibility += x[j];
    if (infeasibility > 0) {
        result.status = LpStatus::Infeasible;
        if (!t.any_at_upper() && (lp.upper.empty() || std::all_of(lp.upper.begin(), lp.upper.end(),
                                                                   [](const auto& u) { return !u.has_value(); }))) {
            result.farkas = t.duals();
        }
        return result;
    }

    t.expel_artificials(result.pivots);
    t.freeze_artificials();
    std::vector<Rational> phase2(t.total());
    for (std::size_t j = 0; j < lp.c.size(); ++j) phase2[j] = lp.c[j];
    t.set_costs(phase2);
    if (!t.optimise(result.pivots)) {
        result.status = LpStatus::Unbounded;
        return result;
    }
    x = t.values();
    x.resize(t.structural());
    result.status = LpStatus::Optimal;
    for (std::size_t j = 0; j < lp.c.size(); ++j) result.objective += lp.c[j] * x[j];
    result.x = std::move(x);
    return result;
}

}  // namespace hyperham
