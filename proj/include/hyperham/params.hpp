#pragma once

#include <vector>

#include "hyperham/rational.hpp"

namespace hyperham {

/// floor(k/(k-l))*(k-l): block size of the positive-codegree threshold.
unsigned ctmod(unsigned k, unsigned l);
/// ceil(k/(k-l)): length of a connecting path.
unsigned ceilkl(unsigned k, unsigned l);

/// Derived constants for a (k, l) pair, all exact.
struct ThresholdParams {
    unsigned k = 0;
    unsigned l = 0;
    unsigned ctmod = 0;
    unsigned ceilkl = 0;
    Rational dcover;    ///< 1 - 1/ctmod
    Rational dconnect;  ///< 1 - 1/ceilkl
    std::vector<unsigned> weights;  ///< (k-1, ctmod-1, ..., ctmod-1)
    unsigned weight_sum = 0;        ///< (k-1)*ctmod
    unsigned t_abs = 0;             ///< (2k-1)(k-l)+l, absorbing tuple length
    unsigned connect_len = 0;       ///< = ceilkl

    unsigned head_weight() const { return weights.front(); }
    unsigned tail_weight() const { return weights.back(); }
};

/// Requires k >= 3 and 1 <= l <= k-1; throws ContractViolation otherwise.
ThresholdParams threshold_params(unsigned k, unsigned l);

}  // namespace hyperham
