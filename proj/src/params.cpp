#include "hyperham/params.hpp"

#include <string>

#include "hyperham/errors.hpp"

namespace hyperham {

unsigned ctmod(unsigned k, unsigned l) {
    const unsigned s = k - l;
    return (k / s) * s;
}

unsigned ceilkl(unsigned k, unsigned l) {
    const unsigned s = k - l;
    return (k + s - 1) / s;
}

ThresholdParams threshold_params(unsigned k, unsigned l) {
    if (k < 3 || l < 1 || l >= k) {
        throw ContractViolation("threshold_params: need k >= 3 and 1 <= l <= k-1 (got k=" + std::to_string(k) +
                                ", l=" + std::to_string(l) + ")");
    }
    ThresholdParams p;
    p.k = k;
    p.l = l;
    p.ctmod = ctmod(k, l);
    p.ceilkl = ceilkl(k, l);
    p.dcover = 1 - make_rational(1, p.ctmod);
    p.dconnect = 1 - make_rational(1, p.ceilkl);
    p.weights.assign(k, p.ctmod - 1);
    p.weights[0] = k - 1;
    p.weight_sum = (k - 1) * p.ctmod;
    p.t_abs = (2 * k - 1) * (k - l) + l;
    p.connect_len = p.ceilkl;
    return p;
}

}  // namespace hyperham
