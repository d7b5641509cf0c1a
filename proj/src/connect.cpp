#include <algorithm>
#include <random>

#include "hyperham/connect_embed.hpp"
#include "hyperham/shadow.hpp"

namespace hyperham {

ConnectResult connect_ends(const Hypergraph& h, const ThresholdParams& params, const OrderedEnd& x,
                           const OrderedEnd& y, const VertexSet& forbidden, std::uint64_t seed, unsigned retry_cap) {
    const unsigned k = params.k, l = params.l;
    if (h.k() != k) throw ContractViolation("connect_ends: params.k differs from H");
    if (x.size() != l || y.size() != l) throw ContractViolation("connect_ends: ends must have l vertices");
    require_vertices(h, x.span(), "connect_ends");
    require_vertices(h, y.span(), "connect_ends");
    const auto xs = x.as_set(), ys = y.as_set();
    if (xs.size() != l || ys.size() != l || !xs.set_intersection(ys).empty())
        throw ContractViolation("connect_ends: ends must be disjoint tuples of distinct vertices");
    if (!xs.set_intersection(forbidden).empty() || !ys.set_intersection(forbidden).empty())
        throw ContractViolation("connect_ends: an end lies in the forbidden set");
    if (degree(h, xs) == 0 || degree(h, ys) == 0) throw ContractViolation("connect_ends: an end has degree 0");

    const std::size_t m = params.ceilkl;
    const std::size_t positions = m * (k - l) + l;
    const ShadowIndex shadow(h);
    std::mt19937_64 rng(seed);

    std::vector<Vertex> pool;
    for (Vertex v = 0; v < h.n(); ++v)
        if (!forbidden.contains(v) && !xs.contains(v) && !ys.contains(v)) pool.push_back(v);

    constexpr Vertex unset = ~Vertex{0};
    // Image of window i restricted to defined positions has positive degree.
    auto window_ok = [&](const std::vector<Vertex>& image, std::size_t i) {
        std::vector<Vertex> s;
        for (std::size_t p = i * (k - l); p < i * (k - l) + k; ++p)
            if (image[p] != unset) s.push_back(image[p]);
        return shadow.positive(s);
    };

    ConnectResult res;
    while (res.attempts < retry_cap) {
        ++res.attempts;
        std::vector<Vertex> image(positions, unset);
        std::vector<char> used(h.n(), 0);
        for (unsigned i = 0; i < l; ++i) {
            image[i] = x[i];
            image[positions - l + i] = y[i];
            used[x[i]] = used[y[i]] = 1;
        }
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) ok = window_ok(image, i);
        if (!ok) break;  // the ends alone already kill a window; retrying cannot help
        for (std::size_t p = l; p < positions - l && ok; ++p) {
            std::vector<Vertex> valid;
            for (Vertex z : pool) {
                if (used[z]) continue;
                image[p] = z;
                bool good = true;
                for (std::size_t i = 0; i < m && good; ++i)
                    if (i * (k - l) <= p && p < i * (k - l) + k) good = window_ok(image, i);
                if (good) valid.push_back(z);
            }
            if (valid.empty()) {
                ok = false;
                break;
            }
            image[p] = valid[rng() % valid.size()];
            used[image[p]] = 1;
        }
        if (!ok) continue;
        LPath path(k, l, image);
        if (!validate_lpath(h, path)) throw std::logic_error("connect_ends: greedy produced an invalid path");
        res.path = std::move(path);
        return res;
    }
    return res;
}

}  // namespace hyperham
