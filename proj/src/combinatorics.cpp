#include "hyperham/combinatorics.hpp"

#include <limits>
#include <stdexcept>

namespace hyperham {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial overflow");
    }
    return static_cast<std::uint64_t>(acc);
}

BinomialTable::BinomialTable(unsigned rows, unsigned cols) : cols_(cols), table_(std::size_t(rows) * (cols + 1), 0) {
    for (unsigned v = 0; v < rows; ++v) {
        for (unsigned i = 0; i <= cols; ++i) table_[v * (cols + 1) + i] = binomial(v, i);
    }
}

bool next_combination(std::vector<Vertex>& c, unsigned n) {
    const auto r = static_cast<unsigned>(c.size());
    if (r == 0) return false;
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && c[i] == n - r + static_cast<unsigned>(i)) --i;
    if (i < 0) return false;
    ++c[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < r; ++j) c[j] = c[j - 1] + 1;
    return true;
}

std::uint64_t stable_hash(std::initializer_list<std::uint64_t> values) {
    std::uint64_t h = splitmix64(0);
    for (auto v : values) h = splitmix64(h ^ v);
    return h;
}

}  // namespace hyperham
