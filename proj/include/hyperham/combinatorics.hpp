#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hyperham {

using Vertex = std::uint32_t;

/// Exact binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// Pascal table C(v, i) for v < rows, i <= cols, used for colex ranking.
class BinomialTable {
public:
    BinomialTable() = default;
    BinomialTable(unsigned rows, unsigned cols);

    std::uint64_t operator()(unsigned v, unsigned i) const { return table_[v * (cols_ + 1) + i]; }

    /// Colex rank of a strictly increasing sequence: sum_i C(s[i], i+1).
    std::uint64_t rank(std::span<const Vertex> sorted) const {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < sorted.size(); ++i) r += (*this)(sorted[i], static_cast<unsigned>(i + 1));
        return r;
    }

private:
    unsigned cols_ = 0;
    std::vector<std::uint64_t> table_;
};

/// Advances `c` (strictly increasing, values < n) to the next combination in
/// lexicographic order. Returns false after the last one.
bool next_combination(std::vector<Vertex>& c, unsigned n);

/// Calls f(std::span<const Vertex>) for every r-subset of {0..n-1} in lex order.
template <class F>
void for_each_combination(unsigned n, unsigned r, F&& f) {
    if (r > n) return;
    std::vector<Vertex> c(r);
    for (unsigned i = 0; i < r; ++i) c[i] = i;
    do {
        f(std::span<const Vertex>(c));
    } while (next_combination(c, n));
}

/// Calls f on every r-subset of `items` (items kept in their given order).
template <class F>
void for_each_sub_combination(std::span<const Vertex> items, unsigned r, F&& f) {
    const auto n = static_cast<unsigned>(items.size());
    if (r > n) return;
    std::vector<Vertex> idx(r), out(r);
    for (unsigned i = 0; i < r; ++i) idx[i] = i;
    do {
        for (unsigned i = 0; i < r; ++i) out[i] = items[idx[i]];
        f(std::span<const Vertex>(out));
    } while (next_combination(idx, n));
}

/// SplitMix64 finaliser; the stable mixing step behind every derived seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Folds a list of integers into one seed: h = splitmix64(h ^ v) per value,
/// starting from splitmix64(0).
std::uint64_t stable_hash(std::initializer_list<std::uint64_t> values);

/// Uniform double in [0,1) from the top 53 bits of one 64-bit draw.
template <class Rng>
double unit_double(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace hyperham
