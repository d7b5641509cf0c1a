#pragma once

#include <gmpxx.h>

#include <string>

namespace hyperham {

using Rational = mpq_class;

/// Renders as "p/q" with q >= 1 always present ("3/1", "0/1").
std::string to_string(const Rational& r);

/// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

inline Rational make_rational(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace hyperham
