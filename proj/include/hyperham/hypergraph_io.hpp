#pragma once

#include <iosfwd>
#include <string>

#include "hyperham/hypergraph.hpp"

namespace hyperham {

/// Thrown for malformed hypergraph text and unreadable files.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Text format: first non-comment line `k n m`, then m lines of k strictly
/// increasing vertex indices. Lines whose first character is '#' are skipped.
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

Hypergraph load_hypergraph(const std::string& path);
void save_hypergraph(const std::string& path, const Hypergraph& h);

std::string to_text(const Hypergraph& h);

}  // namespace hyperham
