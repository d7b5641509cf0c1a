#include "hyperham/rational.hpp"

#include <stdexcept>

namespace hyperham {

std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    r.canonicalize();
    return r;
}

}  // namespace hyperham
