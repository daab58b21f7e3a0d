#include "multiplex/rational.hpp"

namespace multiplex {

std::string format_rational(const Rational& r, bool with_plus) {
    std::string s;
    if (r > Rational(0) && with_plus) s = "+";
    s += std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

} // namespace multiplex
