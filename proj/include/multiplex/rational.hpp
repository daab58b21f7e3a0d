#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace multiplex {

using Rational = boost::rational<std::int64_t>;

// "-3/2", "0", "2"; with_plus prefixes positive values with '+'.
std::string format_rational(const Rational& r, bool with_plus = false);

} // namespace multiplex
