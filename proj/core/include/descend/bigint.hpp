#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace descend {

// All domain arithmetic is over unbounded integers; no machine-width
// wraparound is modeled anywhere.
using BigInt = boost::multiprecision::cpp_int;

} // namespace descend
