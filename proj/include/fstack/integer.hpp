#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fstack {

/// Arbitrary-size integer.  Cumulative x-exponents and edge weights grow
/// without bound (weights grow like 2^i in the run length i), so all exponent
/// arithmetic is done in arbitrary precision.
using Int = boost::multiprecision::cpp_int;

}  // namespace fstack
