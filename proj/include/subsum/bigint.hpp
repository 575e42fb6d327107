#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace subsum {

// Exact arbitrary-precision integer for counting formulas; header-only, no
// link dependency.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace subsum
