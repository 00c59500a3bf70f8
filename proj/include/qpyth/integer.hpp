#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qpyth {

// All arithmetic in this library is exact: coefficients, triple entries and
// matrix entries are unbounded integers.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::sqrt;

inline std::string to_string(const Int& x) { return x.str(); }

// Narrowing helper for values that are structurally small (degrees, depths,
// continued-fraction terms used as exponents).
long long to_small(const Int& x, const char* what);

} // namespace qpyth
