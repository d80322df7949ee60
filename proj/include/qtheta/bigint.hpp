#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qtheta {

// Every coefficient in the library is an exact arbitrary-precision signed
// integer. No floating point appears anywhere.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal_string(const BigInt& x) { return x.str(); }

}  // namespace qtheta
