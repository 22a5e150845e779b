#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sre {

using BigInt = boost::multiprecision::cpp_int;

// log2 of a positive BigInt, accurate to double precision even when the
// value itself does not fit in a double.
double log2_value(const BigInt& v);

} // namespace sre
