#include "sre/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace sre {

double log2_value(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("log2_value needs a positive value");
    unsigned bits = boost::multiprecision::msb(v);
    if (bits <= 62) {
        return std::log2(v.convert_to<double>());
    }
    // Keep the top 53 bits as a mantissa; the rest is the exponent.
    unsigned shift = bits - 52;
    BigInt mantissa = v >> shift;
    return std::log2(mantissa.convert_to<double>()) + static_cast<double>(shift);
}

} // namespace sre
