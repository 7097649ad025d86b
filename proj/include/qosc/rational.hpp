#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "qosc/types.hpp"

namespace qosc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// n!! for odd n >= -1 (empty product convention (-1)!! = 1).
inline BigInt double_factorial(long n) {
    if (n < -1 || (n > 0 && n % 2 == 0)) throw DomainError("double_factorial expects odd n >= -1");
    BigInt r = 1;
    for (long k = n; k > 1; k -= 2) r *= k;
    return r;
}

inline BigInt factorial(long n) {
    if (n < 0) throw DomainError("factorial expects n >= 0");
    BigInt r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

inline std::string to_fraction_string(const BigRational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline double to_double(const BigRational& r) { return r.convert_to<double>(); }

}  // namespace qosc
