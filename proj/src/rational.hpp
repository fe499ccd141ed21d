#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace p5g {

// Every charge amount is an exact rational over arbitrary-precision integers.
// No floating point exists anywhere in the discharge module.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace p5g
