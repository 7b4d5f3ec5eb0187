#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qmacd {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

} // namespace qmacd
