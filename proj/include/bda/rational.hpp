#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bda {

// Exact arbitrary-precision rational. Governance power and tension distances
// are rationals so that partition and mean identities hold with no drift.
using Rational = boost::multiprecision::cpp_rational;

// "n" when integral, "n/d" otherwise; parseable and byte-stable.
inline std::string rational_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace bda
