#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lucky {

// Arbitrary-precision integer used for every count (L_n, A_n, factorials,
// tallies). Counts are nonnegative; signed storage keeps intermediate
// differences in recurrences exact.
using BigCount = boost::multiprecision::cpp_int;

// Exact rational, always normalized to lowest terms with a positive
// denominator.
using ExactRational = boost::multiprecision::cpp_rational;

// Renders r as "p/q" in lowest terms. Integers keep the "/1" suffix so the
// format is uniform ("1/1", "0/1").
std::string to_string(const ExactRational& r);

std::string to_string(const BigCount& v);

// n! from a shared, lazily grown cache. Thread-safe.
BigCount factorial(std::size_t n);

// C(n, k); zero when k > n.
BigCount binomial(std::size_t n, std::size_t k);

// n! / m! for m <= n, as the falling product (m+1)(m+2)...n.
BigCount falling_ratio(std::size_t n, std::size_t m);

}  // namespace lucky
