#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace parthom {

// All combinatorial counts (multinomials, descent statistics, Betti numbers,
// characters) are exact arbitrary-precision integers.  No floating point.
using Integer = boost::multiprecision::cpp_int;

Integer factorial(int n);

// binom(n, k) with the usual convention binom(n, k) = 0 for k < 0 or k > n.
Integer binomial(int n, int k);

// n! / (k1! k2! ... kp!) for the parts in `ks`; requires sum(ks) == n.
Integer multinomial_of(int n, const std::vector<int>& ks);

inline bool fits_int64(const Integer& v) {
    return v >= INT64_MIN && v <= INT64_MAX;
}

std::string to_string(const Integer& v);

}  // namespace parthom
