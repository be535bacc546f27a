#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sympgrass {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k) for n >= 0; zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

BigInt factorial(long n);

inline std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace sympgrass
