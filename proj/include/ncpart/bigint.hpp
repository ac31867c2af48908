#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace ncpart {

// Arbitrary-precision integer used for all counts.  Chain counts grow like
// binomial powers and overflow 64 bits already for moderate parameters.
using BigInt = boost::multiprecision::cpp_int;

// Binomial coefficient C(a, b) with the convention that out-of-range
// arguments give 0: b < 0, b > a, or a < 0.
BigInt binomial(long long a, long long b);

// Multinomial coefficient total! / (parts[0]! * parts[1]! * ...).
// Returns 0 if any part is negative or the parts do not sum to `total`.
BigInt multinomial(long long total, const std::vector<long long>& parts);

// Catalan number C(2n, n) / (n + 1); 0 for n < 0.
BigInt catalan(long long n);

// Fuss-Catalan number C(kn + n, n) / (kn + 1) = |NC^(k)(n)|; requires n >= 0,
// k >= 1.
BigInt fuss_catalan(long long k, long long n);

std::string to_string(const BigInt& v);

}  // namespace ncpart
