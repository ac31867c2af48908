#include "ncpart/bigint.hpp"

#include <stdexcept>

namespace ncpart {

BigInt binomial(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return result;
}

BigInt multinomial(long long total, const std::vector<long long>& parts) {
  long long sum = 0;
  for (long long p : parts) {
    if (p < 0) return 0;
    sum += p;
  }
  if (sum != total || total < 0) return 0;
  BigInt result = 1;
  long long remaining = total;
  for (long long p : parts) {
    result *= binomial(remaining, p);
    remaining -= p;
  }
  return result;
}

BigInt catalan(long long n) {
  if (n < 0) return 0;
  BigInt c = binomial(2 * n, n);
  BigInt d = n + 1;
  if (c % d != 0) throw std::logic_error("catalan: inexact division");
  return c / d;
}

BigInt fuss_catalan(long long k, long long n) {
  if (n < 0 || k < 1) throw std::invalid_argument("fuss_catalan: bad arguments");
  BigInt c = binomial(k * n + n, n);
  BigInt d = k * n + 1;
  if (c % d != 0) throw std::logic_error("fuss_catalan: inexact division");
  return c / d;
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace ncpart
