#include "sympgrass/bigint.hpp"

#include "sympgrass/errors.hpp"

namespace sympgrass {

BigInt binomial(long n, long k) {
  if (n < 0) throw InputError("binomial: negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt factorial(long n) {
  if (n < 0) throw InputError("factorial: negative argument");
  BigInt result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace sympgrass
