#include "smc/field.hpp"

#include <string>

#include "smc/error.hpp"

namespace smc {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw InvalidInput("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

Scalar Field::inv(Scalar a) const {
  if (a == 0) throw InvalidInput("inverse of zero");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    const std::int64_t tt = t - q * new_t;
    t = new_t;
    new_t = tt;
    const std::int64_t rr = r - q * new_r;
    r = new_r;
    new_r = rr;
  }
  return reduce(t);
}

}  // namespace smc
