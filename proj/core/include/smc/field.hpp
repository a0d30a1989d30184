#pragma once

#include <cstdint>

namespace smc {

using Scalar = std::uint32_t;

/// Prime field F_p. Scalars are canonical residues 0..p-1.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 101;

  /// Throws InvalidInput unless p is a prime below 2^31.
  explicit Field(std::uint32_t p = kDefaultPrime);

  std::uint32_t p() const { return p_; }

  Scalar reduce(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    return static_cast<Scalar>(r < 0 ? r + m : r);
  }
  Scalar add(Scalar a, Scalar b) const {
    const Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// Multiplicative inverse; a must be nonzero.
  Scalar inv(Scalar a) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

}  // namespace smc
