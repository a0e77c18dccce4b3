#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "qlens/bigint.hpp"

namespace qlens {

struct PrimePower {
  std::int64_t prime = 0;
  unsigned exponent = 0;

  std::int64_t value() const;
  auto operator<=>(const PrimePower&) const = default;
};

/// r = 2^two_exponent * prod(odd_primes), odd primes strictly increasing.
struct Factorization {
  unsigned two_exponent = 0;
  std::vector<PrimePower> odd_primes;

  std::int64_t value() const;
  std::optional<std::int64_t> smallest_odd_prime() const;
  /// Maximal prime powers dividing the value, 2 first when present.
  std::vector<std::int64_t> prime_power_divisors() const;

  bool operator==(const Factorization&) const = default;
};

/// Canonical residue in [0, modulus - 1].
std::int64_t reduce_mod(std::int64_t a, std::int64_t modulus);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Inverse of a modulo `modulus` in [0, modulus - 1].
/// Throws BadModulus for modulus <= 1 and NonUnit when gcd(a, modulus) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t modulus);

/// Trial-division factorization. Throws BadModulus for r <= 1.
Factorization factorize(std::int64_t r);

bool is_prime(std::int64_t p);

/// The units of Z/rZ in increasing order.
std::vector<std::int64_t> units_mod(std::int64_t r);

/// Exact binomial coefficient; zero when b > a.
BigInt binomial(std::uint64_t a, std::uint64_t b);

/// Largest k with p^k | x, or nullopt (infinite) for x = 0.
/// Throws NotPrime when p is not prime.
std::optional<unsigned> padic_valuation(const BigInt& x, std::int64_t p);

}  // namespace qlens
