#include "qlens/numtheory.hpp"

#include <string>

#include "qlens/error.hpp"

namespace qlens {

BigInt parse_decimal(std::string_view text) {
  std::size_t digits_from = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (text.size() == digits_from) {
    throw Error(Errc::ParseError, "empty integer literal");
  }
  for (std::size_t i = digits_from; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw Error(Errc::ParseError, "not a decimal integer: '" + std::string(text) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits, 10);
}

std::int64_t PrimePower::value() const {
  std::int64_t v = 1;
  for (unsigned i = 0; i < exponent; ++i) v *= prime;
  return v;
}

std::int64_t Factorization::value() const {
  std::int64_t v = std::int64_t{1} << two_exponent;
  for (const auto& pp : odd_primes) v *= pp.value();
  return v;
}

std::optional<std::int64_t> Factorization::smallest_odd_prime() const {
  if (odd_primes.empty()) return std::nullopt;
  return odd_primes.front().prime;
}

std::vector<std::int64_t> Factorization::prime_power_divisors() const {
  std::vector<std::int64_t> out;
  if (two_exponent > 0) out.push_back(std::int64_t{1} << two_exponent);
  for (const auto& pp : odd_primes) out.push_back(pp.value());
  return out;
}

std::int64_t reduce_mod(std::int64_t a, std::int64_t modulus) {
  std::int64_t x = a % modulus;
  return x < 0 ? x + modulus : x;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t modulus) {
  if (modulus <= 1) {
    throw Error(Errc::BadModulus, "modulus must exceed 1, got " + std::to_string(modulus));
  }
  // Extended Euclid on (a mod r, r); coefficients stay below r in magnitude.
  std::int64_t old_r = reduce_mod(a, modulus), r = modulus;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw Error(Errc::NonUnit, std::to_string(a) + " is not invertible modulo " +
                                   std::to_string(modulus));
  }
  return reduce_mod(old_s, modulus);
}

Factorization factorize(std::int64_t r) {
  if (r <= 1) {
    throw Error(Errc::BadModulus, "cannot factorize " + std::to_string(r));
  }
  Factorization f;
  while (r % 2 == 0) {
    r /= 2;
    ++f.two_exponent;
  }
  for (std::int64_t p = 3; p * p <= r; p += 2) {
    if (r % p != 0) continue;
    PrimePower pp{p, 0};
    while (r % p == 0) {
      r /= p;
      ++pp.exponent;
    }
    f.odd_primes.push_back(pp);
  }
  if (r > 1) f.odd_primes.push_back({r, 1});
  return f;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> units_mod(std::int64_t r) {
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a < r; ++a) {
    if (gcd(a, r) == 1) out.push_back(a);
  }
  return out;
}

BigInt binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), a, b);
  return out;
}

std::optional<unsigned> padic_valuation(const BigInt& x, std::int64_t p) {
  if (!is_prime(p)) {
    throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  }
  if (x == 0) return std::nullopt;
  BigInt rest;
  BigInt prime(static_cast<long>(p));
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

}  // namespace qlens
