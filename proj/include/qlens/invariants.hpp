#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qlens/bigint.hpp"
#include "qlens/lensgraph.hpp"
#include "qlens/matrix.hpp"

namespace qlens {

/// For each odd prime p of r (increasing), the residues modulo p of the
/// window products m_{t+1} * ... * m_{t+p-1} for t = 1 .. n - p (1-based).
/// Equal signatures are necessary for equivalence.
struct Signature {
  std::vector<std::int64_t> primes;
  std::vector<std::vector<std::int64_t>> windows;

  auto operator<=>(const Signature&) const = default;
  std::string to_string() const;
};

Signature signature(const LensParams& params);

/// One divisibility or valuation claim about an entry <a, b> (0-based).
struct DivisibilityCheck {
  std::string rule;   // "odd-prime-power", "two-power-1to4", "two-power-1to5"
  std::size_t a = 0;
  std::size_t b = 0;
  std::string claim;  // human-readable, 1-based indices
  bool passed = false;
};

/// Evaluates every claim that applies to these parameters:
///  - p^k | <a,b> whenever p^k || r (p odd) and 0 < b - a < p;
///  - 2^t | <a,a+3> whenever 2^t || r with t > 1;
///  - the 2-adic valuation of <a,a+4> is exactly t - 2 whenever 2^t || r, t > 1.
/// The 2-power claims are stated for the top-left corner of 4- and 5-vectors;
/// they apply to every window because a block only sees its own weights.
std::vector<DivisibilityCheck> check_divisibility(const LensParams& params);
std::vector<DivisibilityCheck> check_divisibility(const LensParams& params,
                                                  const IntMatrix& counts);

struct CongruenceResidues {
  BigInt modulus;
  BigInt lhs;  // <1,n> mod p^alpha
  BigInt rhs;  // binom(r+n-2, n-1) * prod_{k=2}^{n-1} m_k^{-1} mod p^alpha

  bool holds() const { return lhs == rhs; }
};

/// Both sides of the corner congruence for an odd prime power p^alpha | r and
/// n <= p + 1. Throws InvalidParams when those preconditions fail and
/// HypothesisUnmet when some <1,a>, 1 < a < n, is not a multiple of p^alpha.
CongruenceResidues congruence_main(const LensParams& params, std::int64_t p, unsigned alpha);

/// prod over odd primes p_i of r of ceil((p_i - 1)^(n - p_i)); a factor is 1
/// when n <= p_i.
BigInt lower_bound_classes(std::int64_t r, std::size_t n);

/// Least dimension with more than one class: p + 1 when 4 does not divide r,
/// min(6, p + 1) when it does, and 6 for powers of two.
std::size_t phitilde_formula(std::int64_t r);

}  // namespace qlens
