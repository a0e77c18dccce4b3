#include "qlens/invariants.hpp"

#include <algorithm>

#include "qlens/error.hpp"
#include "qlens/numtheory.hpp"
#include "qlens/pathmatrix.hpp"

namespace qlens {

std::string Signature::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < windows.size(); ++i) {
    if (i > 0) out += ",";
    out += "(";
    for (std::size_t t = 0; t < windows[i].size(); ++t) {
      if (t > 0) out += ",";
      out += std::to_string(windows[i][t]);
    }
    out += ")";
  }
  return out + ")";
}

Signature signature(const LensParams& params) {
  const std::size_t n = params.dimension();
  Signature sig;
  for (const auto& pp : factorize(params.modulus()).odd_primes) {
    const std::int64_t p = pp.prime;
    const auto width = static_cast<std::size_t>(p - 1);
    sig.primes.push_back(p);
    std::vector<std::int64_t> tuple;
    // 1-based t = 1 .. n - p covers 0-based weights t .. t + p - 2.
    for (std::size_t t = 1; t + static_cast<std::size_t>(p) <= n; ++t) {
      std::int64_t prod = 1;
      for (std::size_t l = t; l < t + width; ++l) prod = (prod * (params.weight(l) % p)) % p;
      tuple.push_back(prod);
    }
    sig.windows.push_back(std::move(tuple));
  }
  return sig;
}

std::vector<DivisibilityCheck> check_divisibility(const LensParams& params) {
  return check_divisibility(params, count_matrix(params));
}

std::vector<DivisibilityCheck> check_divisibility(const LensParams& params,
                                                  const IntMatrix& counts) {
  const std::int64_t r = params.modulus();
  const std::size_t n = params.dimension();
  if (counts.rows() != n || counts.cols() != n) {
    throw Error(Errc::DimensionMismatch, "count matrix does not match parameters");
  }
  const Factorization f = factorize(r);
  std::vector<DivisibilityCheck> out;
  auto entry = [](std::size_t a, std::size_t b) {
    return "<" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ">";
  };

  for (const auto& pp : f.odd_primes) {
    const BigInt q(static_cast<long>(pp.value()));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n && b - a < static_cast<std::size_t>(pp.prime); ++b) {
        out.push_back({"odd-prime-power", a, b,
                       std::to_string(pp.value()) + " | " + entry(a, b),
                       mpz_divisible_p(counts(a, b).get_mpz_t(), q.get_mpz_t()) != 0});
      }
    }
  }

  const unsigned t = f.two_exponent;
  if (t > 1) {
    const BigInt q = BigInt(1) << t;
    for (std::size_t a = 0; a + 3 < n; ++a) {
      out.push_back({"two-power-1to4", a, a + 3,
                     to_decimal(q) + " | " + entry(a, a + 3),
                     mpz_divisible_p(counts(a, a + 3).get_mpz_t(), q.get_mpz_t()) != 0});
    }
    for (std::size_t a = 0; a + 4 < n; ++a) {
      const auto v = padic_valuation(counts(a, a + 4), 2);
      out.push_back({"two-power-1to5", a, a + 4,
                     "v2" + entry(a, a + 4) + " = " + std::to_string(t - 2),
                     v.has_value() && *v == t - 2});
    }
  }
  return out;
}

CongruenceResidues congruence_main(const LensParams& params, std::int64_t p, unsigned alpha) {
  const std::int64_t r = params.modulus();
  const std::size_t n = params.dimension();
  if (p == 2 || !is_prime(p)) {
    throw Error(Errc::InvalidParams, std::to_string(p) + " is not an odd prime");
  }
  const PrimePower pp{p, alpha};
  if (alpha == 0 || r % pp.value() != 0) {
    throw Error(Errc::InvalidParams,
                std::to_string(p) + "^" + std::to_string(alpha) + " does not divide r");
  }
  if (n > static_cast<std::size_t>(p) + 1) {
    throw Error(Errc::InvalidParams, "dimension exceeds p + 1");
  }
  const std::int64_t q = pp.value();
  const BigInt modulus(static_cast<long>(q));
  const auto row = count_row(params, 0);
  for (std::size_t a = 1; a + 1 < n; ++a) {
    if (!mpz_divisible_p(row[a].get_mpz_t(), modulus.get_mpz_t())) {
      throw Error(Errc::HypothesisUnmet, "<1," + std::to_string(a + 1) + "> = " +
                                             to_decimal(row[a]) + " is not a multiple of " +
                                             std::to_string(q));
    }
  }

  CongruenceResidues out;
  out.modulus = modulus;
  mpz_fdiv_r(out.lhs.get_mpz_t(), row[n - 1].get_mpz_t(), modulus.get_mpz_t());
  BigInt rhs = binomial(static_cast<std::uint64_t>(r) + n - 2, n - 1);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    rhs *= static_cast<long>(mod_inverse(params.weight(k), q));
    rhs %= modulus;
  }
  mpz_fdiv_r(out.rhs.get_mpz_t(), rhs.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

BigInt lower_bound_classes(std::int64_t r, std::size_t n) {
  if (r <= 2) throw Error(Errc::BadModulus, "need r > 2");
  BigInt out = 1;
  for (const auto& pp : factorize(r).odd_primes) {
    const auto p = static_cast<std::size_t>(pp.prime);
    if (n <= p) continue;
    BigInt factor;
    mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(p - 1), n - p);
    out *= factor;
  }
  return out;
}

std::size_t phitilde_formula(std::int64_t r) {
  if (r <= 2) throw Error(Errc::BadModulus, "need r > 2");
  const Factorization f = factorize(r);
  const auto p = f.smallest_odd_prime();
  if (!p) return 6;
  const auto candidate = static_cast<std::size_t>(*p) + 1;
  return f.two_exponent >= 2 ? std::min<std::size_t>(6, candidate) : candidate;
}

}  // namespace qlens
