#include "qlens/pathmatrix.hpp"

#include "qlens/error.hpp"
#include "qlens/numtheory.hpp"

namespace qlens {

std::vector<BigInt> count_row(const LensParams& params, std::size_t source) {
  const std::int64_t r = params.modulus();
  const std::size_t n = params.dimension();
  if (source >= n) throw Error(Errc::IndexOutOfRange, "source subgraph out of range");
  const auto ru = static_cast<std::size_t>(r);

  // reach[t]: paths from the source 0-vertex to (s, t) whose vertices after the
  // start are all non-0. Within subgraph s they are prefix sums along the cycle
  // m_s, 2 m_s, ..., (r-1) m_s, which starts right after the 0-vertex.
  std::vector<BigInt> reach(ru);
  std::vector<BigInt> row;
  row.reserve(n - source);
  BigInt returns = 0;  // paths that have hit their first 0-vertex by now

  for (std::size_t s = source; s < n; ++s) {
    const std::int64_t step = params.weight(s);
    BigInt running = s == source ? BigInt(1) : BigInt(0);
    std::int64_t t = 0;
    for (std::int64_t k = 1; k < r; ++k) {
      t += step;
      if (t >= r) t -= r;
      if (s != source) running += reach[static_cast<std::size_t>(t)];
      reach[static_cast<std::size_t>(t)] = running;
    }
    // The last vertex of the cycle, -m_s, steps onto (s, 0); the path then
    // runs horizontally along 0-vertices in exactly one way.
    returns += reach[static_cast<std::size_t>(reduce_mod(-step, r))];
    row.push_back(returns);
  }
  return row;
}

PathMatrix count_matrix(const LensParams& params) {
  const std::size_t n = params.dimension();
  PathMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = count_row(params, i);
    for (std::size_t j = i; j < n; ++j) out(i, j) = std::move(row[j - i]);
  }
  return out;
}

PathMatrix closed_form_all_ones(std::int64_t r, std::size_t n) {
  if (r <= 2 || n == 0) {
    throw Error(Errc::InvalidParams, "need r > 2 and n >= 1");
  }
  PathMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      out(i, j) = binomial(static_cast<std::uint64_t>(r) - 1 + (j - i), j - i);
    }
  }
  return out;
}

BigInt six_corner_polynomial(std::int64_t r) {
  if (r <= 2) throw Error(Errc::InvalidParams, "need r > 2");
  const BigInt x(static_cast<long>(r));
  const BigInt x2 = x * x;
  const BigInt x3 = x2 * x;
  const BigInt x4 = x3 * x;
  const BigInt x5 = x4 * x;
  const BigInt numerator = 22 * x + 15 * x2 - 5 * x3 + 5 * x4 + 3 * x5;
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), 40)) {
    throw Error(Errc::NonIntegerResult,
                "40 does not divide " + to_decimal(numerator) + " at r = " + std::to_string(r));
  }
  return BigInt(numerator / 40);
}

LensParams normalize(const LensParams& params) {
  const std::int64_t r = params.modulus();
  const std::size_t n = params.dimension();
  if (n == 1) return LensParams(r, {1});
  LensParams out = scaled(params, mod_inverse(params.weight(1), r));
  std::vector<std::int64_t> m(out.weights().begin(), out.weights().end());
  m.front() = 1;
  m.back() = 1;
  return LensParams(r, std::move(m));
}

}  // namespace qlens
