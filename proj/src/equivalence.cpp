#include "qlens/equivalence.hpp"

#include <vector>

#include "qlens/error.hpp"
#include "qlens/smith.hpp"

namespace qlens {

namespace {

void require_comparable(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::DimensionMismatch, std::to_string(a.rows()) + "x" +
                                             std::to_string(a.cols()) + " vs " +
                                             std::to_string(b.rows()) + "x" +
                                             std::to_string(b.cols()));
  }
  if (!a.is_unipotent_upper() || !b.is_unipotent_upper()) {
    throw Error(Errc::InvalidMatrix, "expected unit-diagonal upper-triangular matrices");
  }
}

/// gcd of every strictly-upper entry except the corner (0, n-1), over both.
BigInt off_corner_gcd(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.rows();
  BigInt g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a(i, j).get_mpz_t());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b(i, j).get_mpz_t());
    }
  }
  return g;
}

struct UnknownLayout {
  explicit UnknownLayout(std::size_t n) : n(n), half(n * (n - 1) / 2), index(n * n, 0) {
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) index[i * n + j] = next++;
    }
  }
  std::size_t u(std::size_t i, std::size_t j) const { return index[i * n + j]; }
  std::size_t v(std::size_t i, std::size_t j) const { return half + index[i * n + j]; }

  std::size_t n;
  std::size_t half;
  std::vector<std::size_t> index;
};

}  // namespace

std::string NotEquivalent::describe() const {
  if (!obstruction) return "Diophantine system infeasible";
  return "corner <" + std::to_string(obstruction->row + 1) + "," +
         std::to_string(obstruction->col + 1) + "> differs modulo " +
         to_decimal(obstruction->modulus);
}

std::optional<Obstruction> obstruction_mod_k(const IntMatrix& a, const IntMatrix& b,
                                             const BigInt& k) {
  require_comparable(a, b);
  const std::size_t n = a.rows();
  if (k < 2 || n < 2) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (!mpz_divisible_p(a(i, j).get_mpz_t(), k.get_mpz_t()) ||
          !mpz_divisible_p(b(i, j).get_mpz_t(), k.get_mpz_t())) {
        return std::nullopt;
      }
    }
  }
  if (mpz_congruent_p(a(0, n - 1).get_mpz_t(), b(0, n - 1).get_mpz_t(), k.get_mpz_t())) {
    return std::nullopt;
  }
  return Obstruction{k, 0, n - 1};
}

bool verify_witness(const IntMatrix& a, const IntMatrix& b, const Witness& w) {
  if (a.rows() != b.rows() || w.u.rows() != a.rows() || w.v.rows() != a.rows()) return false;
  if (!w.u.is_unipotent_upper() || !w.v.is_unipotent_upper()) return false;
  const IntMatrix id = IntMatrix::identity(a.rows());
  return w.u * (a - id) == (b - id) * w.v;
}

EquivDecision decide_equiv(const IntMatrix& a, const IntMatrix& b) {
  require_comparable(a, b);
  const std::size_t n = a.rows();
  if (a == b) return Witness{IntMatrix::identity(n), IntMatrix::identity(n)};

  // The gcd g of the off-corner entries is the largest modulus for which the
  // corner is invariant; every k the corner test accepts divides g.
  if (n >= 2) {
    const BigInt g = off_corner_gcd(a, b);
    if (auto obs = obstruction_mod_k(a, b, g)) return NotEquivalent{obs};
  }

  const IntMatrix id = IntMatrix::identity(n);
  const IntMatrix c = a - id;
  const IntMatrix d = b - id;
  const UnknownLayout layout(n);
  IntMatrix system(layout.half, 2 * layout.half);
  std::vector<BigInt> rhs(layout.half);

  std::size_t eq = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++eq) {
      for (std::size_t k = i + 1; k < j; ++k) {
        system(eq, layout.u(i, k)) += c(k, j);
        system(eq, layout.v(k, j)) -= d(i, k);
      }
      rhs[eq] = d(i, j) - c(i, j);
    }
  }

  auto x = solve_diophantine(system, rhs);
  if (!x) return NotEquivalent{std::nullopt};

  Witness w{id, id};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      w.u(i, j) = (*x)[layout.u(i, j)];
      w.v(i, j) = (*x)[layout.v(i, j)];
    }
  }
  if (!verify_witness(a, b, w)) {
    throw std::logic_error("solver produced a witness that fails verification");
  }
  return w;
}

bool submatrix_necessary(const IntMatrix& a, const IntMatrix& b, std::size_t first,
                         std::size_t extent) {
  if (a.rows() != b.rows()) {
    throw Error(Errc::DimensionMismatch, "matrices differ in size");
  }
  if (first + extent >= a.rows()) {
    throw Error(Errc::IndexOutOfRange, "block [" + std::to_string(first) + ", " +
                                           std::to_string(first + extent) + "] outside n = " +
                                           std::to_string(a.rows()));
  }
  const std::size_t last = first + extent;
  return is_equivalent(decide_equiv(a.principal_block(first, last),
                                    b.principal_block(first, last)));
}

}  // namespace qlens
