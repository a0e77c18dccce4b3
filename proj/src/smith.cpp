#include "qlens/smith.hpp"

#include <utility>

#include "qlens/error.hpp"

namespace qlens {

namespace {

/// Row operations are mirrored onto `rows_tracker` (same row count as the
/// working matrix), column operations onto `cols_tracker` (same column count).
/// A tracker with zero rows/cols is skipped.
class Diagonalizer {
 public:
  Diagonalizer(IntMatrix& work, IntMatrix& rows_tracker, IntMatrix& cols_tracker)
      : a_(work), s_(rows_tracker), t_(cols_tracker) {}

  /// Returns the rank. When `divisibility_chain` is false the result is only
  /// diagonal, which is all a solver needs.
  std::size_t run(bool divisibility_chain) {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    std::size_t k = 0;
    for (; k < m && k < n; ++k) {
      if (!pivot_to(k)) break;
      for (;;) {
        bool clean = eliminate(k);
        if (!clean) {
          pivot_to(k);
          continue;
        }
        if (!divisibility_chain) break;
        auto bad_row = row_not_divisible(k);
        if (!bad_row) break;
        add_row(k, *bad_row, BigInt(1));
      }
      if (a_(k, k) < 0) negate_row(k);
    }
    return k;
  }

 private:
  /// Moves the smallest non-zero entry of the trailing block to (k, k).
  bool pivot_to(std::size_t k) {
    std::size_t best_i = 0, best_j = 0;
    bool found = false;
    BigInt best;
    for (std::size_t i = k; i < a_.rows(); ++i) {
      for (std::size_t j = k; j < a_.cols(); ++j) {
        const BigInt& v = a_(i, j);
        if (v == 0) continue;
        if (!found || mpz_cmpabs(v.get_mpz_t(), best.get_mpz_t()) < 0) {
          best = abs(v);
          best_i = i;
          best_j = j;
          found = true;
          if (best == 1) break;
        }
      }
      if (found && best == 1) break;
    }
    if (!found) return false;
    swap_rows(k, best_i);
    swap_cols(k, best_j);
    return true;
  }

  /// Reduces row k and column k modulo the pivot. Returns true when both are
  /// zero apart from the pivot; otherwise a smaller remainder is left behind.
  bool eliminate(std::size_t k) {
    bool clean = true;
    BigInt q;
    const BigInt pivot = a_(k, k);
    for (std::size_t i = k + 1; i < a_.rows(); ++i) {
      if (a_(i, k) == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), a_(i, k).get_mpz_t(), pivot.get_mpz_t());
      add_row(i, k, -q);
      if (a_(i, k) != 0) clean = false;
    }
    for (std::size_t j = k + 1; j < a_.cols(); ++j) {
      if (a_(k, j) == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), a_(k, j).get_mpz_t(), pivot.get_mpz_t());
      add_col(j, k, -q);
      if (a_(k, j) != 0) clean = false;
    }
    return clean;
  }

  std::optional<std::size_t> row_not_divisible(std::size_t k) const {
    const BigInt& pivot = a_(k, k);
    for (std::size_t i = k + 1; i < a_.rows(); ++i) {
      for (std::size_t j = k + 1; j < a_.cols(); ++j) {
        if (a_(i, j) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), pivot.get_mpz_t())) {
          return i;
        }
      }
    }
    return std::nullopt;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    a_.swap_rows(a, b);
    if (s_.rows() > 0) s_.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    a_.swap_cols(a, b);
    if (t_.cols() > 0) t_.swap_cols(a, b);
  }
  void add_row(std::size_t target, std::size_t source, const BigInt& f) {
    a_.add_row_multiple(target, source, f);
    if (s_.rows() > 0) s_.add_row_multiple(target, source, f);
  }
  void add_col(std::size_t target, std::size_t source, const BigInt& f) {
    a_.add_col_multiple(target, source, f);
    if (t_.cols() > 0) t_.add_col_multiple(target, source, f);
  }
  void negate_row(std::size_t i) {
    a_.negate_row(i);
    if (s_.rows() > 0) s_.negate_row(i);
  }

  IntMatrix& a_;
  IntMatrix& s_;
  IntMatrix& t_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm out{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()), 0};
  Diagonalizer d(out.diagonal, out.left, out.right);
  out.rank = d.run(true);
  return out;
}

std::optional<std::vector<BigInt>> solve_diophantine(const IntMatrix& m,
                                                     const std::vector<BigInt>& rhs) {
  if (rhs.size() != m.rows()) {
    throw Error(Errc::DimensionMismatch, "right-hand side has " + std::to_string(rhs.size()) +
                                             " entries for " + std::to_string(m.rows()) +
                                             " equations");
  }
  // Row operations act on the right-hand side directly instead of building S.
  IntMatrix work = m;
  IntMatrix transformed_rhs(m.rows(), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) transformed_rhs(i, 0) = rhs[i];
  IntMatrix right = IntMatrix::identity(m.cols());
  Diagonalizer d(work, transformed_rhs, right);
  const std::size_t rank = d.run(false);

  std::vector<BigInt> y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const BigInt& c = transformed_rhs(i, 0);
    if (i < rank) {
      if (!mpz_divisible_p(c.get_mpz_t(), work(i, i).get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), c.get_mpz_t(), work(i, i).get_mpz_t());
    } else if (c != 0) {
      return std::nullopt;
    }
  }
  return right * y;
}

}  // namespace qlens
