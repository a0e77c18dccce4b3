#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qlens/bigint.hpp"
#include "qlens/matrix.hpp"

namespace qlens {

/// left * input * right = diagonal, with left and right unimodular and the
/// non-zero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  std::size_t rank = 0;
};

/// Deterministic pivoting: smallest non-zero absolute value in the trailing
/// block, ties to the lowest row, then the lowest column. Off-pivot entries are
/// reduced modulo the pivot before anything is zeroed.
SmithForm smith_normal_form(const IntMatrix& m);

/// Some x with m * x = rhs over the integers, or nullopt if none exists.
/// Free coordinates of the diagonalized system are set to zero.
std::optional<std::vector<BigInt>> solve_diophantine(const IntMatrix& m,
                                                     const std::vector<BigInt>& rhs);

}  // namespace qlens
