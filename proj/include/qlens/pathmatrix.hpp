#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qlens/bigint.hpp"
#include "qlens/lensgraph.hpp"
#include "qlens/matrix.hpp"

namespace qlens {

/// n x n upper-triangular matrix of legal-path counts; unit diagonal,
/// r on the first superdiagonal and r(r+1)/2 on the second.
using PathMatrix = IntMatrix;

/// Entries <source, j> for j = source .. n-1 (0-based), computed by sweeping
/// the subgraphs left to right. O(n r) big-integer additions.
std::vector<BigInt> count_row(const LensParams& params, std::size_t source);

/// The full legal-path count matrix of the N-graph (equivalently the M-graph).
PathMatrix count_matrix(const LensParams& params);

/// <i, j> = binom(r - 1 + (j - i), j - i): the matrix of the all-ones vector.
PathMatrix closed_form_all_ones(std::int64_t r, std::size_t n);

/// Corner <1,6> of (r; (1, 1, -1, 1, 1, 1)) in closed form:
/// (22 r + 15 r^2 - 5 r^3 + 5 r^4 + 3 r^5) / 40.
/// Throws NonIntegerResult if 40 fails to divide the numerator.
BigInt six_corner_polynomial(std::int64_t r);

/// Equivalent weights with m_1 = m_2 = m_n = 1: scale by m_2^{-1}, then
/// overwrite the endpoints (neither affects the matrix).
LensParams normalize(const LensParams& params);

}  // namespace qlens
