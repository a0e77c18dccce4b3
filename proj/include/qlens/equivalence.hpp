#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "qlens/bigint.hpp"
#include "qlens/matrix.hpp"

namespace qlens {

/// Certificate for A ~ B: unipotent upper-triangular U, V with
/// U (A - I) = (B - I) V.
struct Witness {
  IntMatrix u;
  IntMatrix v;
};

/// The corner entries of A - I and B - I differ modulo `modulus` while every
/// other strictly-upper entry of both is a multiple of it. Row/column are
/// 0-based.
struct Obstruction {
  BigInt modulus;
  std::size_t row = 0;
  std::size_t col = 0;
};

struct NotEquivalent {
  /// nullopt: the Diophantine system for (U, V) has no integer solution.
  std::optional<Obstruction> obstruction;

  std::string describe() const;
};

using EquivDecision = std::variant<Witness, NotEquivalent>;

inline bool is_equivalent(const EquivDecision& d) { return std::holds_alternative<Witness>(d); }

/// Decides A ~ B exactly. Both must be square, unit-diagonal and upper
/// triangular (Error(InvalidMatrix) otherwise) and of equal size
/// (Error(DimensionMismatch)).
///
/// With U = I + U', V = I + V' the condition is the integer linear system
///   U' (A - I) - (B - I) V' = (B - I) - (A - I)
/// in the strictly-upper entries of U' then V' (row-major), one equation per
/// strictly-upper position. A cheap modular corner test runs first.
EquivDecision decide_equiv(const IntMatrix& a, const IntMatrix& b);

/// The corner test for a given modulus k >= 2; nullopt when it does not apply.
std::optional<Obstruction> obstruction_mod_k(const IntMatrix& a, const IntMatrix& b,
                                             const BigInt& k);

bool verify_witness(const IntMatrix& a, const IntMatrix& b, const Witness& w);

/// Necessary condition: the principal blocks on [first, first + extent] must be
/// equivalent. Throws IndexOutOfRange when the block does not fit.
bool submatrix_necessary(const IntMatrix& a, const IntMatrix& b, std::size_t first,
                         std::size_t extent);

}  // namespace qlens
