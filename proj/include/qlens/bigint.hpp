#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qlens {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

/// Parses an optionally signed base-10 integer; throws Error(ParseError).
BigInt parse_decimal(std::string_view text);

}  // namespace qlens
