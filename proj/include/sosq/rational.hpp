#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sosq {

/// Exact rational scalar. gmpxx keeps values canonical (lowest terms,
/// positive denominator) as long as every construction goes through
/// make_rational / parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Accepts `p`, `-p`, `+p`, `p/q` with decimal digits only. Decimal points,
/// exponents and zero denominators are rejected with ErrorCode::Parse.
Rational parse_rational(std::string_view text);

/// `num/den`, or just `num` when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace sosq
