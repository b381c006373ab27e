#pragma once

#include "sosq/rational.hpp"

#include <cstdint>
#include <vector>

namespace sosq {

/// Integer point of the zero-sum hyperplane with two distinct coordinates:
/// l entries equal to n+1-l followed by n+1-l entries equal to -l.
struct TwoValuePoint {
  int n = 0;
  int l = 0;
  std::vector<std::int64_t> coordinates;

  std::vector<Rational> as_rationals() const;
  std::vector<double> as_doubles() const;
};

struct ExtremumResult {
  Rational value;
  /// Every l in [1, n] attaining value, ascending.
  std::vector<int> argmins;
};

/// p4 at the two-value point normalized to p1 = 0, p2 = 1:
/// ((n+1)^2 - 3l(n+1) + 3l^2) / ((n+1)(n+1-l) l). Throws OutOfRange.
Rational phi(int n, int l);

TwoValuePoint two_value_point(int n, int l);

/// Exhaustive minimum / maximum of phi(n, .) over integer l in [1, n].
ExtremumResult p4_min_int(int n);
ExtremumResult p4_max_int(int n);

/// Closed forms: alpha = 1/(n+1) for odd n, (4+2n+n^2)/(2n+3n^2+n^3) for even
/// n; beta = (1-n+n^2)/(n+n^2).
Rational alpha(int n);
Rational beta(int n);

// Exact identities behind the extremality of the endpoints. Each returns
// true iff the identity holds at (n, l) and its numerator has the expected
// sign and zero set.

/// beta - phi = (l-1)(n-l)(n+1)^2 / ((n+1) n l (n+1-l)), zero iff l in {1, n}.
bool check_max_identity(int n, int l);
/// phi - 1/(n+1) = (n+1-2l)^2 / ((n+1)(n+1-l) l), zero iff 2l = n+1.
bool check_min_identity(int n, int l);
/// For even n: phi - alpha = (n+1)((2l-(n+1))^2 - 1) / (l (n+1-l) n (n+2)),
/// zero iff l in {n/2, n/2+1}.
bool check_even_min_identity(int n, int l);

}  // namespace sosq
