#pragma once

#include "sosq/exactpoly.hpp"
#include "sosq/poly.hpp"
#include "sosq/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sosq {

struct WeightedSquare {
  Rational weight;
  SparsePoly base;
};

/// target = sum weight_i * base_i^2, either exactly in R[x_1..x_{n+1}] or,
/// when modulo_p1 is set, up to a multiple of p1. The multiple is never
/// stored: reduce_mod_p1 of the difference must vanish.
struct Certificate {
  int n = 0;
  PowerSumQuartic target;
  std::vector<WeightedSquare> squares;
  bool modulo_p1 = false;

  std::size_t nvars() const { return static_cast<std::size_t>(n) + 1; }
};

/// p2^2 - p4 = sum_{i<j} 2 (x_i x_j)^2. Needs n >= 1.
Certificate cert_p22_minus_p4(int n);

/// S1 = p4 - p2^2/(n+1) = sum_{i<j} (x_i^2 - x_j^2)^2 / (n+1). Needs n >= 2.
Certificate cert_S1(int n);

/// S2 = (1-n+n^2) p2^2 - n(n+1) p4 == 2 sum ((x_i - x_j)(x_k - x_l))^2 mod (p1),
/// summed over the 3 C(n+1, 4) unordered pairs of disjoint index pairs.
/// Throws UnsupportedN for n < 3.
Certificate cert_S2(int n);

/// a' * cert_S1 + b' * cert_S2 for the SOS-cone coordinates of f. Throws
/// NotInSosCone (with the raw coordinates in the message) when infeasible.
Certificate cert_for(int n, const InvariantQuartic& f);

/// Certificate valid in R[x] for a globally nonnegative f, built from
/// p2^2 - p4, (n+1) p4 - p2^2 and p2^2. Throws NotGloballyPsd.
Certificate cert_global(int n, const InvariantQuartic& f);

/// Exact check of the certificate identity plus evaluation at 100 seeded
/// random rational points with zero coordinate sum. Never throws; malformed
/// certificates (negative weights, wrong ring, non-quadratic bases) fail.
bool verify(const Certificate& c);

/// Copy with every weight multiplied by s >= 0 (target scaled too).
Certificate scaled(const Certificate& c, const Rational& s);

/// Text format:
///   sosquartic-certificate 1
///   n <n>
///   modulo_p1 <0|1>
///   target <c1111> <c211> <c31> <c22> <c4>
///   <weight> ; <canonical polynomial>     (one line per square)
std::string serialize(const Certificate& c);
Certificate parse_certificate(std::string_view text);

}  // namespace sosq
