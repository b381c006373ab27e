#pragma once

#include "sosq/poly.hpp"
#include "sosq/rational.hpp"

#include <array>
#include <cstddef>

namespace sosq {

/// Coordinates of a symmetric quartic on the products
/// (p1^4, p2*p1^2, p3*p1, p2^2, p4).
struct PowerSumQuartic {
  Rational c1111{0};
  Rational c211{0};
  Rational c31{0};
  Rational c22{0};
  Rational c4{0};

  std::array<Rational, 5> as_array() const { return {c1111, c211, c31, c22, c4}; }
  static PowerSumQuartic from_array(const std::array<Rational, 5>& v) {
    return {v[0], v[1], v[2], v[3], v[4]};
  }

  friend bool operator==(const PowerSumQuartic&, const PowerSumQuartic&) = default;
};

/// The class a*p2^2 + b*p4 modulo (p1).
struct InvariantQuartic {
  Rational a{0};
  Rational b{0};

  bool is_zero() const { return a == 0 && b == 0; }
  PowerSumQuartic as_power_sum() const { return {0, 0, 0, a, b}; }

  friend bool operator==(const InvariantQuartic&, const InvariantQuartic&) = default;
};

InvariantQuartic operator*(const Rational& s, const InvariantQuartic& f);
InvariantQuartic operator+(const InvariantQuartic& f, const InvariantQuartic& g);

/// Smallest variable count for which the five power-sum products are
/// linearly independent.
inline constexpr std::size_t kMinPowerSumVars = 5;

SparsePoly expand(const PowerSumQuartic& v, std::size_t nvars);

/// Inverse of expand for symmetric quartic forms in at least kMinPowerSumVars
/// variables. Throws NotHomogeneousQuartic, NotSymmetric or DegenerateBasis.
PowerSumQuartic to_power_sum(const SparsePoly& f);

/// True when f is unchanged by every transposition (1 i).
bool is_symmetric(const SparsePoly& f);

/// Image under x_{n+1} -> -(x_1 + ... + x_n); the result has one variable
/// fewer. f and g agree modulo (p1) iff their images agree.
SparsePoly reduce_mod_p1(const SparsePoly& f);

/// Image under y_i -> x_1 - x_{i+1}; the result has one variable more.
SparsePoly y_to_x(const SparsePoly& f);

InvariantQuartic invariant_part(const PowerSumQuartic& v);

Rational evaluate(const SparsePoly& f, std::span<const Rational> point);

}  // namespace sosq
