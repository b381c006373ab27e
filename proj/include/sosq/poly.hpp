#pragma once

#include "sosq/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sosq {

struct Monomial {
  std::vector<std::uint32_t> exponents;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}

  std::size_t nvars() const noexcept { return exponents.size(); }
  std::uint32_t degree() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// are broken by the first differing exponent (x1 > x2 > ...). Used as the map
/// comparator so that iteration order is the canonical serialization order.
struct GrlexFirst {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const noexcept;
};

struct ExponentHash {
  std::size_t operator()(const std::vector<std::uint32_t>& e) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : e) h = (h ^ v) * 1099511628211ULL;
    return h;
  }
};

/// Sparse multivariate polynomial over the rationals. Zero coefficients are
/// never stored and every monomial has exactly nvars() exponents.
class SparsePoly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexFirst>;

  explicit SparsePoly(std::size_t nvars);

  static SparsePoly constant(std::size_t nvars, const Rational& c);
  /// The coordinate x_{index+1}.
  static SparsePoly variable(std::size_t nvars, std::size_t index);
  /// p_k = x_1^k + ... + x_nvars^k.
  static SparsePoly power_sum(std::size_t nvars, std::uint32_t k);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Highest total degree, or -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous(std::uint32_t d) const noexcept;

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  SparsePoly& operator+=(const SparsePoly& rhs);
  SparsePoly& operator-=(const SparsePoly& rhs);
  SparsePoly& operator*=(const Rational& c);
  /// this += c * rhs, without materializing the product.
  SparsePoly& add_scaled(const SparsePoly& rhs, const Rational& c);

  friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) { return lhs += rhs; }
  friend SparsePoly operator-(SparsePoly lhs, const SparsePoly& rhs) { return lhs -= rhs; }
  friend SparsePoly operator*(SparsePoly lhs, const Rational& c) { return lhs *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly rhs) { return rhs *= c; }
  friend SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs);
  SparsePoly operator-() const;

  SparsePoly pow(std::uint32_t e) const;

  /// Relabels variables: x_i becomes x_{perm[i]}.
  SparsePoly permuted(std::span<const std::size_t> perm) const;
  SparsePoly swapped(std::size_t i, std::size_t j) const;

  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const SparsePoly& lhs, const SparsePoly& rhs) {
    return lhs.nvars_ == rhs.nvars_ && lhs.terms_ == rhs.terms_;
  }

 private:
  void check_compatible(const SparsePoly& rhs) const;

  std::size_t nvars_;
  Terms terms_;
};

/// Ring map x_i -> images[i]. All images must share one variable count, which
/// becomes the variable count of the result.
SparsePoly substitute(const SparsePoly& f, std::span<const SparsePoly> images);

/// Canonical text: terms in grlex order joined by " + ", each written as
/// `coeff` followed by ` * xi^e` for every variable with nonzero exponent.
/// The zero polynomial is "0".
std::string to_string(const SparsePoly& f);

/// Inverse of to_string. Rejects unknown tokens, variable indices above nvars,
/// repeated monomials and zero coefficients, so canonical text round-trips
/// byte for byte.
SparsePoly parse_poly(std::string_view text, std::size_t nvars);

}  // namespace sosq
