#pragma once

#include "sosq/exactpoly.hpp"
#include "sosq/poly.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace sosq {

/// Orbit of a monomial under coordinate permutations, described by its
/// exponents sorted in decreasing order.
struct OrbitStats {
  std::vector<std::uint32_t> sorted_exponents;
  /// nvars! / prod(multiplicity of each exponent value)!
  Integer orbit_size;
};

OrbitStats orbit_stats(const Monomial& m);

/// Average of f over all permutations of its variables. Works per orbit type:
/// the coefficients of all monomials sharing a sorted exponent vector are
/// summed, divided by the orbit size and spread over the orbit.
SparsePoly reynolds(const SparsePoly& f);

/// The three products symmetrized in the invariant-SOS description, as
/// polynomials in n+1 variables: p2^2, (x1^2 - x2^2)^2, (x1 - x2)^2 (x3 - x4)^2.
std::array<SparsePoly, 3> symmetrization_sources(int n);

/// Closed forms of the symmetrized sources in the power-sum basis. Throws
/// UnsupportedN for n < 3.
std::array<PowerSumQuartic, 3> lemma_sym_closed_form(int n);

/// Symmetrizes each source exactly and compares with the closed forms. For
/// n >= 4 the comparison happens on power-sum coordinates; at n = 3 the basis
/// is degenerate, so the expanded polynomials are compared instead.
bool verify_lemma_sym(int n);

}  // namespace sosq
