#include "sosq/exactpoly.hpp"

#include "sosq/error.hpp"

#include <string>
#include <vector>

namespace sosq {

InvariantQuartic operator*(const Rational& s, const InvariantQuartic& f) {
  return {s * f.a, s * f.b};
}

InvariantQuartic operator+(const InvariantQuartic& f, const InvariantQuartic& g) {
  return {f.a + g.a, f.b + g.b};
}

SparsePoly expand(const PowerSumQuartic& v, std::size_t nvars) {
  if (nvars < 2) throw Error(ErrorCode::DimensionMismatch, "expand needs at least 2 variables");
  const auto p1 = SparsePoly::power_sum(nvars, 1);
  const auto p2 = SparsePoly::power_sum(nvars, 2);
  const auto p3 = SparsePoly::power_sum(nvars, 3);
  const auto p4 = SparsePoly::power_sum(nvars, 4);
  const auto p1sq = p1 * p1;

  SparsePoly out(nvars);
  if (v.c1111 != 0) out.add_scaled(p1sq * p1sq, v.c1111);
  if (v.c211 != 0) out.add_scaled(p2 * p1sq, v.c211);
  if (v.c31 != 0) out.add_scaled(p3 * p1, v.c31);
  if (v.c22 != 0) out.add_scaled(p2 * p2, v.c22);
  out.add_scaled(p4, v.c4);
  return out;
}

namespace {

// Sample points for the coefficient solve, zero-padded to nvars. Power sums
// ignore zero coordinates, so the system is the same for every nvars >= 4.
constexpr std::array<std::array<long, 4>, 5> kSamplePoints{{
    {1, 0, 0, 0},
    {1, 1, 0, 0},
    {1, 2, 3, 0},
    {1, -1, 0, 0},
    {1, 1, -1, -1},
}};

constexpr std::array<long, 5> product_values(const std::array<long, 4>& pt) {
  long p[5] = {0, 0, 0, 0, 0};
  for (long x : pt) {
    long xp = 1;
    for (int k = 1; k <= 4; ++k) {
      xp *= x;
      p[k] += xp;
    }
  }
  return {p[1] * p[1] * p[1] * p[1], p[2] * p[1] * p[1], p[3] * p[1], p[2] * p[2], p[4]};
}

// Fraction-free (Bareiss) determinant, exact in integers.
constexpr long sample_determinant() {
  long m[5][5] = {};
  for (int i = 0; i < 5; ++i) {
    auto row = product_values(kSamplePoints[i]);
    for (int j = 0; j < 5; ++j) m[i][j] = row[j];
  }
  long sign = 1;
  long prev = 1;
  for (int k = 0; k < 4; ++k) {
    if (m[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < 5; ++i)
        if (m[i][k] != 0) swap = i;
      if (swap < 0) return 0;
      for (int j = 0; j < 5; ++j) {
        long t = m[k][j];
        m[k][j] = m[swap][j];
        m[swap][j] = t;
      }
      sign = -sign;
    }
    for (int i = k + 1; i < 5; ++i)
      for (int j = k + 1; j < 5; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[4][4];
}

static_assert(sample_determinant() != 0, "power-sum sample points must give a nonsingular system");

std::array<Rational, 5> solve5(std::array<std::array<Rational, 6>, 5> aug) {
  for (std::size_t col = 0; col < 5; ++col) {
    std::size_t pivot = col;
    while (aug[pivot][col] == 0) ++pivot;
    std::swap(aug[pivot], aug[col]);
    for (std::size_t r = 0; r < 5; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      Rational factor = aug[r][col] / aug[col][col];
      for (std::size_t c = col; c < 6; ++c) aug[r][c] -= factor * aug[col][c];
    }
  }
  std::array<Rational, 5> x;
  for (std::size_t i = 0; i < 5; ++i) x[i] = aug[i][5] / aug[i][i];
  return x;
}

}  // namespace

bool is_symmetric(const SparsePoly& f) {
  for (std::size_t i = 1; i < f.nvars(); ++i)
    if (f.swapped(0, i) != f) return false;
  return true;
}

PowerSumQuartic to_power_sum(const SparsePoly& f) {
  if (!f.is_homogeneous(4))
    throw Error(ErrorCode::NotHomogeneousQuartic, "polynomial is not a homogeneous quartic");
  if (f.nvars() < kMinPowerSumVars)
    throw Error(ErrorCode::DegenerateBasis,
                "power-sum quartic basis is degenerate in " + std::to_string(f.nvars()) +
                    " variables (need at least 5)");
  if (!is_symmetric(f)) throw Error(ErrorCode::NotSymmetric, "polynomial is not symmetric");

  std::array<std::array<Rational, 6>, 5> aug;
  std::vector<Rational> point(f.nvars(), Rational(0));
  for (std::size_t i = 0; i < 5; ++i) {
    const auto row = product_values(kSamplePoints[i]);
    for (std::size_t j = 0; j < 5; ++j) aug[i][j] = row[j];
    for (std::size_t k = 0; k < 4; ++k) point[k] = kSamplePoints[i][k];
    aug[i][5] = f.evaluate(point);
  }
  auto v = PowerSumQuartic::from_array(solve5(aug));
  // A symmetric homogeneous quartic always lies in the span; this guards the
  // solve itself.
  if (expand(v, f.nvars()) != f)
    throw Error(ErrorCode::NotSymmetric, "polynomial is not in the power-sum span");
  return v;
}

SparsePoly reduce_mod_p1(const SparsePoly& f) {
  const std::size_t nvars = f.nvars();
  if (nvars < 2) throw Error(ErrorCode::DimensionMismatch, "reduce_mod_p1 needs n >= 1");
  const std::size_t n = nvars - 1;
  std::vector<SparsePoly> images;
  images.reserve(nvars);
  for (std::size_t i = 0; i < n; ++i) images.push_back(SparsePoly::variable(n, i));
  images.push_back(-SparsePoly::power_sum(n, 1));
  return substitute(f, images);
}

SparsePoly y_to_x(const SparsePoly& f) {
  const std::size_t n = f.nvars();
  std::vector<SparsePoly> images;
  images.reserve(n);
  const auto x1 = SparsePoly::variable(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) images.push_back(x1 - SparsePoly::variable(n + 1, i + 1));
  if (n == 0) {
    SparsePoly out(1);
    for (const auto& [m, c] : f.terms()) out.add_term(Monomial(1), c);
    return out;
  }
  return substitute(f, images);
}

InvariantQuartic invariant_part(const PowerSumQuartic& v) { return {v.c22, v.c4}; }

Rational evaluate(const SparsePoly& f, std::span<const Rational> point) {
  return f.evaluate(point);
}

}  // namespace sosq
