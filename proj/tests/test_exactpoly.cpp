#include "sosq/error.hpp"
#include "sosq/exactpoly.hpp"
#include "sosq/oracle.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace sosq;
using sosq::testing::Q;

namespace {

const PowerSumQuartic kFrakF{4, -5, Q("-139/20"), 4, 4};

SparsePoly p(std::size_t nvars, std::uint32_t k) { return SparsePoly::power_sum(nvars, k); }

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Power-sum products evaluated straight from the coordinates.
std::array<Rational, 5> products_at(const std::vector<Rational>& pt) {
  Rational s[5] = {0, 0, 0, 0, 0};
  for (const auto& x : pt) {
    Rational xp = 1;
    for (int k = 1; k <= 4; ++k) {
      xp *= x;
      s[k] += xp;
    }
  }
  return {s[1] * s[1] * s[1] * s[1], s[2] * s[1] * s[1], s[3] * s[1], s[2] * s[2], s[4]};
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an exception";
  return ErrorCode::Parse;
}

}  // namespace

TEST(Expand, PowerSumDefinitions) {
  EXPECT_EQ(expand({0, 0, 0, 0, 1}, 3), p(3, 4));
  const auto x1 = SparsePoly::variable(2, 0);
  const auto x2 = SparsePoly::variable(2, 1);
  EXPECT_EQ(expand({0, 0, 0, 1, 0}, 2), x1.pow(4) + Rational(2) * x1 * x1 * x2 * x2 + x2.pow(4));
}

TEST(Expand, FrakFMatchesProductFormula) {
  const auto f = expand(kFrakF, 5);
  const auto p1 = p(5, 1);
  EXPECT_EQ(f, Rational(4) * p1.pow(4) - Rational(5) * p(5, 2) * p1 * p1 -
                   Q("139/20") * p(5, 3) * p1 + Rational(4) * p(5, 2).pow(2) + Rational(4) * p(5, 4));
  EXPECT_TRUE(f.is_homogeneous(4));
  EXPECT_TRUE(is_symmetric(f));
}

TEST(Expand, EvaluationMatchesProductsAtRandomPoints) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const std::size_t m = 2 + i % 7;
    PowerSumQuartic v;
    for (auto* c : {&v.c1111, &v.c211, &v.c31, &v.c22, &v.c4})
      *c = sosq::testing::random_rational(rng);
    const auto pt = sosq::testing::random_point(rng, m);
    const auto prods = products_at(pt);
    const auto coeffs = v.as_array();
    Rational expected = 0;
    for (std::size_t k = 0; k < 5; ++k) expected += coeffs[k] * prods[k];
    EXPECT_EQ(evaluate(expand(v, m), pt), expected);
  }
}

TEST(ToPowerSum, RoundTrip) {
  const PowerSumQuartic v{1, 2, 3, 4, 5};
  EXPECT_EQ(to_power_sum(expand(v, 6)), v);
  EXPECT_EQ(to_power_sum(p(5, 2) * p(5, 2)), (PowerSumQuartic{0, 0, 0, 1, 0}));

  std::mt19937_64 rng(8);
  for (int i = 0; i < 60; ++i) {
    PowerSumQuartic w;
    for (auto* c : {&w.c1111, &w.c211, &w.c31, &w.c22, &w.c4})
      *c = sosq::testing::random_rational(rng);
    const std::size_t m = 5 + i % 5;
    EXPECT_EQ(to_power_sum(expand(w, m)), w);
  }
}

TEST(ToPowerSum, SymmetrizedDifferenceOfSquares) {
  const auto x1 = SparsePoly::variable(5, 0);
  const auto x2 = SparsePoly::variable(5, 1);
  const auto src = (x1 * x1 - x2 * x2).pow(2);
  EXPECT_EQ(to_power_sum(oracle::brute_reynolds(src)),
            (PowerSumQuartic{0, 0, 0, Q("-1/10"), Q("1/2")}));
}

TEST(ToPowerSum, Errors) {
  EXPECT_EQ(code_of([] { to_power_sum(SparsePoly::variable(5, 0).pow(4)); }),
            ErrorCode::NotSymmetric);
  EXPECT_EQ(code_of([] { to_power_sum(p(5, 2)); }), ErrorCode::NotHomogeneousQuartic);
  EXPECT_EQ(code_of([] { to_power_sum(p(5, 4) + p(5, 2)); }), ErrorCode::NotHomogeneousQuartic);
  EXPECT_EQ(code_of([] { to_power_sum(p(4, 4)); }), ErrorCode::DegenerateBasis);
}

TEST(ToPowerSum, ZeroQuartic) {
  EXPECT_EQ(to_power_sum(SparsePoly(6)), PowerSumQuartic{});
}

TEST(ReduceModP1, KillsP1) {
  for (std::size_t m = 2; m <= 7; ++m) EXPECT_TRUE(reduce_mod_p1(p(m, 1)).is_zero()) << m;
}

TEST(ReduceModP1, FrakFReducesToInvariantPart) {
  for (int n : {4, 5, 6}) {
    const auto m = static_cast<std::size_t>(n) + 1;
    EXPECT_EQ(reduce_mod_p1(expand(kFrakF, m)), reduce_mod_p1(expand({0, 0, 0, 4, 4}, m))) << n;
  }
}

TEST(ReduceModP1, IdealMembership) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 40; ++i) {
    const std::size_t m = 2 + i % 5;
    const auto f = sosq::testing::random_poly(rng, m, 6, 4);
    const auto g = sosq::testing::random_poly(rng, m, 6, 3);
    EXPECT_EQ(reduce_mod_p1(f + p(m, 1) * g), reduce_mod_p1(f));
    EXPECT_TRUE(reduce_mod_p1(p(m, 1) * g).is_zero());
  }
}

TEST(ReduceModP1, NonMultiplesSurvive) {
  // r avoids the eliminated variable, so it is its own image and p1 * g + r
  // is not divisible by p1 unless r = 0.
  std::mt19937_64 rng(6);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 1 + i % 5;
    const auto r_small = sosq::testing::random_poly(rng, n, 4, 3);
    if (r_small.is_zero()) continue;
    std::vector<SparsePoly> embed;
    for (std::size_t k = 0; k < n; ++k) embed.push_back(SparsePoly::variable(n + 1, k));
    const auto r = substitute(r_small, embed);
    const auto g = sosq::testing::random_poly(rng, n + 1, 4, 3);
    EXPECT_EQ(reduce_mod_p1(p(n + 1, 1) * g + r), r_small);
  }
}

TEST(ReduceModP1, IsARingHomomorphism) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    const std::size_t m = 2 + i % 5;
    const auto f = sosq::testing::random_poly(rng, m, 5, 3);
    const auto g = sosq::testing::random_poly(rng, m, 5, 3);
    EXPECT_EQ(reduce_mod_p1(f * g), reduce_mod_p1(f) * reduce_mod_p1(g));
    EXPECT_EQ(reduce_mod_p1(f + g), reduce_mod_p1(f) + reduce_mod_p1(g));
  }
}

TEST(YToX, Examples) {
  const auto y1 = SparsePoly::variable(1, 0);
  EXPECT_EQ(y_to_x(y1), SparsePoly::variable(2, 0) - SparsePoly::variable(2, 1));
  EXPECT_EQ(y_to_x(SparsePoly::constant(3, Rational(1))), SparsePoly::constant(4, Rational(1)));

  const auto a = SparsePoly::variable(2, 0);
  const auto b = SparsePoly::variable(2, 1);
  const auto x1 = SparsePoly::variable(3, 0);
  const auto x2 = SparsePoly::variable(3, 1);
  const auto x3 = SparsePoly::variable(3, 2);
  EXPECT_EQ(y_to_x(a * a + b * b), (x1 - x2).pow(2) + (x1 - x3).pow(2));
}

TEST(YToX, IsInjectiveModuloP1) {
  // y -> x followed by reduction is an invertible linear change of
  // coordinates, so nonzero polynomials stay nonzero and the map is
  // multiplicative.
  std::mt19937_64 rng(12);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 1 + i % 4;
    const auto f = sosq::testing::random_poly(rng, n, 5, 3);
    const auto g = sosq::testing::random_poly(rng, n, 5, 2);
    const auto image = reduce_mod_p1(y_to_x(f));
    EXPECT_EQ(image.is_zero(), f.is_zero());
    EXPECT_EQ(reduce_mod_p1(y_to_x(f * g)), image * reduce_mod_p1(y_to_x(g)));
  }
}

TEST(YToX, PermutationsOfXAreLinearInY) {
  // Swapping x_1 and x_2 sends y_1 -> -y_1 and y_i -> y_i - y_1, so the
  // image of a degree-d form under the action is again the image of a
  // degree-d form.
  const std::size_t n = 3;
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    const auto f = sosq::testing::random_homogeneous(rng, n, 4, 2);
    std::vector<SparsePoly> action;
    const auto y1 = SparsePoly::variable(n, 0);
    action.push_back(-y1);
    for (std::size_t k = 1; k < n; ++k) action.push_back(SparsePoly::variable(n, k) - y1);
    EXPECT_EQ(y_to_x(f).swapped(0, 1), y_to_x(substitute(f, action)));
  }
}

TEST(InvariantPart, Examples) {
  EXPECT_EQ(invariant_part(kFrakF), (InvariantQuartic{4, 4}));
  EXPECT_EQ(invariant_part({0, 0, 0, Q("2/3"), Q("-5")}), (InvariantQuartic{Q("2/3"), Q("-5")}));
  EXPECT_TRUE(invariant_part({1, 1, 1, 0, 0}).is_zero());
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(p(4, 2), ints({1, 1, -1, -1})), Rational(4));
  // 3^4 * 2 + 2^4 * 3 = 162 + 48
  EXPECT_EQ(evaluate(p(5, 4), ints({3, 3, -2, -2, -2})), Rational(210));
  EXPECT_EQ(evaluate(expand({0, 0, 0, 1, 0}, 4), ints({1, 1, -1, -1})), Rational(16));
  EXPECT_EQ(code_of([] { evaluate(p(4, 2), ints({1, 2})); }), ErrorCode::DimensionMismatch);
}
