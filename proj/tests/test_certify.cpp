#include "sosq/certify.hpp"
#include "sosq/cones.hpp"
#include "sosq/error.hpp"
#include "sosq/exactpoly.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace sosq;
using sosq::testing::Q;

namespace {

Rational squares_at(const Certificate& c, const std::vector<Rational>& pt) {
  Rational s = 0;
  for (const auto& sq : c.squares) {
    const Rational v = sq.base.evaluate(pt);
    s += sq.weight * v * v;
  }
  return s;
}

Rational target_at(const Certificate& c, const std::vector<Rational>& pt) {
  return expand(c.target, c.nvars()).evaluate(pt);
}

long choose(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(Certify, P22MinusP4) {
  const auto c1 = cert_p22_minus_p4(1);
  ASSERT_EQ(c1.squares.size(), 1u);
  EXPECT_EQ(c1.squares[0].weight, 2);
  EXPECT_EQ(c1.squares[0].base, SparsePoly::variable(2, 0) * SparsePoly::variable(2, 1));
  EXPECT_TRUE(verify(c1));

  const auto c3 = cert_p22_minus_p4(3);
  EXPECT_EQ(c3.target, (PowerSumQuartic{0, 0, 0, 1, -1}));
  EXPECT_FALSE(c3.modulo_p1);
  EXPECT_EQ(c3.squares.size(), 6u);
  EXPECT_TRUE(verify(c3));
  const auto pt = ints({1, 1, -1, -1});
  EXPECT_EQ(target_at(c3, pt), 12);
  EXPECT_EQ(squares_at(c3, pt), 12);
}

TEST(Certify, S1) {
  const auto c3 = cert_S1(3);
  const auto pt = ints({1, 1, -1, -1});
  EXPECT_EQ(target_at(c3, pt), 0);
  for (const auto& sq : c3.squares) EXPECT_EQ(sq.base.evaluate(pt), 0);

  const auto c4 = cert_S1(4);
  EXPECT_EQ(c4.target, (PowerSumQuartic{0, 0, 0, Q("-1/5"), 1}));
  EXPECT_TRUE(verify(c4));

  const auto c5 = cert_S1(5);
  SparsePoly sum(6);
  for (const auto& sq : c5.squares) sum.add_scaled(sq.base * sq.base, sq.weight);
  EXPECT_EQ(sum, expand(c5.target, 6));
  EXPECT_TRUE(verify(c5));
}

TEST(Certify, S2) {
  const auto c3 = cert_S2(3);
  EXPECT_TRUE(c3.modulo_p1);
  EXPECT_EQ(c3.target, (PowerSumQuartic{0, 0, 0, 7, -12}));
  const auto pt = ints({1, 1, -1, -1});
  EXPECT_EQ(target_at(c3, pt), 64);
  EXPECT_EQ(squares_at(c3, pt), 64);
  EXPECT_TRUE(verify(c3));
  EXPECT_TRUE(verify(cert_S2(4)));
  EXPECT_TRUE(verify(cert_S2(6)));
  EXPECT_THROW(cert_S2(2), Error);
}

TEST(Certify, S2SquareCount) {
  for (int n = 3; n <= 12; ++n) {
    const auto c = cert_S2(n);
    EXPECT_EQ(static_cast<long>(c.squares.size()), 3 * choose(n + 1, 4)) << n;
    std::set<std::string> distinct;
    for (const auto& sq : c.squares) {
      EXPECT_EQ(sq.weight, 2);
      distinct.insert(to_string(sq.base));
    }
    EXPECT_EQ(distinct.size(), c.squares.size());
  }
}

TEST(Certify, S2IsNotAnIdentityInTheFullRing) {
  auto c = cert_S2(4);
  c.modulo_p1 = false;
  EXPECT_FALSE(verify(c));
}

TEST(Certify, ForConeMembers) {
  const auto f5 = cert_for(5, extremal_rays(5).F);
  const auto s1 = scaled(cert_S1(5), 6);
  ASSERT_EQ(f5.squares.size(), s1.squares.size());
  for (std::size_t i = 0; i < s1.squares.size(); ++i) {
    EXPECT_EQ(f5.squares[i].weight, s1.squares[i].weight);
    EXPECT_EQ(f5.squares[i].base, s1.squares[i].base);
  }
  EXPECT_TRUE(verify(f5));

  for (int n = 3; n <= 8; ++n) {
    const auto g = cert_for(n, extremal_rays(n).G);
    const Rational w = Rational(2) / Rational(1 - n + n * n);
    EXPECT_EQ(g.squares.size(), cert_S2(n).squares.size());
    for (const auto& sq : g.squares) EXPECT_EQ(sq.weight, w);
    EXPECT_TRUE(verify(g));
  }

  try {
    cert_for(4, extremal_rays(4).F);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInSosCone);
    EXPECT_NE(std::string(e.what()).find("-1/63"), std::string::npos);
  }
}

TEST(Certify, Global) {
  for (int n = 3; n <= 8; ++n) {
    const auto c2 = cert_global(n, {1, -1});
    EXPECT_EQ(c2.squares.size(), cert_p22_minus_p4(n).squares.size());
    EXPECT_TRUE(verify(c2));

    const auto c3 = cert_global(n, {-1, Rational(n + 1)});
    EXPECT_EQ(c3.squares.size(), cert_S1(n).squares.size());
    for (const auto& sq : c3.squares) EXPECT_EQ(sq.weight, 1);
    EXPECT_TRUE(verify(c3));

    const auto c1 = cert_global(n, {1, 0});
    ASSERT_EQ(c1.squares.size(), 1u);
    EXPECT_EQ(c1.squares[0].base, SparsePoly::power_sum(c1.nvars(), 2));
    EXPECT_TRUE(verify(c1));
  }
  EXPECT_THROW(cert_global(4, {-1, 4}), Error);
  EXPECT_THROW(cert_global(4, extremal_rays(4).F), Error);
}

TEST(Certify, TamperingIsDetected) {
  auto c = cert_S1(4);
  c.squares[3].weight += Q("1/100");
  EXPECT_FALSE(verify(c));

  auto d = cert_S2(4);
  d.squares.pop_back();
  EXPECT_FALSE(verify(d));

  auto e = cert_S1(4);
  e.squares[0].weight = -e.squares[0].weight;
  e.target = cert_S1(4).target;
  EXPECT_FALSE(verify(e));

  auto wrong_ring = cert_S1(4);
  wrong_ring.squares[0].base = SparsePoly::variable(4, 0);
  EXPECT_FALSE(verify(wrong_ring));

  auto cubic = cert_p22_minus_p4(3);
  cubic.squares[0].base = SparsePoly::variable(4, 0).pow(3);
  EXPECT_FALSE(verify(cubic));
}

TEST(Certify, SerializeRoundTrip) {
  for (const auto& c : {cert_S1(4), cert_S2(5), cert_for(5, extremal_rays(5).F),
                        cert_global(3, {Q("3/7"), Q("-1/3")})}) {
    const std::string text = serialize(c);
    const auto back = parse_certificate(text);
    EXPECT_EQ(serialize(back), text);
    EXPECT_EQ(back.n, c.n);
    EXPECT_EQ(back.modulo_p1, c.modulo_p1);
    EXPECT_EQ(back.target, c.target);
    EXPECT_TRUE(verify(back));
  }
  EXPECT_EQ(serialize(cert_p22_minus_p4(1)),
            "sosquartic-certificate 1\nn 1\nmodulo_p1 0\ntarget 0 0 0 1 -1\n2 ; 1 * x1^1 * x2^1\n");
}

TEST(Certify, ParseRejectsMalformedText) {
  const std::string good = serialize(cert_S1(3));
  EXPECT_THROW(parse_certificate(""), Error);
  EXPECT_THROW(parse_certificate("sosquartic-certificate 2\n" + good.substr(good.find('\n') + 1)), Error);
  std::string bad = good;
  bad.replace(bad.find("1/4 ;"), 5, "0.25 ;");
  EXPECT_THROW(parse_certificate(bad), Error);
  std::string noterm = good;
  noterm.pop_back();
  EXPECT_THROW(parse_certificate(noterm), Error);
}

TEST(CertifyProperties, SoundnessAtRandomHyperplanePoints) {
  std::mt19937_64 rng(51);
  std::vector<Certificate> certs = {cert_S1(3), cert_S2(3), cert_S2(6), cert_p22_minus_p4(5),
                                    cert_for(7, {Q("2/3"), Q("5/2")})};
  for (const auto& c : certs) {
    ASSERT_TRUE(verify(c));
    const auto target = expand(c.target, c.nvars());
    for (int i = 0; i < 1000; ++i) {
      const auto pt = sosq::testing::random_hyperplane_point(rng, c.nvars());
      ASSERT_EQ(target.evaluate(pt), squares_at(c, pt)) << c.n;
    }
  }
}

TEST(CertifyProperties, CompletenessOnTheCone) {
  std::mt19937_64 rng(52);
  for (int n = 3; n <= 12; ++n) {
    const auto g = sos_generators(n);
    for (int i = 0; i < 1000; ++i) {
      Rational s1 = sosq::testing::random_positive(rng);
      Rational s2 = sosq::testing::random_positive(rng);
      if (i % 10 == 0) s1 = 0;
      if (i % 10 == 1) s2 = 0;
      const InvariantQuartic f = s1 * g.S1 + s2 * g.S2;
      const auto c = cert_for(n, f);
      for (const auto& sq : c.squares) ASSERT_GE(sq.weight, 0);
      ASSERT_TRUE(verify(c)) << n << ' ' << s1 << ' ' << s2;
    }
  }
}
