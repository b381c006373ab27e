#include "sosq/cones.hpp"

#include "sosq/error.hpp"

#include <string>

namespace sosq {

namespace {

void require_n(int n) {
  if (n < kMinConeN)
    throw Error(ErrorCode::UnsupportedN,
                "n = " + std::to_string(n) + " unsupported (need n >= 3)");
}

Position sign_position(const Rational& lo, const Rational& hi) {
  const auto& low = lo < hi ? lo : hi;
  if (low > 0) return Position::Interior;
  if (low == 0) return Position::Boundary;
  return Position::Outside;
}

}  // namespace

const char* position_name(Position p) noexcept {
  switch (p) {
    case Position::Outside: return "Outside";
    case Position::Boundary: return "Boundary";
    case Position::Interior: return "Interior";
  }
  return "Unknown";
}

PsdRange psd_range(int n) {
  require_n(n);
  return {n, alpha(n), beta(n)};
}

ExtremalRays extremal_rays(int n) {
  const auto range = psd_range(n);
  return {{Rational(-1), 1 / range.alpha}, {Rational(1), -1 / range.beta}};
}

SosGenerators sos_generators(int n) {
  require_n(n);
  const Rational nn(n);
  return {{Rational(-1) / (nn + 1), Rational(1)}, {1 - nn + nn * nn, -nn * (nn + 1)}};
}

PsdPosition psd_position(int n, const InvariantQuartic& f) {
  const auto range = psd_range(n);
  const Position pos = sign_position(f.a + f.b * range.alpha, f.a + f.b * range.beta);
  if (pos != Position::Outside) return {pos, std::nullopt};

  // a + b*phi(n, l) is minimized at some integer l; take the smallest one.
  int best_l = 1;
  Rational best = f.a + f.b * phi(n, 1);
  for (int l = 2; l <= n; ++l) {
    Rational v = f.a + f.b * phi(n, l);
    if (v < best) {
      best = v;
      best_l = l;
    }
  }
  return {Position::Outside, two_value_point(n, best_l)};
}

SosCoordinates solve_sos_coordinates(int n, const InvariantQuartic& f) {
  const auto gens = sos_generators(n);
  // [S1.a S2.a; S1.b S2.b] (s1, s2)^T = (a, b)^T by Cramer's rule.
  const Rational det = gens.S1.a * gens.S2.b - gens.S2.a * gens.S1.b;
  return {(f.a * gens.S2.b - gens.S2.a * f.b) / det, (gens.S1.a * f.b - f.a * gens.S1.b) / det};
}

std::optional<std::pair<Rational, Rational>> sos_coordinates(int n, const InvariantQuartic& f) {
  const auto raw = solve_sos_coordinates(n, f);
  if (!raw.feasible()) return std::nullopt;
  return std::pair{raw.s1, raw.s2};
}

Membership classify(int n, const InvariantQuartic& f) {
  auto psd = psd_position(n, f);
  Membership m;
  m.psd = psd.position;
  m.witness = std::move(psd.witness);
  m.raw_sos_coords = solve_sos_coordinates(n, f);
  const auto& c = m.raw_sos_coords;
  if (c.feasible()) {
    m.sos = (c.s1 > 0 && c.s2 > 0) ? Position::Interior : Position::Boundary;
    m.sos_coords = std::pair{c.s1, c.s2};
  } else {
    m.sos = Position::Outside;
  }
  return m;
}

bool cones_equal(int n) {
  const auto rays = extremal_rays(n);
  return solve_sos_coordinates(n, rays.F).feasible() &&
         solve_sos_coordinates(n, rays.G).feasible();
}

std::optional<InvariantQuartic> gap_witness(int n) {
  if (cones_equal(n)) return std::nullopt;
  const auto range = psd_range(n);
  const Rational s1_a = Rational(1) / Rational(n + 1);
  return InvariantQuartic{-(range.alpha + s1_a) / 2, Rational(1)};
}

bool global_psd(int n, const InvariantQuartic& f) {
  require_n(n);
  return f.a + f.b >= 0 && f.a + f.b / Rational(n + 1) >= 0;
}

}  // namespace sosq
