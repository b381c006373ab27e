#pragma once

#include "sosq/exactpoly.hpp"
#include "sosq/halfdeg.hpp"
#include "sosq/rational.hpp"

#include <optional>
#include <utility>

namespace sosq {

/// Smallest n handled by the cone routines.
inline constexpr int kMinConeN = 3;

enum class Position { Outside, Boundary, Interior };

const char* position_name(Position p) noexcept;

/// Range [alpha, beta] of p4 on {p1 = 0, p2 = 1}.
struct PsdRange {
  int n = 0;
  Rational alpha;
  Rational beta;
};

/// Extremal rays of the nonnegative cone: F = (-1, 1/alpha), G = (1, -1/beta).
struct ExtremalRays {
  InvariantQuartic F;
  InvariantQuartic G;
};

/// Generators of the SOS cone: S1 = (-1/(n+1), 1), S2 = (1-n+n^2, -n(n+1)).
struct SosGenerators {
  InvariantQuartic S1;
  InvariantQuartic S2;
};

/// Solution of f = a' S1 + b' S2. `feasible` iff both are nonnegative.
struct SosCoordinates {
  Rational s1;
  Rational s2;
  bool feasible() const { return s1 >= 0 && s2 >= 0; }
};

struct PsdPosition {
  Position position = Position::Outside;
  /// Present iff position is Outside; f is strictly negative there.
  std::optional<TwoValuePoint> witness;
};

struct Membership {
  Position psd = Position::Outside;
  Position sos = Position::Outside;
  std::optional<TwoValuePoint> witness;
  /// Present iff sos is not Outside.
  std::optional<std::pair<Rational, Rational>> sos_coords;
  /// Always filled, for diagnostics.
  SosCoordinates raw_sos_coords;
};

PsdRange psd_range(int n);
ExtremalRays extremal_rays(int n);
SosGenerators sos_generators(int n);

PsdPosition psd_position(int n, const InvariantQuartic& f);

/// Raw solution of the 2x2 system (determinant -(n-1)^2).
SosCoordinates solve_sos_coordinates(int n, const InvariantQuartic& f);
/// The solution, only when it lies in the nonnegative quadrant.
std::optional<std::pair<Rational, Rational>> sos_coordinates(int n, const InvariantQuartic& f);

Membership classify(int n, const InvariantQuartic& f);

/// True iff both extremal rays of the nonnegative cone are SOS.
bool cones_equal(int n);

/// For n where the cones differ: the midpoint (normalized to b = 1) between
/// the F ray and the S1 ray, which is nonnegative but not SOS.
std::optional<InvariantQuartic> gap_witness(int n);

/// Nonnegativity of a p2^2 + b p4 on all of R^{n+1}: a + b >= 0 and
/// a + b/(n+1) >= 0.
bool global_psd(int n, const InvariantQuartic& f);

}  // namespace sosq
