#pragma once

#include "sosq/exactpoly.hpp"
#include "sosq/poly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace sosq::oracle {

/// Fixed number of independent sample streams. Stream k draws
/// ceil-or-floor(samples / kStreams) points from a generator seeded with
/// seed_seq{seed, k}, so the report does not depend on how many threads run them.
inline constexpr unsigned kStreams = 16;

struct SampleReport {
  int n = 0;
  InvariantQuartic form;
  std::uint64_t samples = 0;
  double min_value = 0.0;
  std::vector<double> argmin_point;
  std::uint64_t seed = 0;
};

/// Minimum of a p2^2 + b p4 over random points of the unit sphere in the
/// zero-sum hyperplane (projected Gaussian vectors). Deterministic per seed.
/// threads == 0 uses the hardware concurrency.
SampleReport sample_min(int n, const InvariantQuartic& f, std::uint64_t samples,
                        std::uint64_t seed, unsigned threads = 0);

/// Literal average over all nvars! permutations. Throws TooManyVariables
/// above 6 variables.
SparsePoly brute_reynolds(const SparsePoly& f);

/// Floating-point solution (s, t), t > 0, of
///   l t + (n+1-l) s = 0,  l t^2 + (n+1-l) s^2 = 1.
std::pair<double, double> numeric_two_value(int n, int l);

/// p4 at the point with l coordinates t and n+1-l coordinates s.
double numeric_p4(int n, int l, double s, double t);

}  // namespace sosq::oracle
