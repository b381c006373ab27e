#include "sosq/oracle.hpp"

#include "sosq/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <thread>

namespace sosq::oracle {

namespace {

struct StreamResult {
  double min_value = std::numeric_limits<double>::infinity();
  std::vector<double> argmin_point;
};

StreamResult run_stream(int n, double a, double b, std::uint64_t count, std::uint64_t seed,
                        unsigned stream) {
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> v(dim);
  StreamResult best;
  for (std::uint64_t s = 0; s < count; ++s) {
    for (auto& xi : v) xi = gauss(rng);
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(dim);
    double norm2 = 0.0;
    for (auto& xi : v) {
      xi -= mean;
      norm2 += xi * xi;
    }
    if (norm2 == 0.0) continue;
    const double inv = 1.0 / std::sqrt(norm2);
    double p2 = 0.0;
    double p4 = 0.0;
    for (auto& xi : v) {
      xi *= inv;
      const double sq = xi * xi;
      p2 += sq;
      p4 += sq * sq;
    }
    const double value = a * p2 * p2 + b * p4;
    if (value < best.min_value) {
      best.min_value = value;
      best.argmin_point = v;
    }
  }
  return best;
}

}  // namespace

SampleReport sample_min(int n, const InvariantQuartic& f, std::uint64_t samples,
                        std::uint64_t seed, unsigned threads) {
  if (n < 3) throw Error(ErrorCode::UnsupportedN, "sample_min needs n >= 3");
  if (samples == 0) throw Error(ErrorCode::OutOfRange, "sample_min needs at least one sample");
  const double a = f.a.get_d();
  const double b = f.b.get_d();

  std::vector<StreamResult> results(kStreams);
  auto work = [&](unsigned k) {
    const std::uint64_t count = samples / kStreams + (k < samples % kStreams ? 1 : 0);
    results[k] = run_stream(n, a, b, count, seed, k);
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, kStreams);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (unsigned k = t; k < kStreams; k += threads) work(k);
    });
  for (auto& th : pool) th.join();

  // Lowest value wins; ties go to the lower stream index.
  std::size_t winner = 0;
  for (std::size_t k = 1; k < results.size(); ++k)
    if (results[k].min_value < results[winner].min_value) winner = k;

  SampleReport report;
  report.n = n;
  report.form = f;
  report.samples = samples;
  report.min_value = results[winner].min_value;
  report.argmin_point = std::move(results[winner].argmin_point);
  report.seed = seed;
  return report;
}

SparsePoly brute_reynolds(const SparsePoly& f) {
  const std::size_t nvars = f.nvars();
  if (nvars > 6)
    throw Error(ErrorCode::TooManyVariables,
                "brute_reynolds enumerates nvars! permutations; " + std::to_string(nvars) +
                    " variables is too many");
  std::vector<std::size_t> perm(nvars);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  SparsePoly sum(nvars);
  long count = 0;
  do {
    sum += f.permuted(perm);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum * make_rational(1, count);
}

std::pair<double, double> numeric_two_value(int n, int l) {
  if (n < 2 || l < 1 || l > n)
    throw Error(ErrorCode::OutOfRange, "numeric_two_value needs 1 <= l <= n");
  const double ld = l;
  const double md = n + 1 - l;
  // s = -l t / m; l t^2 + l^2 t^2 / m = 1  =>  t^2 = m / (l (l + m)).
  const double t = std::sqrt(md / (ld * (ld + md)));
  const double s = -ld * t / md;
  return {s, t};
}

double numeric_p4(int n, int l, double s, double t) {
  return l * std::pow(t, 4) + (n + 1 - l) * std::pow(s, 4);
}

}  // namespace sosq::oracle
