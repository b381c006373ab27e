#include "sosq/reynolds.hpp"

#include "sosq/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace sosq {

OrbitStats orbit_stats(const Monomial& m) {
  OrbitStats stats;
  stats.sorted_exponents = m.exponents;
  std::sort(stats.sorted_exponents.begin(), stats.sorted_exponents.end(), std::greater<>());

  Integer size;
  mpz_fac_ui(size.get_mpz_t(), m.nvars());
  const auto& e = stats.sorted_exponents;
  for (std::size_t i = 0; i < e.size();) {
    std::size_t j = i;
    while (j < e.size() && e[j] == e[i]) ++j;
    Integer mult_fact;
    mpz_fac_ui(mult_fact.get_mpz_t(), j - i);
    size /= mult_fact;
    i = j;
  }
  stats.orbit_size = size;
  return stats;
}

SparsePoly reynolds(const SparsePoly& f) {
  // Total coefficient per orbit type; the average spreads it uniformly.
  std::map<std::vector<std::uint32_t>, Rational> orbit_totals;
  for (const auto& [m, c] : f.terms()) {
    auto key = m.exponents;
    std::sort(key.begin(), key.end());
    orbit_totals[key] += c;
  }

  SparsePoly out(f.nvars());
  for (auto& [ascending, total] : orbit_totals) {
    if (total == 0) continue;
    const auto stats = orbit_stats(Monomial(ascending));
    const Rational share = total / Rational(stats.orbit_size);
    Monomial m(ascending);
    do {
      out.add_term(m, share);
    } while (std::next_permutation(m.exponents.begin(), m.exponents.end()));
  }
  return out;
}

std::array<SparsePoly, 3> symmetrization_sources(int n) {
  if (n < 3) throw Error(ErrorCode::UnsupportedN, "symmetrization sources need n >= 3");
  const auto nvars = static_cast<std::size_t>(n) + 1;
  auto x = [nvars](std::size_t i) { return SparsePoly::variable(nvars, i); };
  const auto p2 = SparsePoly::power_sum(nvars, 2);
  const auto diff_sq = x(0) * x(0) - x(1) * x(1);
  const auto d12 = x(0) - x(1);
  const auto d34 = x(2) - x(3);
  return {p2 * p2, diff_sq * diff_sq, d12 * d12 * d34 * d34};
}

std::array<PowerSumQuartic, 3> lemma_sym_closed_form(int n) {
  if (n < 3) throw Error(ErrorCode::UnsupportedN, "closed forms need n >= 3");
  const Rational nn(n);
  const Rational np1(n + 1);

  PowerSumQuartic square_p2{0, 0, 0, 1, 0};

  PowerSumQuartic diff_of_squares{0, 0, 0, Rational(-2) / (np1 * nn), Rational(2) / nn};

  // 4 (p1^4 + 3 p2^2 - 4 p3 p1 + (n+1)^2 (p2^2 - p4)
  //    + (n+1)(-2 p2 p1^2 - 3 p2^2 + 4 p3 p1 + p4)) / ((n+1) n (n-1) (n-2))
  const Rational scale = Rational(4) / (np1 * nn * (nn - 1) * (nn - 2));
  PowerSumQuartic disjoint_pairs{
      scale * 1,
      scale * (-2 * np1),
      scale * (-4 + 4 * np1),
      scale * (3 + np1 * np1 - 3 * np1),
      scale * (-np1 * np1 + np1),
  };
  return {square_p2, diff_of_squares, disjoint_pairs};
}

bool verify_lemma_sym(int n) {
  const auto sources = symmetrization_sources(n);
  const auto closed = lemma_sym_closed_form(n);
  const auto nvars = static_cast<std::size_t>(n) + 1;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto symmetrized = reynolds(sources[k]);
    if (nvars >= kMinPowerSumVars) {
      if (to_power_sum(symmetrized) != closed[k]) return false;
    } else if (symmetrized != expand(closed[k], nvars)) {
      return false;
    }
  }
  return true;
}

}  // namespace sosq
