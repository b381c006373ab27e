#include "sosq/halfdeg.hpp"

#include "sosq/error.hpp"

#include <string>

namespace sosq {

namespace {

void require_n(int n) {
  if (n < 2) throw Error(ErrorCode::OutOfRange, "two-value points need n >= 2");
}

void require_l(int n, int l) {
  require_n(n);
  if (l < 1 || l > n)
    throw Error(ErrorCode::OutOfRange,
                "l = " + std::to_string(l) + " outside [1, " + std::to_string(n) + "]");
}

template <class Better>
ExtremumResult scan(int n, Better better) {
  require_n(n);
  ExtremumResult result{phi(n, 1), {1}};
  for (int l = 2; l <= n; ++l) {
    Rational v = phi(n, l);
    if (better(v, result.value)) {
      result.value = v;
      result.argmins = {l};
    } else if (v == result.value) {
      result.argmins.push_back(l);
    }
  }
  return result;
}

}  // namespace

std::vector<Rational> TwoValuePoint::as_rationals() const {
  std::vector<Rational> out;
  out.reserve(coordinates.size());
  for (auto c : coordinates) out.emplace_back(static_cast<long>(c));
  return out;
}

std::vector<double> TwoValuePoint::as_doubles() const {
  return std::vector<double>(coordinates.begin(), coordinates.end());
}

Rational phi(int n, int l) {
  require_l(n, l);
  const Integer np1 = n + 1;
  const Integer ll = l;
  Rational q(np1 * np1 - 3 * ll * np1 + 3 * ll * ll, np1 * (np1 - ll) * ll);
  q.canonicalize();
  return q;
}

TwoValuePoint two_value_point(int n, int l) {
  require_l(n, l);
  TwoValuePoint p{n, l, {}};
  p.coordinates.assign(static_cast<std::size_t>(n) + 1, -static_cast<std::int64_t>(l));
  for (int i = 0; i < l; ++i) p.coordinates[static_cast<std::size_t>(i)] = n + 1 - l;
  return p;
}

ExtremumResult p4_min_int(int n) {
  return scan(n, [](const Rational& v, const Rational& best) { return v < best; });
}

ExtremumResult p4_max_int(int n) {
  return scan(n, [](const Rational& v, const Rational& best) { return v > best; });
}

Rational alpha(int n) {
  require_n(n);
  const Integer nn = n;
  Rational q = (n % 2 != 0) ? Rational(1, nn + 1)
                            : Rational(4 + 2 * nn + nn * nn, 2 * nn + 3 * nn * nn + nn * nn * nn);
  q.canonicalize();
  return q;
}

Rational beta(int n) {
  require_n(n);
  const Integer nn = n;
  Rational q(1 - nn + nn * nn, nn + nn * nn);
  q.canonicalize();
  return q;
}

bool check_max_identity(int n, int l) {
  const Rational np1(n + 1);
  const Rational numerator = Rational(l - 1) * Rational(n - l) * np1 * np1;
  const Rational denominator = np1 * Rational(n) * Rational(l) * Rational(n + 1 - l);
  const bool tight = (l == 1 || l == n);
  return beta(n) - phi(n, l) == numerator / denominator && numerator >= 0 &&
         (numerator == 0) == tight;
}

bool check_min_identity(int n, int l) {
  const Rational np1(n + 1);
  const Rational root(n + 1 - 2 * l);
  const Rational numerator = root * root;
  const Rational denominator = np1 * Rational(n + 1 - l) * Rational(l);
  return phi(n, l) - Rational(1) / np1 == numerator / denominator &&
         (numerator == 0) == (2 * l == n + 1);
}

bool check_even_min_identity(int n, int l) {
  if (n % 2 != 0) return false;
  const Rational root(2 * l - (n + 1));
  const Rational numerator = Rational(n + 1) * (root * root - 1);
  const Rational denominator =
      Rational(l) * Rational(n + 1 - l) * Rational(n) * Rational(n + 2);
  const bool tight = (l == n / 2 || l == n / 2 + 1);
  return phi(n, l) - alpha(n) == numerator / denominator && numerator >= 0 &&
         (numerator == 0) == tight;
}

}  // namespace sosq
