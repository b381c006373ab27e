#include "sosq/certify.hpp"

#include "sosq/cones.hpp"
#include "sosq/error.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>
#include <sstream>

namespace sosq {

namespace {

SparsePoly x(std::size_t nvars, std::size_t i) { return SparsePoly::variable(nvars, i); }

void append(Certificate& into, const Certificate& part) {
  for (const auto& sq : part.squares) into.squares.push_back(sq);
}

bool structurally_valid(const Certificate& c) {
  if (c.n < 1) return false;
  for (const auto& sq : c.squares) {
    if (sq.weight < 0) return false;
    if (sq.base.nvars() != c.nvars()) return false;
    if (sq.base.is_zero() || !sq.base.is_homogeneous(2)) return false;
  }
  return true;
}

bool identity_holds(const Certificate& c) {
  // Squares sharing a weight are summed before scaling; the accumulator is a
  // hash map because the canonical order is irrelevant here.
  std::map<Rational, std::unordered_map<std::vector<std::uint32_t>, Rational, ExponentHash>>
      by_weight;
  std::vector<std::uint32_t> prod(c.nvars());
  for (const auto& sq : c.squares) {
    auto& acc = by_weight[sq.weight];
    for (const auto& [ml, cl] : sq.base.terms())
      for (const auto& [mr, cr] : sq.base.terms()) {
        for (std::size_t i = 0; i < prod.size(); ++i)
          prod[i] = ml.exponents[i] + mr.exponents[i];
        acc[prod] += cl * cr;
      }
  }
  SparsePoly diff = expand(c.target, c.nvars());
  for (const auto& [weight, acc] : by_weight)
    for (const auto& [e, coeff] : acc) diff.add_term(Monomial(e), -weight * coeff);
  if (diff.is_zero()) return true;
  return c.modulo_p1 && reduce_mod_p1(diff).is_zero();
}

// A base rescaled to integer coefficients: base = terms / denominator.
struct IntegerBase {
  std::vector<std::pair<Integer, std::vector<std::pair<std::size_t, std::uint32_t>>>> terms;
  // Same coefficients as machine integers, when all of them fit.
  std::vector<long> small_coeffs;
  bool small = false;
};

__extension__ typedef __int128 Wide;
__extension__ typedef unsigned __int128 UWide;

// Sum of squared base values in 128-bit arithmetic; false on overflow.
bool small_group_sum(const std::vector<IntegerBase>& bases, const std::vector<long>& x, Wide& out) {
  Wide total = 0;
  for (const auto& b : bases) {
    if (!b.small) return false;
    Wide value = 0;
    for (std::size_t t = 0; t < b.terms.size(); ++t) {
      Wide term = b.small_coeffs[t];
      for (const auto& [var, exp] : b.terms[t].second)
        for (std::uint32_t k = 0; k < exp; ++k)
          if (__builtin_mul_overflow(term, static_cast<Wide>(x[var]), &term)) return false;
      if (__builtin_add_overflow(value, term, &value)) return false;
    }
    Wide sq;
    if (__builtin_mul_overflow(value, value, &sq)) return false;
    if (__builtin_add_overflow(total, sq, &total)) return false;
  }
  out = total;
  return true;
}

Integer to_integer(Wide v) {
  const bool negative = v < 0;
  UWide mag = negative ? -static_cast<UWide>(v) : static_cast<UWide>(v);
  Integer hi = static_cast<unsigned long>(mag >> 64);
  Integer lo = static_cast<unsigned long>(mag & 0xffffffffffffffffULL);
  Integer r = (hi << 64) + lo;
  return negative ? Integer(-r) : r;
}

Integer evaluate_integer(const IntegerBase& base, const std::vector<Integer>& x) {
  Integer sum = 0;
  Integer term;
  for (const auto& [coeff, factors] : base.terms) {
    term = coeff;
    for (const auto& [var, exp] : factors)
      for (std::uint32_t k = 0; k < exp; ++k) term *= x[var];
    sum += term;
  }
  return sum;
}

Rational power_sum_target(const PowerSumQuartic& t, const std::vector<Integer>& x) {
  Integer p[5] = {0, 0, 0, 0, 0};
  for (const auto& xi : x) {
    Integer xp = 1;
    for (int k = 1; k <= 4; ++k) {
      xp *= xi;
      p[k] += xp;
    }
  }
  return t.c1111 * Rational(p[1] * p[1] * p[1] * p[1]) + t.c211 * Rational(p[2] * p[1] * p[1]) +
         t.c31 * Rational(p[3] * p[1]) + t.c22 * Rational(p[2] * p[2]) + t.c4 * Rational(p[4]);
}

// Both sides are homogeneous quartics (bases are checked to be quadratic
// forms), so comparing them at the integer point D*x, D the common
// denominator of x, is the same test as comparing them at x.
bool spot_checks_pass(const Certificate& c) {
  constexpr int kPoints = 100;

  // Squares grouped by weight / denominator^2.
  std::map<Rational, std::vector<IntegerBase>> groups;
  for (const auto& sq : c.squares) {
    Integer den = 1;
    for (const auto& [m, coeff] : sq.base.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), coeff.get_den_mpz_t());
    IntegerBase ib;
    for (const auto& [m, coeff] : sq.base.terms()) {
      std::vector<std::pair<std::size_t, std::uint32_t>> factors;
      for (std::size_t i = 0; i < m.nvars(); ++i)
        if (m.exponents[i] > 0) factors.emplace_back(i, m.exponents[i]);
      ib.terms.emplace_back(Integer(coeff.get_num() * (den / coeff.get_den())), std::move(factors));
    }
    ib.small = std::all_of(ib.terms.begin(), ib.terms.end(),
                           [](const auto& t) { return t.first.fits_slong_p(); });
    if (ib.small)
      for (const auto& t : ib.terms) ib.small_coeffs.push_back(t.first.get_si());
    groups[sq.weight / Rational(den * den)].push_back(std::move(ib));
  }

  std::mt19937_64 rng(0x5eed0000ULL + static_cast<unsigned>(c.n));
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  std::vector<Rational> pt(c.nvars());
  std::vector<Integer> x(c.nvars());
  std::vector<long> x_small(c.nvars());
  for (int k = 0; k < kPoints; ++k) {
    Rational sum(0);
    Integer common = 1;
    for (std::size_t i = 0; i + 1 < pt.size(); ++i) {
      pt[i] = make_rational(num(rng), den(rng));
      sum += pt[i];
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), pt[i].get_den_mpz_t());
    }
    pt.back() = -sum;
    bool x_fits = true;
    for (std::size_t i = 0; i < pt.size(); ++i) {
      x[i] = pt[i].get_num() * (common / pt[i].get_den());
      x_fits = x_fits && x[i].fits_slong_p();
      x_small[i] = x_fits ? x[i].get_si() : 0;
    }

    Rational rhs(0);
    Integer group_sum;
    Integer v;
    for (const auto& [scale, bases] : groups) {
      Wide fast = 0;
      if (x_fits && small_group_sum(bases, x_small, fast)) {
        rhs += scale * Rational(to_integer(fast));
        continue;
      }
      group_sum = 0;
      for (const auto& b : bases) {
        v = evaluate_integer(b, x);
        group_sum += v * v;
      }
      rhs += scale * Rational(group_sum);
    }
    if (power_sum_target(c.target, x) != rhs) return false;
  }
  return true;
}

}  // namespace

Certificate cert_p22_minus_p4(int n) {
  if (n < 1) throw Error(ErrorCode::UnsupportedN, "cert_p22_minus_p4 needs n >= 1");
  Certificate c{n, {0, 0, 0, 1, -1}, {}, false};
  const auto nv = c.nvars();
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i + 1; j < nv; ++j) c.squares.push_back({Rational(2), x(nv, i) * x(nv, j)});
  return c;
}

Certificate cert_S1(int n) {
  if (n < 2) throw Error(ErrorCode::UnsupportedN, "cert_S1 needs n >= 2");
  const Rational w = Rational(1) / Rational(n + 1);
  Certificate c{n, {0, 0, 0, -w, 1}, {}, false};
  const auto nv = c.nvars();
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i + 1; j < nv; ++j)
      c.squares.push_back({w, x(nv, i) * x(nv, i) - x(nv, j) * x(nv, j)});
  return c;
}

Certificate cert_S2(int n) {
  if (n < 3) throw Error(ErrorCode::UnsupportedN, "cert_S2 needs n >= 3");
  const auto gens = sos_generators(n);
  Certificate c{n, gens.S2.as_power_sum(), {}, true};
  const auto nv = c.nvars();
  auto product = [nv](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return (x(nv, i) - x(nv, j)) * (x(nv, k) - x(nv, l));
  };
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i + 1; j < nv; ++j)
      for (std::size_t k = j + 1; k < nv; ++k)
        for (std::size_t l = k + 1; l < nv; ++l) {
          c.squares.push_back({Rational(2), product(i, j, k, l)});
          c.squares.push_back({Rational(2), product(i, k, j, l)});
          c.squares.push_back({Rational(2), product(i, l, j, k)});
        }
  return c;
}

Certificate scaled(const Certificate& c, const Rational& s) {
  Certificate out = c;
  for (auto& v : {&out.target.c1111, &out.target.c211, &out.target.c31, &out.target.c22,
                  &out.target.c4})
    *v *= s;
  for (auto& sq : out.squares) sq.weight *= s;
  return out;
}

Certificate cert_for(int n, const InvariantQuartic& f) {
  const auto raw = solve_sos_coordinates(n, f);
  if (!raw.feasible())
    throw Error(ErrorCode::NotInSosCone, "form is not in the SOS cone: coordinates (a', b') = (" +
                                             to_string(raw.s1) + ", " + to_string(raw.s2) + ")");
  Certificate c{n, f.as_power_sum(), {}, true};
  if (raw.s1 != 0) append(c, scaled(cert_S1(n), raw.s1));
  if (raw.s2 != 0) append(c, scaled(cert_S2(n), raw.s2));
  return c;
}

Certificate cert_global(int n, const InvariantQuartic& f) {
  if (!global_psd(n, f))
    throw Error(ErrorCode::NotGloballyPsd, "form is not nonnegative on R^" + std::to_string(n + 1));
  // f = mu1 (p2^2 - p4) + mu2 ((n+1) p4 - p2^2) + mu3 p2^2, all mu >= 0.
  const Rational np1(n + 1);
  Rational mu1(0), mu2(0), mu3(0);
  if (f.b >= 0) {
    mu2 = f.b / np1;
    mu3 = f.a + f.b / np1;
  } else {
    mu1 = -f.b;
    mu3 = f.a + f.b;
  }
  Certificate c{n, f.as_power_sum(), {}, false};
  if (mu1 != 0) append(c, scaled(cert_p22_minus_p4(n), mu1));
  if (mu2 != 0) append(c, scaled(cert_S1(n), mu2 * np1));
  if (mu3 != 0) c.squares.push_back({mu3, SparsePoly::power_sum(c.nvars(), 2)});
  return c;
}

bool verify(const Certificate& c) {
  try {
    return structurally_valid(c) && identity_holds(c) && spot_checks_pass(c);
  } catch (const std::exception&) {
    return false;
  }
}

std::string serialize(const Certificate& c) {
  std::ostringstream os;
  os << "sosquartic-certificate 1\n";
  os << "n " << c.n << '\n';
  os << "modulo_p1 " << (c.modulo_p1 ? 1 : 0) << '\n';
  os << "target";
  for (const auto& v : c.target.as_array()) os << ' ' << to_string(v);
  os << '\n';
  for (const auto& sq : c.squares) os << to_string(sq.weight) << " ; " << to_string(sq.base) << '\n';
  return os.str();
}

namespace {

std::string_view expect_prefix(std::string_view line, std::string_view key) {
  if (line.substr(0, key.size()) != key || line.size() == key.size() || line[key.size()] != ' ')
    throw Error(ErrorCode::Parse, "expected '" + std::string(key) + " ...' in certificate header");
  return line.substr(key.size() + 1);
}

}  // namespace

Certificate parse_certificate(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    if (nl == std::string_view::npos)
      throw Error(ErrorCode::Parse, "certificate must end with a newline");
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  if (lines.size() < 4 || lines[0] != "sosquartic-certificate 1")
    throw Error(ErrorCode::Parse, "missing certificate header");

  Certificate c;
  const auto n_text = expect_prefix(lines[1], "n");
  const Rational n_value = parse_rational(n_text);
  if (n_value.get_den() != 1 || n_value < 1 || n_value > 100000 || n_text.front() == '+')
    throw Error(ErrorCode::Parse, "bad n in certificate");
  c.n = static_cast<int>(n_value.get_num().get_si());

  const auto mod = expect_prefix(lines[2], "modulo_p1");
  if (mod != "0" && mod != "1") throw Error(ErrorCode::Parse, "modulo_p1 must be 0 or 1");
  c.modulo_p1 = mod == "1";

  auto target_text = expect_prefix(lines[3], "target");
  std::array<Rational, 5> target;
  for (std::size_t k = 0; k < 5; ++k) {
    auto sp = target_text.find(' ');
    if ((k < 4) == (sp == std::string_view::npos))
      throw Error(ErrorCode::Parse, "target needs exactly 5 rationals");
    target[k] = parse_rational(target_text.substr(0, sp));
    if (k < 4) target_text.remove_prefix(sp + 1);
  }
  c.target = PowerSumQuartic::from_array(target);

  for (std::size_t i = 4; i < lines.size(); ++i) {
    auto sep = lines[i].find(" ; ");
    if (sep == std::string_view::npos)
      throw Error(ErrorCode::Parse, "square line must read '<weight> ; <polynomial>'");
    c.squares.push_back(
        {parse_rational(lines[i].substr(0, sep)), parse_poly(lines[i].substr(sep + 3), c.nvars())});
  }
  return c;
}

}  // namespace sosq
