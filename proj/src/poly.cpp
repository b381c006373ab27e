#include "sosq/poly.hpp"

#include "sosq/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace sosq {

std::uint32_t Monomial::degree() const noexcept {
  return std::accumulate(exponents.begin(), exponents.end(), std::uint32_t{0});
}

bool GrlexFirst::operator()(const Monomial& lhs, const Monomial& rhs) const noexcept {
  const auto dl = lhs.degree();
  const auto dr = rhs.degree();
  if (dl != dr) return dl > dr;
  return std::lexicographical_compare(rhs.exponents.begin(), rhs.exponents.end(),
                                      lhs.exponents.begin(), lhs.exponents.end());
}

SparsePoly::SparsePoly(std::size_t nvars) : nvars_(nvars) {}

SparsePoly SparsePoly::constant(std::size_t nvars, const Rational& c) {
  SparsePoly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars)
    throw Error(ErrorCode::DimensionMismatch, "variable index out of range");
  Monomial m(nvars);
  m.exponents[index] = 1;
  SparsePoly p(nvars);
  p.add_term(m, Rational(1));
  return p;
}

SparsePoly SparsePoly::power_sum(std::size_t nvars, std::uint32_t k) {
  SparsePoly p(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    Monomial m(nvars);
    m.exponents[i] = k;
    p.add_term(m, Rational(1));
  }
  return p;
}

int SparsePoly::degree() const noexcept {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

bool SparsePoly::is_homogeneous(std::uint32_t d) const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

Rational SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_)
    throw Error(ErrorCode::DimensionMismatch, "monomial has wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SparsePoly::check_compatible(const SparsePoly& rhs) const {
  if (rhs.nvars_ != nvars_)
    throw Error(ErrorCode::DimensionMismatch, "polynomials live in different rings");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& rhs) {
  check_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& rhs) {
  check_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

SparsePoly& SparsePoly::add_scaled(const SparsePoly& rhs, const Rational& c) {
  check_compatible(rhs);
  if (c == 0) return *this;
  for (const auto& [m, coeff] : rhs.terms_) add_term(m, coeff * c);
  return *this;
}

SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs) {
  lhs.check_compatible(rhs);
  // Partial products collect in a hash map; the ordered map is built once.
  std::unordered_map<std::vector<std::uint32_t>, Rational, ExponentHash> acc;
  acc.reserve(lhs.size() * rhs.size());
  std::vector<std::uint32_t> prod(lhs.nvars_);
  Rational c;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) {
      for (std::size_t i = 0; i < lhs.nvars_; ++i) prod[i] = ml.exponents[i] + mr.exponents[i];
      c = cl * cr;
      auto [it, inserted] = acc.try_emplace(prod, c);
      if (!inserted) it->second += c;
    }
  }
  SparsePoly out(lhs.nvars_);
  for (auto& [e, coeff] : acc)
    if (coeff != 0) out.terms_.emplace(Monomial(e), std::move(coeff));
  return out;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SparsePoly SparsePoly::pow(std::uint32_t e) const {
  SparsePoly result = constant(nvars_, Rational(1));
  SparsePoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

SparsePoly SparsePoly::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != nvars_)
    throw Error(ErrorCode::DimensionMismatch, "permutation has wrong length");
  SparsePoly out(nvars_);
  Monomial image(nvars_);
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) image.exponents[perm[i]] = m.exponents[i];
    out.terms_.emplace(image, c);
  }
  return out;
}

SparsePoly SparsePoly::swapped(std::size_t i, std::size_t j) const {
  std::vector<std::size_t> perm(nvars_);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::swap(perm.at(i), perm.at(j));
  return permuted(perm);
}

Rational SparsePoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_)
    throw Error(ErrorCode::DimensionMismatch,
                "point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                    std::to_string(nvars_) + " variables");
  Rational sum(0);
  Rational term;
  Rational power;
  for (const auto& [m, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m.exponents[i] == 0) continue;
      mpq_class base = point[i];
      mpz_pow_ui(power.get_num_mpz_t(), base.get_num_mpz_t(), m.exponents[i]);
      mpz_pow_ui(power.get_den_mpz_t(), base.get_den_mpz_t(), m.exponents[i]);
      term *= power;
    }
    sum += term;
  }
  return sum;
}

SparsePoly substitute(const SparsePoly& f, std::span<const SparsePoly> images) {
  if (images.size() != f.nvars())
    throw Error(ErrorCode::DimensionMismatch, "need one image per variable");
  if (images.empty()) {
    SparsePoly out(0);
    for (const auto& [m, c] : f.terms()) out.add_term(m, c);
    return out;
  }
  const std::size_t target = images.front().nvars();
  for (const auto& img : images)
    if (img.nvars() != target)
      throw Error(ErrorCode::DimensionMismatch, "images live in different rings");

  // Single-term images (monomial times constant) act on exponents directly.
  // The remaining variables are handled by grouping f's terms on their
  // exponents in those variables and multiplying each group by the product
  // of cached image powers once.
  std::vector<std::size_t> general;
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i].size() != 1) general.push_back(i);

  std::map<std::vector<std::uint32_t>, SparsePoly> groups;
  Monomial shifted(target);
  for (const auto& [m, c] : f.terms()) {
    std::fill(shifted.exponents.begin(), shifted.exponents.end(), 0u);
    Rational coeff = c;
    bool vanishes = false;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      const std::uint32_t e = m.exponents[i];
      if (e == 0 || images[i].size() != 1) continue;
      if (images[i].is_zero()) {
        vanishes = true;
        break;
      }
      const auto& [im, ic] = *images[i].terms().begin();
      for (std::size_t j = 0; j < target; ++j) shifted.exponents[j] += e * im.exponents[j];
      for (std::uint32_t k = 0; k < e; ++k) coeff *= ic;
    }
    if (vanishes) continue;
    std::vector<std::uint32_t> key(general.size());
    for (std::size_t g = 0; g < general.size(); ++g) key[g] = m.exponents[general[g]];
    groups.try_emplace(key, target).first->second.add_term(shifted, coeff);
  }

  // powers[g][e] = images[general[g]]^e, filled on demand.
  std::vector<std::vector<SparsePoly>> powers(general.size());
  auto power_of = [&](std::size_t g, std::uint32_t e) -> const SparsePoly& {
    auto& cache = powers[g];
    if (cache.empty()) cache.push_back(SparsePoly::constant(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[general[g]]);
    return cache[e];
  };

  SparsePoly out(target);
  for (auto& [key, part] : groups) {
    SparsePoly term = std::move(part);
    for (std::size_t g = 0; g < general.size(); ++g)
      if (key[g] > 0) term = term * power_of(g, key[g]);
    out += term;
  }
  return out;
}

std::string to_string(const SparsePoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (m.exponents[i] > 0) os << " * x" << (i + 1) << '^' << m.exponents[i];
  }
  return os.str();
}

namespace {

std::vector<std::string_view> split_on(std::string_view text, std::string_view sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + sep.size();
  }
}

std::uint64_t parse_index(std::string_view digits, std::string_view context) {
  if (digits.empty() || digits.size() > 9 ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    throw Error(ErrorCode::Parse, "bad integer in '" + std::string(context) + "'");
  return std::stoull(std::string(digits));
}

}  // namespace

SparsePoly parse_poly(std::string_view text, std::size_t nvars) {
  SparsePoly out(nvars);
  if (text == "0") return out;
  for (auto term_text : split_on(text, " + ")) {
    auto factors = split_on(term_text, " * ");
    Rational coeff = parse_rational(factors.front());
    if (coeff == 0) throw Error(ErrorCode::Parse, "zero coefficient in polynomial text");
    Monomial m(nvars);
    for (std::size_t k = 1; k < factors.size(); ++k) {
      auto factor = factors[k];
      auto caret = factor.find('^');
      if (factor.size() < 2 || factor.front() != 'x' || caret == std::string_view::npos)
        throw Error(ErrorCode::Parse, "bad factor '" + std::string(factor) + "'");
      auto var = parse_index(factor.substr(1, caret - 1), factor);
      auto exp = parse_index(factor.substr(caret + 1), factor);
      if (var == 0 || var > nvars)
        throw Error(ErrorCode::Parse, "variable index out of range in '" + std::string(factor) + "'");
      if (exp == 0 || m.exponents[var - 1] != 0)
        throw Error(ErrorCode::Parse, "non-canonical factor '" + std::string(factor) + "'");
      m.exponents[var - 1] = static_cast<std::uint32_t>(exp);
    }
    if (out.coefficient(m) != 0)
      throw Error(ErrorCode::Parse, "repeated monomial in polynomial text");
    out.add_term(m, coeff);
  }
  return out;
}

}  // namespace sosq
