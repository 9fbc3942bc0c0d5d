#pragma once

// Sparse Laurent polynomials with exact 64-bit integer coefficients.
//
// A polynomial ring is described by a variable traits type (see poly.hpp for
// the ring in Q, alpha, T). Exponents are stored in the traits' comparison
// order, so lexicographic comparison of exponent vectors is the canonical
// monomial order and the term vector is kept sorted in it.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "torsuper/errors.hpp"

namespace torsuper {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("coefficient overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("coefficient overflow in multiplication");
  return r;
}

inline int checked_exponent_add(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("exponent overflow");
  return r;
}

inline int checked_exponent_mul(int a, int b) {
  int r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("exponent overflow");
  return r;
}

}  // namespace detail

enum class sort_direction { ascending, descending };

/// One entry of a traits type's display ordering.
struct display_key {
  std::size_t var;
  sort_direction direction;
};

template <std::size_t N>
struct monomial {
  std::array<int, N> exponents{};

  constexpr int operator[](std::size_t i) const { return exponents[i]; }
  constexpr int& operator[](std::size_t i) { return exponents[i]; }

  constexpr bool is_one() const {
    return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
  }

  constexpr auto operator<=>(const monomial&) const = default;
};

template <std::size_t N>
monomial<N> operator*(const monomial<N>& a, const monomial<N>& b) {
  monomial<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = detail::checked_exponent_add(a[i], b[i]);
  return r;
}

template <std::size_t N>
monomial<N> inverse(const monomial<N>& a) {
  monomial<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = -a[i];
  return r;
}

template <class Vars>
class laurent {
 public:
  using vars = Vars;
  static constexpr std::size_t arity = Vars::arity;
  using monomial_type = monomial<arity>;
  using coefficient_type = std::int64_t;

  struct term {
    monomial_type mono;
    coefficient_type coeff = 0;
    bool operator==(const term&) const = default;
  };

  laurent() = default;

  static laurent constant(coefficient_type c) { return single(monomial_type{}, c); }

  static laurent single(const monomial_type& m, coefficient_type c = 1) {
    laurent p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  /// x_var^power.
  static laurent variable(std::size_t var, int power = 1) {
    monomial_type m;
    m[var] = power;
    return single(m);
  }

  /// Sums duplicate monomials and drops zero coefficients.
  static laurent from_terms(std::vector<term> terms) {
    laurent p;
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const term> terms() const { return terms_; }

  coefficient_type coefficient(const monomial_type& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const term& t, const monomial_type& key) { return t.mono < key; });
    return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
  }

  laurent operator-() const {
    laurent r = *this;
    for (auto& t : r.terms_) t.coeff = detail::checked_mul(t.coeff, -1);
    return r;
  }

  laurent& operator+=(const laurent& o) {
    std::vector<term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].mono < o.terms_[j].mono)) {
        merged.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].mono < terms_[i].mono) {
        merged.push_back(o.terms_[j++]);
      } else {
        auto c = detail::checked_add(terms_[i].coeff, o.terms_[j].coeff);
        if (c != 0) merged.push_back({terms_[i].mono, c});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(merged);
    return *this;
  }

  laurent& operator-=(const laurent& o) { return *this += -o; }

  laurent& operator*=(const laurent& o) { return *this = *this * o; }

  friend laurent operator+(laurent a, const laurent& b) { return a += b; }
  friend laurent operator-(laurent a, const laurent& b) { return a -= b; }

  friend laurent operator*(const laurent& a, const laurent& b) {
    std::vector<term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_)
        products.push_back({x.mono * y.mono, detail::checked_mul(x.coeff, y.coeff)});
    return from_terms(std::move(products));
  }

  /// Multiplies by c * m without re-sorting.
  laurent scaled(const monomial_type& m, coefficient_type c = 1) const {
    if (c == 0) return {};
    laurent r = *this;
    for (auto& t : r.terms_) {
      t.mono = t.mono * m;
      t.coeff = detail::checked_mul(t.coeff, c);
    }
    return r;
  }

  laurent pow(unsigned e) const {
    laurent result = constant(1);
    laurent base = *this;
    while (e != 0) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e != 0) base *= base;
    }
    return result;
  }

  /// Smallest and largest exponent of `var`; empty for the zero polynomial.
  std::optional<std::pair<int, int>> degree_range(std::size_t var) const {
    if (terms_.empty()) return std::nullopt;
    int lo = terms_.front().mono[var], hi = lo;
    for (const auto& t : terms_) {
      lo = std::min(lo, t.mono[var]);
      hi = std::max(hi, t.mono[var]);
    }
    return std::pair{lo, hi};
  }

  /// The polynomial in the remaining variables multiplying var^d.
  laurent coefficient_of(std::size_t var, int d) const {
    std::vector<term> picked;
    for (const auto& t : terms_) {
      if (t.mono[var] != d) continue;
      term u = t;
      u.mono[var] = 0;
      picked.push_back(u);
    }
    return from_terms(std::move(picked));
  }

  /// Value with every variable set to 1.
  coefficient_type coefficient_sum() const {
    coefficient_type s = 0;
    for (const auto& t : terms_) s = detail::checked_add(s, t.coeff);
    return s;
  }

  bool operator==(const laurent&) const = default;

 private:
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const term& a, const term& b) { return a.mono < b.mono; });
    std::vector<term> merged;
    merged.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!merged.empty() && merged.back().mono == t.mono)
        merged.back().coeff = detail::checked_add(merged.back().coeff, t.coeff);
      else
        merged.push_back(t);
      if (merged.back().coeff == 0) merged.pop_back();
    }
    terms_ = std::move(merged);
  }

  std::vector<term> terms_;
};

/// Image of one variable under a ring map: scale * mono.
template <class To>
struct image {
  std::int64_t scale = 1;
  monomial<To::arity> mono{};
};

/// Ring map sending variable i of `p` to images[i].
///
/// A negative exponent is only allowed on a variable whose scale is +1 or -1,
/// otherwise the result would have non-integral coefficients.
template <class To, class From>
laurent<To> substitute(const laurent<From>& p, const std::array<image<To>, From::arity>& images) {
  using result_t = laurent<To>;
  std::vector<typename result_t::term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::int64_t c = t.coeff;
    monomial<To::arity> m;
    for (std::size_t i = 0; i < From::arity; ++i) {
      const int e = t.mono[i];
      if (e == 0) continue;
      const auto& img = images[i];
      if (e < 0 && img.scale != 1 && img.scale != -1)
        throw specialization_error("substitution would produce a non-integral coefficient");
      if (img.scale == -1) {
        if (e % 2 != 0) c = detail::checked_mul(c, -1);
      } else if (img.scale != 1) {
        for (int k = 0; k < e; ++k) c = detail::checked_mul(c, img.scale);
      }
      for (std::size_t j = 0; j < To::arity; ++j)
        m[j] = detail::checked_exponent_add(m[j], detail::checked_exponent_mul(e, img.mono[j]));
    }
    out.push_back({m, c});
  }
  return result_t::from_terms(std::move(out));
}

/// Exact quotient p / d, treating both as polynomials in `var`.
///
/// The part of d of highest degree in `var` must be a single monomial with
/// coefficient +1 or -1 (a unit of the Laurent ring), which makes the long
/// division well defined. Throws inexact_division on a nonzero remainder.
template <class Vars>
laurent<Vars> divide_exact(const laurent<Vars>& p, const laurent<Vars>& d, std::size_t var) {
  using poly = laurent<Vars>;
  if (d.is_zero()) throw inexact_division("division by the zero polynomial");
  if (p.is_zero()) return {};

  const auto [d_lo, d_hi] = *d.degree_range(var);
  const poly lead = d.coefficient_of(var, d_hi);
  if (lead.size() != 1 || (lead.terms()[0].coeff != 1 && lead.terms()[0].coeff != -1))
    throw inexact_division("divisor's leading part is not a unit monomial");
  auto lead_mono = lead.terms()[0].mono;
  lead_mono[var] = d_hi;
  const auto lead_inverse = inverse(lead_mono);
  const auto lead_sign = lead.terms()[0].coeff;

  const int p_lo = p.degree_range(var)->first;
  poly quotient;
  poly remainder = p;
  while (!remainder.is_zero()) {
    const int r_hi = remainder.degree_range(var)->second;
    if (r_hi - d_hi < p_lo - d_lo) throw inexact_division("nonzero remainder in exact division");
    std::vector<typename poly::term> leading;
    for (const auto& t : remainder.terms())
      if (t.mono[var] == r_hi) leading.push_back(t);
    const poly piece = poly::from_terms(std::move(leading)).scaled(lead_inverse, lead_sign);
    quotient += piece;
    remainder -= piece * d;
  }
  return quotient;
}

}  // namespace torsuper
