#pragma once

// Classical invariants that do not go through Dyck paths: the HOMFLY
// polynomial of two-strand torus links from the skein relation, and the
// closed form for Alexander polynomials of torus knots.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "torsuper/dyck.hpp"
#include "torsuper/poly.hpp"
#include "torsuper/superpoly.hpp"

namespace torsuper {

/// z * P(closure of sigma_1^k) with z = Q^-1 - Q.
///
/// Skein relation a^-1 P(L+) - a P(L-) = z P(L0) on the last crossing gives
/// P_k = a^2 P_{k-2} + a z P_{k-1}, with P_1 = 1 and P_0 the two-component
/// unlink (a^-1 - a) / z. Carrying the factor z keeps every step inside the
/// Laurent ring.
inline homfly_poly two_strand_skein_numerator(int k) {
  if (k < 0) throw std::invalid_argument("two-strand crossing count must be nonnegative");
  const homfly_poly z = homfly::term(-1, 0, 0) - homfly::term(1, 0, 0);
  homfly_poly prev = homfly::term(0, -1, 0) - homfly::term(0, 1, 0);  // k = 0
  if (k == 0) return prev;
  homfly_poly cur = z;  // k = 1
  const homfly_poly a2 = homfly::term(0, 2, 0);
  const homfly_poly az = homfly::term(0, 1, 0) * z;
  for (int i = 2; i <= k; ++i) {
    homfly_poly next = a2 * prev + az * cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// HOMFLY polynomial of the closure of sigma_1^k for odd k (a knot).
/// Even k gives a two-component link whose polynomial has z in the
/// denominator; that case throws inexact_division.
inline homfly_poly two_strand_homfly(int k) {
  const homfly_poly z = homfly::term(-1, 0, 0) - homfly::term(1, 0, 0);
  return divide_exact(two_strand_skein_numerator(k), z, homfly::Q);
}

struct alexander_vars {
  static constexpr std::size_t arity = 1;
  static constexpr std::array<std::string_view, arity> names{"s"};
  static constexpr std::array<std::string_view, arity> latex_names{"s"};
  static constexpr std::array<std::string_view, arity> json_keys{"ds"};
  static constexpr std::array<std::size_t, arity> field_order{0};
  static constexpr std::array<std::size_t, arity> factor_order{0};
  static constexpr std::array<display_key, arity> text_order{{{0, sort_direction::descending}}};
};

using alexander_poly = laurent<alexander_vars>;

/// Symmetric Alexander polynomial of T_{m,n}:
/// s^{-(m-1)(n-1)/2} (s^{mn} - 1)(s - 1) / ((s^m - 1)(s^n - 1)).
inline alexander_poly alexander_torus(const torus_shape& shape) {
  const auto s_pow = [](int e) { return alexander_poly::variable(0, e); };
  const auto one = alexander_poly::constant(1);
  const int m = shape.m(), n = shape.n();
  alexander_poly num = (s_pow(m * n) - one) * (s_pow(1) - one);
  num = divide_exact(num, s_pow(m) - one, 0);
  num = divide_exact(num, s_pow(n) - one, 0);
  return num.scaled(alexander_poly::monomial_type{{-static_cast<int>(shape.lower_alpha_degree() / 2)}});
}

/// s -> Q^2.
inline homfly_poly alexander_to_homfly(const alexander_poly& p) {
  return substitute<homfly_vars>(p, std::array<image<homfly_vars>, 1>{image<homfly_vars>{1, homfly::mono(2, 0, 0)}});
}

struct alexander_report {
  torus_shape shape;
  bool pass = false;
  homfly_poly engine;   // superpolynomial at T = -1, a = 1
  homfly_poly closed;   // closed form under s = Q^2
};

/// Needs the engine's superpolynomial for the shape, passed in so the
/// oracle stays independent of how it was computed.
inline alexander_report check_alexander(const torus_shape& shape, const homfly_poly& superpolynomial) {
  const auto spec = specialization{}.set_value(homfly::T, -1).set_value(homfly::alpha, 1);
  alexander_report r{shape, false, specialize(superpolynomial, spec), alexander_to_homfly(alexander_torus(shape))};
  r.pass = r.engine == r.closed;
  return r;
}

inline alexander_report check_alexander(const torus_shape& shape) {
  return check_alexander(shape, mellit_superpolynomial(shape).poly);
}

}  // namespace torsuper
