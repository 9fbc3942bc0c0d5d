#pragma once

// Superpolynomials of positive torus knots from the Dyck-path sum
//
//   P(T_{m,n}) = (T^-1 a)^{(m-1)(n-1)} * sum over D_{m,n} of
//                q^area t^h prod_{p in V}(1 + T^-1 a^2 t^-k(p)),
//
// with q = Q^2 and t = T^2 Q^-2, and the extreme alpha-coefficients
// P_- and P_+ computed both from that sum and from their direct formulas.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "torsuper/dyck.hpp"
#include "torsuper/poly.hpp"

namespace torsuper {

/// Product over V(path) of (1 + T^-1 a^2 t^-k(p)), times q^area t^h.
inline homfly_poly term_of_path(const dyck_path& p) {
  const auto ov = outer_vertices(p);
  homfly_poly term = inject_q(static_cast<int>(area(p))) * inject_t(static_cast<int>(h_statistic(p)));
  for (const auto& v : ov.others) {
    const auto factor = homfly_poly::constant(1) +
                        homfly::term(0, 2, -1) * inject_t(-static_cast<int>(v.counts.k));
    term *= factor;
  }
  return term;
}

struct superpoly_result {
  torus_shape shape;
  homfly_poly poly;
  std::size_t path_count = 0;
  std::size_t rugged_count = 0;
};

inline superpoly_result mellit_superpolynomial(const torus_shape& s) {
  superpoly_result r{s, {}, 0, 0};
  for_each_dyck_path(s, [&](const dyck_path& p) {
    r.poly += term_of_path(p);
    ++r.path_count;
    if (is_rugged(p)) ++r.rugged_count;
  });
  const int g2 = static_cast<int>(s.lower_alpha_degree());
  r.poly = r.poly.scaled(homfly::mono(0, g2, -g2));
  return r;
}

/// sum over D_{m,n} of q^area t^h.
inline qt_poly qt_catalan(const torus_shape& s) {
  qt_poly sum;
  for_each_dyck_path(s, [&](const dyck_path& p) {
    qt_poly::monomial_type m;
    m[0] = static_cast<int>(area(p));
    m[1] = static_cast<int>(h_statistic(p));
    sum += qt_poly::single(m);
  });
  return sum;
}

/// Exchanges q and t.
inline qt_poly swap_qt(const qt_poly& p) {
  std::vector<qt_poly::term> ts;
  for (const auto& t : p.terms()) {
    auto u = t;
    std::swap(u.mono[0], u.mono[1]);
    ts.push_back(u);
  }
  return qt_poly::from_terms(std::move(ts));
}

/// Coefficient of a^{(m-1)(n-1)}: T^{-(m-1)(n-1)} sum q^area t^h.
inline homfly_poly p_minus(const torus_shape& s) {
  const int g2 = static_cast<int>(s.lower_alpha_degree());
  return qt_to_homfly(qt_catalan(s)).scaled(homfly::mono(0, 0, -g2));
}

/// Coefficient of a^{(m+1)(n-1)}: T^{-m(n-1)} times the sum over rugged
/// paths of q^area t^{h - sum k}. Zero when the shape has no rugged path.
inline homfly_poly p_plus(const torus_shape& s) {
  homfly_poly sum;
  for_each_rugged_path(s, [&](const dyck_path& p) {
    std::int64_t k_total = 0;
    for (const auto& v : outer_vertices(p).others) k_total += static_cast<std::int64_t>(v.counts.k);
    sum += inject_q(static_cast<int>(area(p))) *
           inject_t(static_cast<int>(static_cast<std::int64_t>(h_statistic(p)) - k_total));
  });
  return sum.scaled(homfly::mono(0, 0, -static_cast<int>(s.exponent_sum())));
}

inline homfly_poly p_minus_by_extraction(const superpoly_result& r) {
  return alpha_coefficient(r.poly, static_cast<int>(r.shape.lower_alpha_degree()));
}

inline homfly_poly p_plus_by_extraction(const superpoly_result& r) {
  return alpha_coefficient(r.poly, static_cast<int>(r.shape.upper_alpha_degree()));
}

struct identity_report {
  torus_shape shape;
  bool pass = false;
  homfly_poly lhs;
  homfly_poly rhs;
};

/// P_-(tau_{m,n}) == T^{n^2-1} P_+(tau_{m+n,n}).
inline identity_report verify_full_twist(const torus_shape& s) {
  const int n = s.n();
  identity_report r{s, false, p_minus(s), p_plus(s.with_full_twist()).scaled(homfly::mono(0, 0, n * n - 1))};
  r.pass = r.lhs == r.rhs;
  return r;
}

/// The T = -1 shadow: P_-(m,n) == (-1)^{n-1} P_+(m+n,n) for HOMFLY.
inline identity_report kalman_check(const torus_shape& s) {
  const std::int64_t sign = (s.n() - 1) % 2 == 0 ? 1 : -1;
  identity_report r{s, false, at_T_minus_one(p_minus(s)),
                    at_T_minus_one(p_plus(s.with_full_twist())).scaled({}, sign)};
  r.pass = r.lhs == r.rhs;
  return r;
}

/// Variables q', a', t' of the convention in which q' = t, a' = -T^-1 a^2,
/// t' = q.
struct primed_vars {
  static constexpr std::size_t arity = 3;
  static constexpr std::array<std::string_view, arity> names{"a'", "q'", "t'"};
  static constexpr std::array<std::string_view, arity> latex_names{"a'", "q'", "t'"};
  static constexpr std::array<std::string_view, arity> json_keys{"dap", "dqp", "dtp"};
  static constexpr std::array<std::size_t, arity> field_order{1, 0, 2};
  static constexpr std::array<std::size_t, arity> factor_order{1, 2, 0};
  static constexpr std::array<display_key, arity> text_order{{{0, sort_direction::ascending},
                                                              {1, sort_direction::descending},
                                                              {2, sort_direction::descending}}};
};

using primed_poly = laurent<primed_vars>;

namespace primed {
inline constexpr std::size_t a = 0;
inline constexpr std::size_t q = 1;
inline constexpr std::size_t t = 2;
}  // namespace primed

/// Rewrites p / (T^-1 a)^prefactor in q', a', t'.
///
/// Q^i a^j T^k equals q^x t^y (T^-1 a^2)^z with z = j/2, y = (k+z)/2,
/// x = i/2 + y; a term whose exponents make any of these non-integral is not
/// in the sub-algebra and raises conversion_error. Engine outputs convert
/// with prefactor (m-1)(n-1).
inline primed_poly convert_convention(const homfly_poly& p, int prefactor = 0) {
  std::vector<primed_poly::term> out;
  for (const auto& t : p.terms()) {
    const std::int64_t i = t.mono[homfly::Q];
    const std::int64_t j = std::int64_t{t.mono[homfly::alpha]} - prefactor;
    const std::int64_t k = std::int64_t{t.mono[homfly::T]} + prefactor;
    if (j % 2 != 0 || i % 2 != 0) throw conversion_error("monomial outside the (q, t, T^-1 a^2) sub-algebra");
    const std::int64_t z = j / 2;
    if ((k + z) % 2 != 0) throw conversion_error("monomial outside the (q, t, T^-1 a^2) sub-algebra");
    const std::int64_t y = (k + z) / 2;
    const std::int64_t x = i / 2 + y;
    primed_poly::term u;
    u.mono[primed::t] = static_cast<int>(x);
    u.mono[primed::q] = static_cast<int>(y);
    u.mono[primed::a] = static_cast<int>(z);
    u.coeff = z % 2 == 0 ? t.coeff : detail::checked_mul(t.coeff, -1);
    out.push_back(u);
  }
  return primed_poly::from_terms(std::move(out));
}

/// Inverse of convert_convention for the same prefactor.
inline homfly_poly from_convention(const primed_poly& p, int prefactor = 0) {
  std::vector<homfly_poly::term> out;
  for (const auto& t : p.terms()) {
    const int x = t.mono[primed::t], y = t.mono[primed::q], z = t.mono[primed::a];
    homfly_poly::term u;
    u.mono = homfly::mono(2 * x - 2 * y, 2 * z + prefactor, 2 * y - z - prefactor);
    u.coeff = z % 2 == 0 ? t.coeff : detail::checked_mul(t.coeff, -1);
    out.push_back(u);
  }
  return homfly_poly::from_terms(std::move(out));
}

}  // namespace torsuper
