#pragma once

// The ring Z[Q^±1, alpha^±1, T^±1] that holds HOMFLY polynomials and
// superpolynomials, plus the (q, t) view used by the Dyck-path sums.

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "torsuper/laurent.hpp"

namespace torsuper {

struct homfly_vars {
  static constexpr std::size_t arity = 3;
  // Storage order is the canonical order: alpha first, then Q, then T.
  static constexpr std::array<std::string_view, arity> names{"a", "Q", "T"};
  static constexpr std::array<std::string_view, arity> latex_names{"\\alpha", "Q", "T"};
  static constexpr std::array<std::string_view, arity> json_keys{"dAlpha", "dQ", "dT"};
  // JSON objects list dQ, dAlpha, dT; pretty forms write Q, T, a.
  static constexpr std::array<std::size_t, arity> field_order{1, 0, 2};
  static constexpr std::array<std::size_t, arity> factor_order{1, 2, 0};
  static constexpr std::array<display_key, arity> text_order{{{0, sort_direction::ascending},
                                                              {1, sort_direction::descending},
                                                              {2, sort_direction::descending}}};
};

struct qt_vars {
  static constexpr std::size_t arity = 2;
  static constexpr std::array<std::string_view, arity> names{"q", "t"};
  static constexpr std::array<std::string_view, arity> latex_names{"q", "t"};
  static constexpr std::array<std::string_view, arity> json_keys{"dq", "dt"};
  static constexpr std::array<std::size_t, arity> field_order{0, 1};
  static constexpr std::array<std::size_t, arity> factor_order{0, 1};
  static constexpr std::array<display_key, arity> text_order{{{0, sort_direction::descending},
                                                              {1, sort_direction::descending}}};
};

using homfly_poly = laurent<homfly_vars>;
using homfly_monomial = homfly_poly::monomial_type;
using qt_poly = laurent<qt_vars>;

namespace homfly {

inline constexpr std::size_t alpha = 0;
inline constexpr std::size_t Q = 1;
inline constexpr std::size_t T = 2;

constexpr homfly_monomial mono(int dQ, int dAlpha, int dT) {
  homfly_monomial m;
  m[alpha] = dAlpha;
  m[Q] = dQ;
  m[T] = dT;
  return m;
}

constexpr int dQ(const homfly_monomial& m) { return m[Q]; }
constexpr int dAlpha(const homfly_monomial& m) { return m[alpha]; }
constexpr int dT(const homfly_monomial& m) { return m[T]; }

/// c * Q^dQ * alpha^dAlpha * T^dT
inline homfly_poly term(int dQ, int dAlpha, int dT, std::int64_t c = 1) {
  return homfly_poly::single(mono(dQ, dAlpha, dT), c);
}

}  // namespace homfly

/// q^e with q = Q^2.
inline homfly_poly inject_q(int e) {
  if (e < 0) throw std::invalid_argument("inject_q: exponent must be nonnegative");
  return homfly::term(detail::checked_exponent_mul(2, e), 0, 0);
}

/// t^e with t = T^2 Q^-2; e may be negative.
inline homfly_poly inject_t(int e) {
  const int twice = detail::checked_exponent_mul(2, e);
  return homfly::term(-twice, 0, twice);
}

/// Maps a (q, t) polynomial into the (Q, alpha, T) ring.
inline homfly_poly qt_to_homfly(const qt_poly& p) {
  return substitute<homfly_vars>(p, std::array<image<homfly_vars>, 2>{
                                        image<homfly_vars>{1, homfly::mono(2, 0, 0)},
                                        image<homfly_vars>{1, homfly::mono(-2, 0, 2)}});
}

inline homfly_poly alpha_coefficient(const homfly_poly& p, int d) { return p.coefficient_of(homfly::alpha, d); }

inline std::optional<std::pair<int, int>> degree_range(const homfly_poly& p, std::size_t var) {
  return p.degree_range(var);
}

/// Partial assignment of the variables Q, alpha, T.
///
/// Each assigned variable is replaced by scale * monomial; an integer value v
/// is scale v with the unit monomial.
class specialization {
 public:
  specialization& set_value(std::size_t var, std::int64_t value) {
    slots_.at(var) = image<homfly_vars>{value, {}};
    return *this;
  }

  specialization& set_monomial(std::size_t var, const homfly_monomial& m, std::int64_t scale = 1) {
    slots_.at(var) = image<homfly_vars>{scale, m};
    return *this;
  }

  bool empty() const {
    return std::none_of(slots_.begin(), slots_.end(), [](const auto& s) { return s.has_value(); });
  }

  const std::optional<image<homfly_vars>>& slot(std::size_t var) const { return slots_.at(var); }

  std::array<image<homfly_vars>, 3> images() const {
    std::array<image<homfly_vars>, 3> out;
    for (std::size_t v = 0; v < 3; ++v) {
      if (slots_[v]) {
        out[v] = *slots_[v];
      } else {
        out[v].mono[v] = 1;
      }
    }
    return out;
  }

 private:
  std::array<std::optional<image<homfly_vars>>, 3> slots_;
};

inline homfly_poly specialize(const homfly_poly& p, const specialization& s) {
  if (s.empty()) return p;
  return substitute<homfly_vars>(p, s.images());
}

inline homfly_poly at_T_minus_one(const homfly_poly& p) {
  return specialize(p, specialization{}.set_value(homfly::T, -1));
}

namespace detail {

inline std::optional<std::size_t> parse_variable(std::string_view s) {
  if (s == "Q") return homfly::Q;
  if (s == "a" || s == "alpha") return homfly::alpha;
  if (s == "T") return homfly::T;
  return std::nullopt;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::optional<std::int64_t> parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

// value := integer | [sign] [integer '*'] factor ('*' factor)*
// factor := var ['^' integer]
inline image<homfly_vars> parse_value(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw specialization_error("empty value in specialization");
  if (auto v = parse_integer(text)) return {*v, {}};

  image<homfly_vars> img;
  if (text.front() == '-' || text.front() == '+') {
    if (text.front() == '-') img.scale = -1;
    text.remove_prefix(1);
  }
  bool first = true;
  while (true) {
    const auto star = text.find('*');
    const auto factor = trim(text.substr(0, star));
    if (first) {
      if (auto c = parse_integer(factor)) {
        if (star == std::string_view::npos) throw specialization_error("malformed value in specialization");
        img.scale = checked_mul(img.scale, *c);
        text.remove_prefix(star + 1);
        first = false;
        continue;
      }
    }
    first = false;
    const auto caret = factor.find('^');
    const auto var = parse_variable(trim(factor.substr(0, caret)));
    if (!var) throw specialization_error("unknown variable in specialization value: " + std::string(factor));
    int e = 1;
    if (caret != std::string_view::npos) {
      auto parsed = parse_integer(trim(factor.substr(caret + 1)));
      if (!parsed || *parsed > 1'000'000 || *parsed < -1'000'000)
        throw specialization_error("malformed exponent in specialization: " + std::string(factor));
      e = static_cast<int>(*parsed);
    }
    img.mono[*var] = checked_exponent_add(img.mono[*var], e);
    if (star == std::string_view::npos) break;
    text.remove_prefix(star + 1);
  }
  return img;
}

}  // namespace detail

/// Parses assignments such as "T=-1", "T=-1,a=1" or "T=-1,a=Q^2".
inline specialization parse_specialization(std::string_view text) {
  specialization s;
  std::array<bool, 3> seen{};
  text = detail::trim(text);
  if (text.empty()) throw specialization_error("empty specialization");
  while (true) {
    const auto comma = text.find(',');
    const auto item = detail::trim(text.substr(0, comma));
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw specialization_error("expected var=value in: " + std::string(item));
    const auto var = detail::parse_variable(detail::trim(item.substr(0, eq)));
    if (!var) throw specialization_error("unknown variable in: " + std::string(item));
    if (seen[*var]) throw specialization_error("variable assigned twice in: " + std::string(text));
    seen[*var] = true;
    const auto img = detail::parse_value(item.substr(eq + 1));
    s.set_monomial(*var, img.mono, img.scale);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return s;
}

}  // namespace torsuper
