#pragma once

// Text, LaTeX, CSV and JSON renderings of Laurent polynomials.
//
// JSON and CSV list terms in canonical order. The pretty forms sort terms by
// the traits' text_order so that, e.g., "Q^2 - 1 + Q^-2" reads naturally.

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

#include "torsuper/laurent.hpp"

namespace torsuper {

using json = nlohmann::ordered_json;

namespace detail {

template <class Vars>
std::vector<typename laurent<Vars>::term> display_sorted(const laurent<Vars>& p) {
  std::vector<typename laurent<Vars>::term> ts(p.terms().begin(), p.terms().end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    for (const auto& key : Vars::text_order) {
      const int x = a.mono[key.var], y = b.mono[key.var];
      if (x == y) continue;
      return key.direction == sort_direction::ascending ? x < y : x > y;
    }
    return false;
  });
  return ts;
}

template <class Vars, class FactorFn>
std::string render(const laurent<Vars>& p, std::string_view coeff_sep, FactorFn&& factor) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : display_sorted(p)) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string factors;
    for (std::size_t var : Vars::factor_order) {
      const int e = t.mono[var];
      if (e == 0) continue;
      if (!factors.empty()) factors += coeff_sep;
      factors += factor(var, e);
    }
    const auto magnitude = negative ? -static_cast<unsigned long long>(t.coeff)
                                    : static_cast<unsigned long long>(t.coeff);
    if (factors.empty()) {
      out += std::to_string(magnitude);
    } else {
      if (magnitude != 1) {
        out += std::to_string(magnitude);
        out += coeff_sep;
      }
      out += factors;
    }
  }
  return out;
}

}  // namespace detail

/// ASCII form: "Q^2*T^-2*a^2 + Q^-2*a^2 + T^-3*a^4".
template <class Vars>
std::string to_text(const laurent<Vars>& p) {
  return detail::render(p, "*", [](std::size_t var, int e) {
    std::string f(Vars::names[var]);
    if (e != 1) f += "^" + std::to_string(e);
    return f;
  });
}

template <class Vars>
std::string to_latex(const laurent<Vars>& p) {
  return detail::render(p, " ", [](std::size_t var, int e) {
    std::string f(Vars::latex_names[var]);
    if (e != 1) f += "^{" + std::to_string(e) + "}";
    return f;
  });
}

/// Header line plus one row per term, canonical order.
template <class Vars>
std::string to_csv(const laurent<Vars>& p) {
  std::string out;
  for (std::size_t var : Vars::field_order) {
    out += Vars::json_keys[var];
    out += ",";
  }
  out += "c\n";
  for (const auto& t : p.terms()) {
    for (std::size_t var : Vars::field_order) {
      out += std::to_string(t.mono[var]);
      out += ",";
    }
    out += std::to_string(t.coeff);
    out += "\n";
  }
  return out;
}

template <class Vars>
json to_json(const laurent<Vars>& p) {
  json arr = json::array();
  for (const auto& t : p.terms()) {
    json obj = json::object();
    for (std::size_t var : Vars::field_order) obj[std::string(Vars::json_keys[var])] = t.mono[var];
    obj["c"] = t.coeff;
    arr.push_back(std::move(obj));
  }
  return arr;
}

template <class Vars>
laurent<Vars> from_json(const json& arr) {
  if (!arr.is_array()) throw conversion_error("polynomial JSON must be an array of terms");
  std::vector<typename laurent<Vars>::term> ts;
  for (const auto& obj : arr) {
    typename laurent<Vars>::term t;
    for (std::size_t var = 0; var < Vars::arity; ++var) t.mono[var] = obj.at(std::string(Vars::json_keys[var])).template get<int>();
    t.coeff = obj.at("c").template get<std::int64_t>();
    ts.push_back(t);
  }
  return laurent<Vars>::from_terms(std::move(ts));
}

}  // namespace torsuper
