#pragma once

// Brute-force references used only by the tests. Nothing here calls into the
// library's path statistics, so agreement is a genuine cross-check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "torsuper/poly.hpp"

namespace torsuper::testing {

inline std::uint64_t pascal_binomial(int n, int k) {
  std::vector<std::vector<std::uint64_t>> row(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    row[i][0] = 1;
    for (int j = 1; j <= i; ++j) row[i][j] = row[i - 1][j - 1] + row[i - 1][j];
  }
  return row[n][k];
}

/// Every arrangement of n V's and m H's that never visits a point with
/// n*x > m*y, found by scanning all bitmasks.
inline std::set<std::string> brute_force_paths(int m, int n) {
  std::set<std::string> out;
  const int len = m + n;
  for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
    if (__builtin_popcount(mask) != n) continue;
    std::string s;
    long x = 0, y = 0;
    bool ok = true;
    for (int i = 0; i < len; ++i) {
      if (mask & (1u << (len - 1 - i))) {
        s += 'V';
        ++y;
      } else {
        s += 'H';
        ++x;
      }
      if (n * x > m * y) ok = false;
    }
    if (ok) out.insert(s);
  }
  return out;
}

struct pt {
  long x, y;
};

inline std::vector<pt> points_of(const std::string& s) {
  std::vector<pt> p{{0, 0}};
  for (char c : s) p.push_back(c == 'V' ? pt{p.back().x, p.back().y + 1} : pt{p.back().x + 1, p.back().y});
  return p;
}

/// Unit cells above the diagonal and below the path: for each column, count
/// rows y with m*y >= n*(x+1) and y+1 no higher than the path over the column.
inline long brute_force_area(const std::string& s, int m, int n) {
  const auto p = points_of(s);
  long count = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 'H') continue;
    const long x = p[i].x, top = p[i].y;
    for (long y = 0; y < top; ++y)
      if (static_cast<long>(m) * y >= static_cast<long>(n) * (x + 1)) ++count;
  }
  return count;
}

/// h(s): O-pairs for which some integer level c = n*x - m*y lies on both
/// closed steps, found by scanning every candidate c.
inline long brute_force_h(const std::string& s, int m, int n) {
  const auto p = points_of(s);
  auto lv = [&](pt q) { return static_cast<long>(n) * q.x - static_cast<long>(m) * q.y; };
  auto on = [&](std::size_t i, long c) {
    const long a = lv(p[i]), b = lv(p[i + 1]);
    return std::min(a, b) <= c && c <= std::max(a, b);
  };
  long h = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 'H') continue;
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[j] != 'V') continue;
      for (long c = -static_cast<long>(m) * n; c <= static_cast<long>(m) * n; ++c) {
        if (on(i, c) && on(j, c)) {
          ++h;
          break;
        }
      }
    }
  }
  return h;
}

/// Dense integer polynomial with a shift: coefficient i is for s^(i+low).
struct dense_poly {
  long low = 0;
  std::vector<long long> c;
};

/// (s^{mn}-1)(s-1)/((s^m-1)(s^n-1)) by schoolbook long division, recentred.
inline dense_poly dense_alexander(int m, int n) {
  auto mul = [](const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  auto binom = [](int k) {
    std::vector<long long> r(k + 1, 0);
    r[0] = -1;
    r[k] = 1;
    return r;
  };
  auto divide = [](std::vector<long long> num, const std::vector<long long>& den) {
    std::vector<long long> q(num.size() - den.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
      q[i] = num[i + den.size() - 1] / den.back();
      for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
    }
    for (long long v : num)
      if (v != 0) throw std::runtime_error("inexact");
    return q;
  };
  auto num = mul(binom(m * n), binom(1));
  auto q = divide(divide(num, binom(m)), binom(n));
  return {-static_cast<long>((m - 1) * (n - 1) / 2), q};
}

inline homfly_poly random_poly(std::mt19937& rng, int max_terms = 4, int exp_range = 3, int coeff_range = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms), ex(-exp_range, exp_range), co(-coeff_range, coeff_range);
  homfly_poly p;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) p += homfly::term(ex(rng), ex(rng), ex(rng), co(rng));
  return p;
}

}  // namespace torsuper::testing
