#pragma once

// Rational (m,n)-Dyck paths and the statistics that enter the torus-knot
// superpolynomial: area, the pair sets O and H, outer vertices with their
// k-counts, ruggedness, and the star bijection D_{m,n} -> D*_{m+n,n}.
//
// All geometry is done with the integer level function
//   level(x, y) = n*x - m*y,
// which is zero on the diagonal and negative strictly above it. Lines
// parallel to the diagonal are level sets, so "a parallel line meets a step"
// becomes "a value lies in the step's closed level interval".

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torsuper/errors.hpp"

namespace torsuper {

struct lattice_point {
  int x = 0;
  int y = 0;
  auto operator<=>(const lattice_point&) const = default;
};

/// A coprime pair (m, n) of positive integers, read as the toric braid
/// (sigma_1 ... sigma_{n-1})^m on n strands.
class torus_shape {
 public:
  torus_shape(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 1) throw invalid_shape("torus shape needs positive m and n");
    if (std::gcd(m, n) != 1)
      throw invalid_shape("torus shape (" + std::to_string(m) + "," + std::to_string(n) + ") is not coprime");
  }

  int m() const { return m_; }
  int n() const { return n_; }
  int strands() const { return n_; }

  /// Exponent sum of the toric braid.
  std::int64_t exponent_sum() const { return std::int64_t{m_} * (n_ - 1); }
  /// e - n + 1 = (m-1)(n-1); also twice the genus.
  std::int64_t lower_alpha_degree() const { return std::int64_t{m_ - 1} * (n_ - 1); }
  /// e + n - 1 = (m+1)(n-1).
  std::int64_t upper_alpha_degree() const { return std::int64_t{m_ + 1} * (n_ - 1); }

  std::int64_t level(lattice_point p) const { return std::int64_t{n_} * p.x - std::int64_t{m_} * p.y; }
  /// Grows with the distance from the diagonal on the upper side.
  std::int64_t diag_key(lattice_point p) const { return -level(p); }

  /// Shape of the braid with one full twist appended.
  torus_shape with_full_twist() const { return {m_ + n_, n_}; }

  /// binomial(m+n, n) / (m+n).
  std::uint64_t dyck_path_count() const {
    const int total = m_ + n_;
    unsigned __int128 c = 1;
    for (int i = 0; i < n_; ++i) c = c * static_cast<unsigned>(total - i) / static_cast<unsigned>(i + 1);
    return static_cast<std::uint64_t>(c / static_cast<unsigned>(total));
  }

  auto operator<=>(const torus_shape&) const = default;

 private:
  int m_;
  int n_;
};

enum class step_kind : std::uint8_t { vertical, horizontal };

constexpr char to_char(step_kind k) { return k == step_kind::vertical ? 'V' : 'H'; }

struct step_ref {
  std::size_t index = 0;
  step_kind kind = step_kind::vertical;
  lattice_point start;
  lattice_point end;
};

/// Closed interval of level values swept by a step.
inline std::pair<std::int64_t, std::int64_t> level_interval(const torus_shape& s, const step_ref& r) {
  const auto a = s.level(r.start), b = s.level(r.end);
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

/// True iff the parallel line through `p` meets the closed step `r`.
inline bool line_meets(const torus_shape& s, lattice_point p, const step_ref& r) {
  const auto c = s.level(p);
  const auto [lo, hi] = level_interval(s, r);
  return lo <= c && c <= hi;
}

class dyck_path {
 public:
  /// Validates step counts and the diagonal condition.
  dyck_path(torus_shape shape, std::vector<step_kind> steps) : shape_(shape), steps_(std::move(steps)) {
    std::size_t verticals = 0;
    for (auto k : steps_) verticals += k == step_kind::vertical;
    if (verticals != static_cast<std::size_t>(shape_.n()) ||
        steps_.size() - verticals != static_cast<std::size_t>(shape_.m()))
      throw invalid_path("path must have exactly m horizontal and n vertical steps");
    build_vertices();
    for (const auto& v : vertices_)
      if (shape_.level(v) > 0) throw invalid_path("path dips below the diagonal at (" + std::to_string(v.x) + "," +
                                                  std::to_string(v.y) + ")");
  }

  static dyck_path parse(torus_shape shape, std::string_view text) {
    std::vector<step_kind> steps;
    steps.reserve(text.size());
    for (char c : text) {
      if (c == 'V' || c == 'v') {
        steps.push_back(step_kind::vertical);
      } else if (c == 'H' || c == 'h') {
        steps.push_back(step_kind::horizontal);
      } else {
        throw invalid_path(std::string("unexpected step character '") + c + "'");
      }
    }
    return {shape, std::move(steps)};
  }

  const torus_shape& shape() const { return shape_; }
  const std::vector<step_kind>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }

  /// Lattice point reached after `i` steps; vertex(0) is the origin.
  lattice_point vertex(std::size_t i) const { return vertices_[i]; }

  step_ref step(std::size_t i) const { return {i, steps_[i], vertices_[i], vertices_[i + 1]}; }

  std::string to_string() const {
    std::string s;
    s.reserve(steps_.size());
    for (auto k : steps_) s += to_char(k);
    return s;
  }

  bool operator==(const dyck_path& o) const { return shape_ == o.shape_ && steps_ == o.steps_; }

 private:
  void build_vertices() {
    vertices_.resize(steps_.size() + 1);
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      vertices_[i + 1] = vertices_[i];
      if (steps_[i] == step_kind::vertical)
        ++vertices_[i + 1].y;
      else
        ++vertices_[i + 1].x;
    }
  }

  torus_shape shape_;
  std::vector<step_kind> steps_;
  std::vector<lattice_point> vertices_;
};

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

// Depth-first, V before H. Every prefix that stays weakly above the diagonal
// extends to a full path (finish with the remaining V's, then H's), so the
// only pruning needed is the diagonal test. With `rugged_only` a V must be
// followed immediately by an H.
template <class Fn>
void enumerate_steps(const torus_shape& s, bool rugged_only, Fn&& visit) {
  const int m = s.m(), n = s.n();
  std::vector<step_kind> steps;
  steps.reserve(static_cast<std::size_t>(m + n));
  auto recurse = [&](auto& self, int x, int y) -> void {
    if (x == m && y == n) {
      visit(steps);
      return;
    }
    const bool after_vertical = !steps.empty() && steps.back() == step_kind::vertical;
    if (y < n && !(rugged_only && after_vertical)) {
      steps.push_back(step_kind::vertical);
      self(self, x, y + 1);
      steps.pop_back();
    }
    if (x < m && s.level({x + 1, y}) <= 0) {
      steps.push_back(step_kind::horizontal);
      self(self, x + 1, y);
      steps.pop_back();
    }
  };
  recurse(recurse, 0, 0);
}

}  // namespace detail

template <class Fn>
void for_each_dyck_path(const torus_shape& s, Fn&& fn) {
  detail::enumerate_steps(s, false, [&](const std::vector<step_kind>& steps) { fn(dyck_path(s, steps)); });
}

/// All of D_{m,n} in depth-first order, V before H.
inline std::vector<dyck_path> enumerate(const torus_shape& s) {
  std::vector<dyck_path> out;
  for_each_dyck_path(s, [&](dyck_path p) { out.push_back(std::move(p)); });
  return out;
}

// ---------------------------------------------------------------------------
// Area and the pair sets

/// Complete unit squares between the path and the diagonal, counted cell by
/// cell: cell [x,x+1]x[y,y+1] counts iff its lower-right corner is weakly
/// above the diagonal and its top edge is weakly below the path.
inline std::size_t area(const dyck_path& p) {
  const auto& s = p.shape();
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto r = p.step(i);
    if (r.kind != step_kind::horizontal) continue;
    const int x = r.start.x, height = r.start.y;
    for (int y = 0; y + 1 <= height; ++y)
      if (s.level({x + 1, y}) <= 0) ++count;
  }
  return count;
}

/// |O(path)|: pairs (horizontal step, later vertical step).
inline std::size_t count_O(const dyck_path& p) {
  std::size_t horizontals = 0, pairs = 0;
  for (auto k : p.steps()) {
    if (k == step_kind::horizontal)
      ++horizontals;
    else
      pairs += horizontals;
  }
  return pairs;
}

/// (m-1)(n-1)/2 - |O|.
inline std::size_t area_via_pairs(const dyck_path& p) {
  const auto full = static_cast<std::size_t>(p.shape().lower_alpha_degree() / 2);
  return full - count_O(p);
}

struct step_pair {
  step_ref horizontal;
  step_ref vertical;
};

inline std::vector<step_pair> pairs_O(const dyck_path& p) {
  std::vector<step_pair> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.steps()[i] != step_kind::horizontal) continue;
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p.steps()[j] == step_kind::vertical) out.push_back({p.step(i), p.step(j)});
  }
  return out;
}

enum class h_bucket { h1, h2, none };

struct pair_classification {
  std::int64_t discriminant = 0;
  h_bucket bucket = h_bucket::none;
};

/// Arithmetic classification of an O-pair.
///
/// With the horizontal step ending at (a,b) and the vertical step starting at
/// (a',b'), D = n(a'-a) - m(b'-b). H1 is -n < D < m-n, H2 is m-n < D < m.
/// D in {-n, m-n, m} cannot occur for an O-pair of a Dyck path; seeing one
/// throws invariant_violation.
inline pair_classification classify_pair(const torus_shape& s, const step_pair& pr) {
  const auto [a, b] = pr.horizontal.end;
  const auto [a2, b2] = pr.vertical.start;
  const std::int64_t m = s.m(), n = s.n();
  const std::int64_t d = n * (a2 - a) - m * (b2 - b);
  if (d == -n || d == m - n || d == m)
    throw invariant_violation("O-pair with boundary discriminant " + std::to_string(d));
  h_bucket bucket = h_bucket::none;
  if (-n < d && d < m - n)
    bucket = h_bucket::h1;
  else if (m - n < d && d < m)
    bucket = h_bucket::h2;
  return {d, bucket};
}

/// Some parallel line meets both steps of the pair.
inline bool geometric_H(const torus_shape& s, const step_pair& pr) {
  const auto [h_lo, h_hi] = level_interval(s, pr.horizontal);
  const auto [v_lo, v_hi] = level_interval(s, pr.vertical);
  return h_lo <= v_hi && v_lo <= h_hi;
}

struct h_split {
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  std::size_t total() const { return h1 + h2; }
};

inline h_split split_H(const dyck_path& p) {
  h_split out;
  for (const auto& pr : pairs_O(p)) {
    switch (classify_pair(p.shape(), pr).bucket) {
      case h_bucket::h1: ++out.h1; break;
      case h_bucket::h2: ++out.h2; break;
      case h_bucket::none: break;
    }
  }
  return out;
}

/// h(path) = |H1| + |H2|.
inline std::size_t h_statistic(const dyck_path& p) { return split_H(p).total(); }

// ---------------------------------------------------------------------------
// Outer vertices

struct k_count {
  std::size_t k = 0;
  std::size_t k1 = 0;  // vertical steps after p meeting l(p)
  std::size_t k2 = 0;  // horizontal steps before p meeting l(p)
};

struct outer_vertex {
  lattice_point point;
  /// Number of steps preceding the vertex: steps[position-1] is V and
  /// steps[position] is H.
  std::size_t position = 0;
  std::int64_t diag_key = 0;
  k_count counts;
};

inline bool is_outer_position(const dyck_path& p, std::size_t position) {
  return position >= 1 && position < p.size() && p.steps()[position - 1] == step_kind::vertical &&
         p.steps()[position] == step_kind::horizontal;
}

/// k(p) with its k1/k2 split for the outer vertex reached after `position`
/// steps. The two steps touching the vertex are skipped. Horizontal and
/// vertical crossings are counted separately and must agree.
inline k_count k_counts(const dyck_path& p, std::size_t position) {
  if (!is_outer_position(p, position)) throw std::invalid_argument("k_counts: not an outer vertex");
  const auto& s = p.shape();
  const auto v = p.vertex(position);
  std::size_t horizontal = 0, vertical = 0;
  k_count out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i + 1 == position || i == position) continue;
    const auto r = p.step(i);
    if (!line_meets(s, v, r)) continue;
    if (r.kind == step_kind::horizontal) {
      ++horizontal;
      if (i < position) ++out.k2;
    } else {
      ++vertical;
      if (i > position) ++out.k1;
    }
  }
  if (horizontal != vertical) throw invariant_violation("k(p): horizontal and vertical crossing counts differ");
  out.k = horizontal;
  if (out.k != out.k1 + out.k2) throw invariant_violation("k(p) != k1(p) + k2(p)");
  return out;
}

struct outer_vertex_set {
  outer_vertex p0;                  // farthest from the diagonal
  std::vector<outer_vertex> others;  // V(path), in path order
};

inline outer_vertex_set outer_vertices(const dyck_path& p) {
  const auto& s = p.shape();
  std::vector<outer_vertex> all;
  for (std::size_t pos = 1; pos < p.size(); ++pos) {
    if (!is_outer_position(p, pos)) continue;
    const auto v = p.vertex(pos);
    all.push_back({v, pos, s.diag_key(v), k_counts(p, pos)});
  }
  // Every path starts with V and ends with H, so there is at least one.
  std::size_t best = 0;
  for (std::size_t i = 1; i < all.size(); ++i)
    if (all[i].diag_key > all[best].diag_key) best = i;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (i != best && all[i].diag_key == all[best].diag_key)
      throw invariant_violation("two outer vertices at the same distance from the diagonal");
  if (all[best].counts.k != 0) throw invariant_violation("k(p0) != 0");

  outer_vertex_set out{all[best], {}};
  for (std::size_t i = 0; i < all.size(); ++i)
    if (i != best) out.others.push_back(all[i]);
  return out;
}

/// |V(path)| = n - 1.
inline bool is_rugged(const dyck_path& p) {
  return outer_vertices(p).others.size() + 1 == static_cast<std::size_t>(p.shape().n());
}

/// Rugged paths of a shape, enumerated directly: a path is rugged exactly
/// when each vertical step is followed by a horizontal one.
template <class Fn>
void for_each_rugged_path(const torus_shape& s, Fn&& fn) {
  detail::enumerate_steps(s, true, [&](const std::vector<step_kind>& steps) { fn(dyck_path(s, steps)); });
}

inline std::vector<dyck_path> enumerate_rugged(const torus_shape& s) {
  std::vector<dyck_path> out;
  for_each_rugged_path(s, [&](dyck_path p) { out.push_back(std::move(p)); });
  return out;
}

// ---------------------------------------------------------------------------
// Star bijection

/// Index in star(p) of each step of p.
inline std::vector<std::size_t> star_index_map(const dyck_path& p) {
  std::vector<std::size_t> map(p.size());
  std::size_t verticals = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    map[i] = i + verticals;
    verticals += p.steps()[i] == step_kind::vertical;
  }
  return map;
}

/// Inserts a horizontal step right after every vertical step.
inline dyck_path star(const dyck_path& p) {
  std::vector<step_kind> steps;
  steps.reserve(p.size() + static_cast<std::size_t>(p.shape().n()));
  for (auto k : p.steps()) {
    steps.push_back(k);
    if (k == step_kind::vertical) steps.push_back(step_kind::horizontal);
  }
  return {p.shape().with_full_twist(), std::move(steps)};
}

/// Inverse of star. Throws structural_error if some vertical step is not
/// followed by a horizontal one, or the shape is not (m+n, n).
inline dyck_path unstar(const dyck_path& p) {
  const int n = p.shape().n(), m = p.shape().m() - n;
  if (m < 1) throw structural_error("unstar: shape has no preimage under star");
  std::vector<step_kind> steps;
  steps.reserve(p.size() - static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < p.size(); ++i) {
    steps.push_back(p.steps()[i]);
    if (p.steps()[i] == step_kind::vertical) {
      if (i + 1 >= p.size() || p.steps()[i + 1] != step_kind::horizontal)
        throw structural_error("unstar: vertical step not followed by a horizontal step");
      ++i;
    }
  }
  return {torus_shape(m, n), std::move(steps)};
}

}  // namespace torsuper
