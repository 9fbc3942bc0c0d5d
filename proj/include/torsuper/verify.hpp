#pragma once

// Exhaustive verification suites over coprime shapes, and the sweep driver
// behind `torsuper verify`.

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "torsuper/dyck.hpp"
#include "torsuper/format.hpp"
#include "torsuper/oracle.hpp"
#include "torsuper/superpoly.hpp"

namespace torsuper {

enum class check {
  full_twist,
  kalman,
  lemma1,
  lemma2,
  bijection,
  alexander,
  extraction,
  mfw,
  count,
  symmetry,
  skein,
};

inline constexpr std::array all_checks{check::full_twist, check::kalman,     check::lemma1, check::lemma2,
                                       check::bijection,  check::alexander,  check::extraction, check::mfw,
                                       check::count,      check::symmetry,   check::skein};

constexpr std::string_view name(check c) {
  switch (c) {
    case check::full_twist: return "full_twist";
    case check::kalman: return "kalman";
    case check::lemma1: return "lemma1";
    case check::lemma2: return "lemma2";
    case check::bijection: return "bijection";
    case check::alexander: return "alexander";
    case check::extraction: return "extraction";
    case check::mfw: return "mfw";
    case check::count: return "count";
    case check::symmetry: return "symmetry";
    case check::skein: return "skein";
  }
  return "?";
}

inline std::optional<check> parse_check(std::string_view s) {
  for (auto c : all_checks)
    if (name(c) == s) return c;
  return std::nullopt;
}

struct check_result {
  check_result(check k, torus_shape s) : kind(k), shape(s) {}

  check kind;
  torus_shape shape;
  bool pass = true;
  std::size_t cases = 0;
  std::optional<homfly_poly> lhs;
  std::optional<homfly_poly> rhs;
  std::string witness_path;  // first failing path, if the check is path-based
  std::string detail;

  void fail(std::string why, std::string path = {}) {
    if (!pass) return;  // keep the first witness
    pass = false;
    detail = std::move(why);
    witness_path = std::move(path);
  }
};

namespace detail {

inline void run_count(check_result& r) {
  const auto paths = enumerate(r.shape);
  r.cases = paths.size();
  if (paths.size() != r.shape.dyck_path_count())
    r.fail("enumerated " + std::to_string(paths.size()) + " paths, expected " +
           std::to_string(r.shape.dyck_path_count()));
}

inline void run_lemma1(check_result& r) {
  for_each_dyck_path(r.shape, [&](const dyck_path& p) {
    ++r.cases;
    const auto geometric = area(p), counted = area_via_pairs(p);
    if (geometric != counted)
      r.fail("area " + std::to_string(geometric) + " != (m-1)(n-1)/2 - |O| = " + std::to_string(counted), p.to_string());
  });
}

inline void run_lemma2(check_result& r) {
  const auto& s = r.shape;
  for_each_dyck_path(s, [&](const dyck_path& p) {
    for (const auto& pr : pairs_O(p)) {
      ++r.cases;
      const auto c = classify_pair(s, pr);
      const auto [a, b] = pr.horizontal.end;
      const auto [a2, b2] = pr.vertical.start;
      const bool cond_1a = line_meets(s, {a - 1, b}, pr.vertical);
      const bool cond_2a = line_meets(s, {a2, b2 + 1}, pr.horizontal);
      const std::string where = " for pair (" + std::to_string(pr.horizontal.index) + "," +
                                std::to_string(pr.vertical.index) + ")";
      if (geometric_H(s, pr) != (c.bucket != h_bucket::none))
        r.fail("geometric H disagrees with the discriminant test" + where, p.to_string());
      if (cond_1a != (c.bucket == h_bucket::h1)) r.fail("condition 1A disagrees with bucket H1" + where, p.to_string());
      if (cond_2a != (c.bucket == h_bucket::h2)) r.fail("condition 2A disagrees with bucket H2" + where, p.to_string());
      if (cond_1a && cond_2a) r.fail("conditions 1A and 2A hold together" + where, p.to_string());
    }
  });
}

inline void check_star_pair(check_result& r, const dyck_path& p) {
  const auto s = star(p);
  const auto ps = p.to_string();
  if (!is_rugged(s)) r.fail("star image is not rugged", ps);
  if (!(unstar(s) == p)) r.fail("unstar(star(path)) != path", ps);
  if (area(p) != area(s)) r.fail("area(path) != area(star(path))", ps);

  const auto ov = outer_vertices(s);
  std::size_t k_sum = 0, k1_sum = 0, k2_sum = 0;
  for (const auto& v : ov.others) {
    k_sum += v.counts.k;
    k1_sum += v.counts.k1;
    k2_sum += v.counts.k2;
  }
  if (h_statistic(p) + k_sum != h_statistic(s)) r.fail("h(path) != h(star) - sum k", ps);

  const auto index = star_index_map(p);
  std::set<std::pair<std::size_t, std::size_t>> embedded_O, h_of_path;
  for (const auto& pr : pairs_O(p)) {
    const auto key = std::pair{index[pr.horizontal.index], index[pr.vertical.index]};
    embedded_O.insert(key);
    if (classify_pair(p.shape(), pr).bucket != h_bucket::none) h_of_path.insert(key);
  }
  std::set<std::pair<std::size_t, std::size_t>> h1_inside;
  std::size_t h1_outside = 0, h2_count = 0;
  for (const auto& pr : pairs_O(s)) {
    const auto bucket = classify_pair(s.shape(), pr).bucket;
    const auto key = std::pair{pr.horizontal.index, pr.vertical.index};
    if (bucket == h_bucket::h1) {
      if (embedded_O.count(key))
        h1_inside.insert(key);
      else
        ++h1_outside;
    } else if (bucket == h_bucket::h2) {
      ++h2_count;
    }
  }
  if (h1_outside + h2_count != k_sum) r.fail("|H1(star) \\ O| + |H2(star)| != sum k", ps);
  if (k1_sum != h1_outside) r.fail("sum k1 != |H1(star) \\ O|", ps);
  if (k2_sum != h2_count) r.fail("sum k2 != |H2(star)|", ps);
  if (h1_inside != h_of_path) r.fail("H(path) != H1(star) restricted to O(path)", ps);
}

inline void run_bijection(check_result& r) {
  const auto paths = enumerate(r.shape);
  const auto target = enumerate_rugged(r.shape.with_full_twist());
  std::set<std::string> image, rugged;
  for (const auto& p : paths) {
    ++r.cases;
    check_star_pair(r, p);
    image.insert(star(p).to_string());
  }
  for (const auto& t : target) {
    rugged.insert(t.to_string());
    if (!(star(unstar(t)) == t)) r.fail("star(unstar(path)) != path", t.to_string());
  }
  if (image.size() != paths.size()) r.fail("star is not injective");
  if (target.size() != paths.size())
    r.fail("|D*(m+n,n)| = " + std::to_string(target.size()) + " but |D(m,n)| = " + std::to_string(paths.size()));
  if (image != rugged) r.fail("star image differs from the rugged paths of (m+n,n)");
}

inline void run_extraction(check_result& r) {
  const auto full = mellit_superpolynomial(r.shape);
  r.cases = full.path_count;
  const auto minus = p_minus(r.shape), minus_x = p_minus_by_extraction(full);
  const auto plus = p_plus(r.shape), plus_x = p_plus_by_extraction(full);
  if (minus != minus_x) {
    r.lhs = minus;
    r.rhs = minus_x;
    r.fail("P_- formula differs from alpha-coefficient extraction");
  } else if (plus != plus_x) {
    r.lhs = plus;
    r.rhs = plus_x;
    r.fail("P_+ formula differs from alpha-coefficient extraction");
  }
}

inline void run_mfw(check_result& r) {
  const auto full = mellit_superpolynomial(r.shape);
  r.cases = full.path_count;
  for (const auto& t : full.poly.terms())
    if (t.coeff <= 0) r.fail("nonpositive coefficient " + std::to_string(t.coeff));
  const auto range = degree_range(full.poly, homfly::alpha);
  const auto lo = r.shape.lower_alpha_degree(), hi = r.shape.upper_alpha_degree();
  if (!range) {
    r.fail("superpolynomial is zero");
    return;
  }
  if (range->first < lo || range->second > hi) r.fail("alpha-degrees leave the MFW window");
  if (range->first != lo) r.fail("lower MFW bound not attained");
  if ((range->second == hi) != (full.rugged_count > 0)) r.fail("upper MFW bound attained iff rugged paths exist: violated");
  if (full.rugged_count != enumerate_rugged(r.shape).size()) r.fail("rugged count disagrees with rugged enumeration");

  std::int64_t expected = 0;
  for_each_dyck_path(r.shape, [&](const dyck_path& p) {
    expected += std::int64_t{1} << outer_vertices(p).others.size();
  });
  if (full.poly.coefficient_sum() != expected) r.fail("coefficient sum differs from sum of 2^|V|");
}

inline void run_symmetry(check_result& r) {
  const torus_shape flipped(r.shape.n(), r.shape.m());
  const auto a = mellit_superpolynomial(r.shape), b = mellit_superpolynomial(flipped);
  r.cases = a.path_count + b.path_count;
  if (a.poly != b.poly) {
    r.lhs = a.poly;
    r.rhs = b.poly;
    r.fail("P(m,n) != P(n,m)");
  }
  const auto cat = qt_catalan(r.shape);
  if (cat != swap_qt(cat)) r.fail("q,t-Catalan sum not symmetric under q <-> t");
}

inline void run_skein(check_result& r) {
  if (r.shape.n() != 2) return;  // only two-strand shapes have an oracle
  r.cases = 1;
  r.lhs = at_T_minus_one(mellit_superpolynomial(r.shape).poly);
  r.rhs = two_strand_homfly(r.shape.m());
  if (*r.lhs != *r.rhs) r.fail("superpolynomial at T=-1 differs from the skein recursion");
}

inline void run_identity(check_result& r, const identity_report& id, std::string_view what) {
  r.cases = 1;
  r.lhs = id.lhs;
  r.rhs = id.rhs;
  if (!id.pass) r.fail(std::string(what));
}

}  // namespace detail

inline check_result run_check(check c, const torus_shape& s) {
  check_result r(c, s);
  try {
    switch (c) {
      case check::full_twist: detail::run_identity(r, verify_full_twist(s), "P_-(m,n) != T^(n^2-1) P_+(m+n,n)"); break;
      case check::kalman: detail::run_identity(r, kalman_check(s), "HOMFLY full-twist sign identity fails"); break;
      case check::lemma1: detail::run_lemma1(r); break;
      case check::lemma2: detail::run_lemma2(r); break;
      case check::bijection: detail::run_bijection(r); break;
      case check::alexander: {
        const auto a = check_alexander(s);
        r.cases = 1;
        r.lhs = a.engine;
        r.rhs = a.closed;
        if (!a.pass) r.fail("specialization at T=-1, a=1 differs from the Alexander closed form");
        break;
      }
      case check::extraction: detail::run_extraction(r); break;
      case check::mfw: detail::run_mfw(r); break;
      case check::count: detail::run_count(r); break;
      case check::symmetry: detail::run_symmetry(r); break;
      case check::skein: detail::run_skein(r); break;
    }
  } catch (const invariant_violation& e) {
    r.fail(std::string("invariant violation: ") + e.what());
  } catch (const error& e) {
    r.fail(std::string("error: ") + e.what());
  }
  return r;
}

/// Coprime shapes with 2 <= m+n <= max_sum, ordered by (m+n, n).
inline std::vector<torus_shape> sweep_shapes(int max_sum) {
  std::vector<torus_shape> out;
  for (int total = 2; total <= max_sum; ++total)
    for (int n = 1; n < total; ++n)
      if (std::gcd(total - n, n) == 1) out.emplace_back(total - n, n);
  return out;
}

struct sweep_spec {
  int max_sum = 3;
  std::vector<check> checks;
};

struct shape_report {
  torus_shape shape;
  std::vector<check_result> results;
};

struct sweep_summary {
  std::size_t shapes = 0;
  std::size_t checks = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool ok() const { return failed == 0; }
};

/// Runs the selected checks on every shape with `jobs` workers. `on_shape`
/// sees shapes in sweep order regardless of which worker finished first.
inline sweep_summary run_sweep(const sweep_spec& spec, unsigned jobs,
                               const std::function<void(const shape_report&)>& on_shape) {
  const auto shapes = sweep_shapes(spec.max_sum);
  std::vector<std::optional<shape_report>> slots(shapes.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < shapes.size(); i = next++) {
      shape_report rep{shapes[i], {}};
      for (auto c : spec.checks) rep.results.push_back(run_check(c, shapes[i]));
      {
        std::lock_guard lock(mu);
        slots[i] = std::move(rep);
      }
      ready.notify_all();
    }
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, shapes.size()))));
  std::vector<std::jthread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);

  sweep_summary summary;
  summary.shapes = shapes.size();
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return slots[i].has_value(); });
    shape_report rep = std::move(*slots[i]);
    slots[i].reset();
    lock.unlock();
    for (const auto& r : rep.results) {
      ++summary.checks;
      ++(r.pass ? summary.passed : summary.failed);
    }
    if (on_shape) on_shape(rep);
  }
  return summary;
}

inline json to_json(const check_result& r) {
  json j = json::object();
  j["m"] = r.shape.m();
  j["n"] = r.shape.n();
  j["check"] = std::string(name(r.kind));
  j["pass"] = r.pass;
  j["cases"] = r.cases;
  if (r.lhs) j["lhs"] = to_json(*r.lhs);
  if (r.rhs) j["rhs"] = to_json(*r.rhs);
  if (!r.pass) {
    json w = json::object();
    if (!r.witness_path.empty()) w["path"] = r.witness_path;
    w["detail"] = r.detail;
    j["witness"] = std::move(w);
  }
  return j;
}

inline json to_json(const sweep_summary& s) {
  json j = json::object();
  j["shapes"] = s.shapes;
  j["checks"] = s.checks;
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  j["pass"] = s.ok();
  return j;
}

}  // namespace torsuper
