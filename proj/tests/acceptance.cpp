// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "test_oracles.hpp"
#include "torsuper/torsuper.hpp"

namespace {

using namespace torsuper;
using homfly::term;

struct outcome {
  bool pass = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      note = what;
    }
  }
};

struct criterion {
  int id;
  const char* title;
  double time_limit_s;  // 0 = no limit
  std::function<outcome()> run;
};

std::string shape_str(const torus_shape& s) { return "(" + std::to_string(s.m()) + "," + std::to_string(s.n()) + ")"; }

outcome sweep(int max_sum, std::initializer_list<check> checks) {
  outcome o;
  for (const auto& s : sweep_shapes(max_sum))
    for (auto c : checks) {
      const auto r = run_check(c, s);
      o.require(r.pass, std::string(name(c)) + " failed at " + shape_str(s) + ": " + r.detail + " " + r.witness_path);
    }
  return o;
}

outcome reference_path() {
  outcome o;
  const auto p = dyck_path::parse(torus_shape(5, 4), "VVHVHHVHH");
  const auto ov = outer_vertices(p);
  o.require(area(p) == 2, "area != 2");
  o.require(h_statistic(p) == 4, "h != 4");
  o.require(ov.p0.point == lattice_point{1, 3}, "p0 != (1,3)");
  o.require(ov.others.size() == 2, "|V| != 2");
  if (ov.others.size() == 2) {
    o.require(ov.others[0].point == lattice_point{0, 2} && ov.others[0].counts.k == 1, "k(0,2) != 1");
    o.require(ov.others[1].point == lattice_point{3, 4} && ov.others[1].counts.k == 2, "k(3,4) != 2");
  }
  return o;
}

outcome reference_star() {
  outcome o;
  const auto g = dyck_path::parse(torus_shape(5, 4), "VVHVHHVHH");
  const auto s = star(g);
  o.require(s.to_string() == "VHVHHVHHHVHHH" && s.shape() == torus_shape(9, 4), "star of the reference path is wrong");
  o.require(is_rugged(s), "star image not rugged");
  o.require(area(g) == area(s), "area not preserved by star");
  std::size_t k_sum = 0;
  for (const auto& v : outer_vertices(s).others) k_sum += v.counts.k;
  o.require(h_statistic(g) + k_sum == h_statistic(s), "h(star) != h + sum of k on the star image");
  return o;
}

outcome theorem_sweep() {
  outcome o;
  const auto shapes = sweep_shapes(16);
  o.require(shapes.size() >= 60, "fewer than 60 coprime shapes");
  for (const auto& s : shapes) {
    const auto r = verify_full_twist(s);
    o.require(r.pass, "full twist fails at " + shape_str(s) + ": " + to_text(r.lhs) + " vs " + to_text(r.rhs));
  }
  o.note = o.pass ? std::to_string(shapes.size()) + " shapes" : o.note;
  return o;
}

outcome oracle_agreement() {
  outcome o;
  for (int k : {1, 3, 5, 7, 9, 11}) {
    const auto engine = at_T_minus_one(mellit_superpolynomial(torus_shape(k, 2)).poly);
    o.require(engine == two_strand_homfly(k), "skein mismatch at k=" + std::to_string(k));
  }
  o.require(two_strand_homfly(3) == term(0, 4, 0, -1) + term(2, 2, 0) + term(-2, 2, 0), "trefoil HOMFLY value");
  o.require(at_T_minus_one(mellit_superpolynomial(torus_shape(3, 2)).poly) ==
                term(0, 4, 0, -1) + term(2, 2, 0) + term(-2, 2, 0),
            "trefoil superpolynomial at T=-1");
  return o;
}

outcome alexander_agreement() {
  outcome o;
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n) {
      if (std::gcd(m, n) != 1) continue;
      o.require(check_alexander(torus_shape(m, n)).pass, "Alexander mismatch at (" + std::to_string(m) + "," +
                                                              std::to_string(n) + ")");
      // Also against the test-side dense division.
      const auto d = testing::dense_alexander(m, n);
      alexander_poly dense;
      for (std::size_t i = 0; i < d.c.size(); ++i)
        dense += alexander_poly::single({{static_cast<int>(d.low + i)}}, d.c[i]);
      o.require(alexander_torus(torus_shape(m, n)) == dense, "closed form disagrees with dense division");
    }
  return o;
}

outcome structural() {
  outcome o = sweep(14, {check::count, check::mfw, check::extraction, check::kalman});
  for (const auto& s : sweep_shapes(14))
    o.require(s.dyck_path_count() == testing::pascal_binomial(s.m() + s.n(), s.n()) / (s.m() + s.n()),
              "closed-form count disagrees with Pascal triangle");
  return o;
}

}  // namespace

int main() {
  const std::vector<criterion> criteria{
      {1, "Reference path VVHVHHVHH in 5x4: area, h, p0, V, k", 0, reference_path},
      {2, "Star of the reference path: image, rugged, area, h transfer", 0, reference_star},
      {3, "Full-twist theorem, all coprime m+n <= 16", 120, theorem_sweep},
      {4, "Area identity and pair classification, m+n <= 14", 60,
       [] { return sweep(14, {check::lemma1, check::lemma2}); }},
      {5, "Bijection suite (round trip, counts, area, h and k transfer), m+n <= 12", 60,
       [] { return sweep(12, {check::bijection}); }},
      {6, "Skein oracle agreement at T=-1 for (k,2), k = 1..11 odd", 0, oracle_agreement},
      {7, "Alexander agreement at T=-1, a=1 for m,n <= 8", 0, alexander_agreement},
      {8, "Structural invariants (counts, positivity, MFW window, extraction, sign identity), m+n <= 14", 0,
       structural},
      {9, "Symmetry: P(m,n) = P(n,m) and q<->t invariance, m+n <= 12", 0,
       [] { return sweep(12, {check::symmetry}); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s && o.pass) {
      o.pass = false;
      o.note = "exceeded time limit";
    }
    std::printf("[%s] AC%d %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                o.note.empty() ? "" : " -- ", o.note.c_str());
    failures += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
