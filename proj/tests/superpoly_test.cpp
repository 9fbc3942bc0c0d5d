#include <gtest/gtest.h>

#include "torsuper/format.hpp"
#include "torsuper/oracle.hpp"
#include "torsuper/superpoly.hpp"
#include "torsuper/verify.hpp"

namespace torsuper {
namespace {

using homfly::term;

dyck_path path(int m, int n, const char* steps) { return dyck_path::parse(torus_shape(m, n), steps); }

homfly_poly trefoil() { return term(2, 2, -2) + term(-2, 2, 0) + term(0, 4, -3); }

qt_poly qt(int dq, int dt, std::int64_t c = 1) {
  qt_poly::monomial_type m;
  m[0] = dq;
  m[1] = dt;
  return qt_poly::single(m, c);
}

TEST(TermOfPath, Examples) {
  EXPECT_EQ(term_of_path(path(3, 2, "VVHHH")), term(2, 0, 0));
  // t (1 + T^-1 a^2 t^-1) = T^2 Q^-2 + T^-1 a^2
  EXPECT_EQ(term_of_path(path(3, 2, "VHVHH")), term(-2, 0, 2) + term(0, 2, -1));
  EXPECT_EQ(term_of_path(path(1, 1, "VH")), homfly_poly::constant(1));
}

TEST(Mellit, Examples) {
  const auto unknot = mellit_superpolynomial(torus_shape(1, 2));
  EXPECT_EQ(unknot.poly, homfly_poly::constant(1));
  EXPECT_EQ(unknot.path_count, 1u);
  EXPECT_EQ(unknot.rugged_count, 0u);

  const auto t32 = mellit_superpolynomial(torus_shape(3, 2));
  EXPECT_EQ(t32.poly, trefoil());
  EXPECT_EQ(t32.path_count, 2u);
  EXPECT_EQ(t32.rugged_count, 1u);

  EXPECT_EQ(mellit_superpolynomial(torus_shape(2, 3)).poly, trefoil());
  EXPECT_THROW(mellit_superpolynomial(torus_shape(2, 2)), invalid_shape);
}

TEST(Mellit, TrefoilAtTMinusOneMatchesSkein) {
  EXPECT_EQ(at_T_minus_one(trefoil()), two_strand_homfly(3));
}

TEST(PMinusPlus, Examples) {
  EXPECT_EQ(p_minus(torus_shape(1, 2)), homfly_poly::constant(1));
  EXPECT_EQ(p_minus(torus_shape(3, 2)), term(2, 0, -2) + term(-2, 0, 0));
  EXPECT_EQ(p_plus(torus_shape(3, 2)), term(0, 0, -3));
  EXPECT_TRUE(p_plus(torus_shape(2, 3)).is_zero());
  EXPECT_TRUE(p_plus(torus_shape(1, 2)).is_zero());
}

TEST(PMinusPlus, EqualExtractionFromFullSum) {
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const torus_shape s(m, n);
      const auto full = mellit_superpolynomial(s);
      EXPECT_EQ(p_minus(s), p_minus_by_extraction(full)) << m << "," << n;
      EXPECT_EQ(p_plus(s), p_plus_by_extraction(full)) << m << "," << n;
    }
  }
}

TEST(FullTwist, Examples) {
  const auto a = verify_full_twist(torus_shape(1, 2));
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.lhs, homfly_poly::constant(1));
  EXPECT_EQ(p_plus(torus_shape(3, 2)).scaled(homfly::mono(0, 0, 3)), homfly_poly::constant(1));

  const auto b = verify_full_twist(torus_shape(3, 2));
  EXPECT_TRUE(b.pass);
  EXPECT_EQ(b.lhs, term(2, 0, -2) + term(-2, 0, 0));
  EXPECT_EQ(b.rhs, b.lhs);
}

TEST(FullTwist, SweepTo16) {
  for (const auto& s : sweep_shapes(16)) EXPECT_TRUE(verify_full_twist(s).pass) << s.m() << "," << s.n();
}

TEST(Kalman, Examples) {
  EXPECT_TRUE(kalman_check(torus_shape(1, 2)).pass);
  // (1,2): 1 = (-1) * P_+(3,2)|_{T=-1} = (-1)(-1)
  EXPECT_EQ(at_T_minus_one(p_plus(torus_shape(3, 2))), homfly_poly::constant(-1));
  EXPECT_TRUE(kalman_check(torus_shape(3, 2)).pass);
  for (const auto& s : sweep_shapes(16)) EXPECT_TRUE(kalman_check(s).pass) << s.m() << "," << s.n();
}

TEST(QtCatalan, Examples) {
  EXPECT_EQ(qt_catalan(torus_shape(3, 2)), qt(1, 0) + qt(0, 1));
  EXPECT_EQ(qt_catalan(torus_shape(5, 4)).coefficient_sum(), 14);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(qt_catalan(torus_shape(1, n)), qt_poly::constant(1));
  // Two standard rational q,t-Catalan values.
  EXPECT_EQ(qt_catalan(torus_shape(5, 2)), qt(2, 0) + qt(1, 1) + qt(0, 2));
  EXPECT_EQ(qt_catalan(torus_shape(4, 3)), qt(3, 0) + qt(2, 1) + qt(1, 2) + qt(0, 3) + qt(1, 1));
  EXPECT_EQ(to_text(qt_catalan(torus_shape(3, 2))), "q + t");
}

TEST(QtCatalan, PMinusIsTheBareSum) {
  for (const auto& s : sweep_shapes(10)) {
    const int g2 = static_cast<int>(s.lower_alpha_degree());
    EXPECT_EQ(p_minus(s), qt_to_homfly(qt_catalan(s)).scaled(homfly::mono(0, 0, -g2)));
  }
}

TEST(Convention, Examples) {
  primed_poly::monomial_type tp, qp, ap;
  tp[primed::t] = 1;
  qp[primed::q] = 1;
  ap[primed::a] = 1;
  EXPECT_EQ(convert_convention(inject_q(1)), primed_poly::single(tp));
  EXPECT_EQ(convert_convention(inject_t(1)), primed_poly::single(qp));
  EXPECT_EQ(convert_convention(term(0, 2, -1, -1)), primed_poly::single(ap));
  EXPECT_THROW(convert_convention(term(1, 0, 0)), conversion_error);
  EXPECT_THROW(convert_convention(term(0, 0, 1)), conversion_error);
}

TEST(Convention, RoundTripOnEngineOutputs) {
  for (const auto& s : sweep_shapes(11)) {
    const auto p = mellit_superpolynomial(s).poly;
    const int pre = static_cast<int>(s.lower_alpha_degree());
    const auto primed = convert_convention(p, pre);
    EXPECT_EQ(from_convention(primed, pre), p);
    // The primed form is the bare Dyck sum with a' = -T^-1 a^2.
    for (const auto& t : primed.terms()) EXPECT_GE(t.mono[primed::a], 0);
  }
}

TEST(Superpoly, StructuralInvariants) {
  for (const auto& s : sweep_shapes(14)) {
    const auto r = mellit_superpolynomial(s);
    for (const auto& t : r.poly.terms()) EXPECT_GT(t.coeff, 0);
    const auto range = degree_range(r.poly, homfly::alpha);
    ASSERT_TRUE(range.has_value());
    EXPECT_EQ(range->first, s.lower_alpha_degree());
    EXPECT_LE(range->second, s.upper_alpha_degree());
    EXPECT_EQ(range->second == s.upper_alpha_degree(), r.rugged_count > 0);
  }
}

TEST(Superpoly, SymmetryInMAndN) {
  for (const auto& s : sweep_shapes(12)) {
    EXPECT_EQ(mellit_superpolynomial(s).poly, mellit_superpolynomial(torus_shape(s.n(), s.m())).poly)
        << s.m() << "," << s.n();
    const auto c = qt_catalan(s);
    EXPECT_EQ(c, swap_qt(c));
  }
}

}  // namespace
}  // namespace torsuper
