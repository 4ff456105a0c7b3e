#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "ratblow/catalog.hpp"
#include "ratblow/transform.hpp"

using namespace ratblow;

namespace {

IntersectionLattice fiber_line() { return IntersectionLattice({"f"}, RatMatrix{{0}}); }

ManifoldSeries elliptic(long n) {
  IntersectionLattice l = fiber_line();
  ExpKernel k = sinh_c(HClass::basis(l, 0)).pow(static_cast<unsigned>(n - 2));
  if (n == 2) k = ExpKernel::constant(l, 1);
  return make_series(k, 12 * n, -8 * n, 2 * n - 1);
}

bool same_series(const ManifoldSeries& a, const ManifoldSeries& b) {
  return a.kernel == b.kernel && a.euler == b.euler && a.signature == b.signature &&
         a.b_plus == b.b_plus;
}

// E(4) on {f, s}: s a section of square -4.
ManifoldSeries e4_with_section() {
  IntersectionLattice l({"f", "s"}, RatMatrix{{0, 1}, {1, -4}});
  ExpKernel k = sinh_c(HClass::basis(l, "f")).pow(2);
  return make_series(k, 48, -32, 7);
}

void expect_characteristic(const ManifoldSeries& m) {
  for (const auto& [e, a] : m.kernel.terms())
    EXPECT_TRUE(is_characteristic(m.kernel.lattice(), HClass(m.kernel.lattice(), e)));
}

}  // namespace

TEST(Series, Validation) {
  IntersectionLattice l = fiber_line();
  EXPECT_THROW(make_series(ExpKernel::constant(l, 1), 24, -16, 2), Error);
  EXPECT_THROW(make_series(ExpKernel::constant(l, 1), 24, -16, 1), Error);
  IntersectionLattice odd({"e"}, RatMatrix{{-1}});
  EXPECT_THROW(make_series(ExpKernel::constant(odd, 1), 24, -16, 3), Error);
}

TEST(Blowup, Examples) {
  ManifoldSeries b = blowup(elliptic(2), 1);
  const IntersectionLattice& l = b.kernel.lattice();
  ASSERT_EQ(l.rank(), 2u);
  EXPECT_EQ(l.gram()(1, 1), -1);
  EXPECT_EQ(b.kernel, cosh_c(HClass::basis(l, 1)));
  EXPECT_EQ(b.euler, 25);
  EXPECT_EQ(b.signature, -17);

  ManifoldSeries b3 = blowup(elliptic(3), 2);
  const IntersectionLattice& l3 = b3.kernel.lattice();
  ASSERT_EQ(l3.rank(), 3u);
  EXPECT_EQ(b3.kernel, sinh_c(HClass::basis(l3, "f")) * cosh_c(HClass::basis(l3, 1)) *
                           cosh_c(HClass::basis(l3, 2)));
  EXPECT_EQ(coeff_sum(b3.kernel), coeff_sum(elliptic(3).kernel));
  EXPECT_EQ(exceptional_names(fiber_line(), 2), (std::vector<std::string>{l3.name(1), l3.name(2)}));
}

TEST(Adjunction, Examples) {
  ManifoldSeries e4 = e4_with_section();
  EXPECT_TRUE(check_adjunction(e4, HClass::basis(e4.kernel.lattice(), "s"), 0).empty());

  ManifoldSeries b = blowup(elliptic(2), 1);
  HClass e = HClass::basis(b.kernel.lattice(), 1);
  EXPECT_EQ(check_adjunction(b, e, 0).size(), 2u);

  IntersectionLattice l({"f", "a"}, RatMatrix{{0, 0}, {0, -2}});
  ManifoldSeries m = make_series(sinh_c(Integer(2) * HClass::basis(l, "f")), 48, -32, 7);
  EXPECT_TRUE(check_adjunction(m, HClass::basis(l, "a"), 0).empty());
}

TEST(Adjunction, SphereRelation) {
  for (long n = 2; n <= 5; ++n) {
    ManifoldSeries b = blowup(elliptic(n), 1);
    HClass e = HClass::basis(b.kernel.lattice(), 1);
    EXPECT_TRUE(check_sphere_relation(b, e)) << n;
    if (n == 2) continue;  // the only violating classes pair with themselves
    ManifoldSeries bad = b;
    auto first = bad.kernel.terms().begin();
    bad.kernel.add_term(first->first, first->second);
    EXPECT_FALSE(check_sphere_relation(bad, e)) << n;
  }
  EXPECT_TRUE(check_sphere_relation(e4_with_section(), HClass::basis(e4_with_section().kernel.lattice(), "s")));
}

TEST(Taut, Checks) {
  ManifoldSeries e4 = e4_with_section();
  EXPECT_TRUE(check_taut(e4, ConfigCp(2, {HClass::basis(e4.kernel.lattice(), "s")})));

  for (long n = 4; n <= 8; ++n) {
    IntersectionLattice h = horikawa_model_lattice(n);
    ManifoldSeries m = make_series(sinh_c(HClass::basis(h, "f")).pow(static_cast<unsigned>(n - 2)),
                                   12 * n, -8 * n, 2 * n - 1);
    EXPECT_TRUE(check_taut(m, horikawa_config(h, n, 1)));
    EXPECT_TRUE(check_taut(m, horikawa_config(h, n, 2)));
  }

  ManifoldSeries b = blowup(elliptic(2), 1);
  const IntersectionLattice& l = b.kernel.lattice();
  HClass u = HClass::basis(l, "f") - Integer(2) * HClass::basis(l, 1);
  EXPECT_TRUE(check_taut(b, ConfigCp(2, {u})));

  // A class meeting the last sphere more than p times is not taut.
  IntersectionLattice big({"f", "s"}, RatMatrix{{0, 1}, {1, -4}});
  ManifoldSeries m = make_series(sinh_c(Integer(4) * HClass::basis(big, "f")), 48, -32, 7);
  EXPECT_FALSE(check_taut(m, ConfigCp(2, {HClass::basis(big, "s")})));
}

TEST(Restrict, SectionOfTheBlowup) {
  ManifoldSeries b = blowup(elliptic(3), 1);
  const IntersectionLattice& l = b.kernel.lattice();
  HClass f = HClass::basis(l, "f"), e = HClass::basis(l, 1);
  ConfigCp c(2, {f - Integer(2) * e});
  for (long k = -3; k <= 3; ++k) {
    HClass kappa = Integer(k) * f + e;
    Restriction r = restrict_class(c, kappa);
    EXPECT_EQ(r.extended, make_rational(2 * k + 1, 2) * to_qclass(f));
    EXPECT_EQ(r.square, pairing(kappa, kappa) + 1);
    EXPECT_TRUE(r.extends);
  }
}

TEST(Restrict, TautSquareRule) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> sq(-6, 6);
  for (long p = 2; p <= 9; ++p)
    for (int sign : {-1, 1}) {
      const std::size_t n = static_cast<std::size_t>(p);
      RatMatrix g(n, n);
      RatMatrix P = plumbing_matrix(p);
      for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) g(i, j) = P(i, j);
      g(n - 1, n - 2) = g(n - 2, n - 1) = sign * p;
      g(n - 1, n - 1) = sq(rng);
      std::vector<std::string> names;
      for (std::size_t i = 0; i + 1 < n; ++i) names.push_back("u" + std::to_string(i + 1));
      names.push_back("k");
      IntersectionLattice l(names, g);
      std::vector<HClass> spheres;
      for (std::size_t i = 0; i + 1 < n; ++i) spheres.push_back(HClass::basis(l, i));
      ConfigCp c(p, spheres);
      HClass k = HClass::basis(l, "k");
      Restriction r = restrict_class(c, k);
      EXPECT_EQ(r.square, g(n - 1, n - 1) + (p - 1)) << p;
      EXPECT_TRUE(r.extends);
      for (const auto& u : spheres) EXPECT_EQ(pairing(r.extended, u), 0);
    }
}

TEST(TautBlowdown, OneSectionOfE4) {
  ManifoldSeries e4 = e4_with_section();
  BlowdownResult r = taut_blowdown(e4, ConfigCp(2, {HClass::basis(e4.kernel.lattice(), "s")}));
  EXPECT_EQ(r.series.euler, 47);
  EXPECT_EQ(r.series.signature, -31);
  EXPECT_EQ(r.series.b_plus, 7);
  ASSERT_EQ(r.series.kernel.size(), 2u);
  for (const auto& [e, a] : r.series.kernel.terms()) {
    EXPECT_EQ(a, make_rational(1, 2));
    EXPECT_EQ(r.series.kernel.lattice().pair(e, e), 1);
  }
  expect_characteristic(r.series);
  long dropped = 0;
  for (const auto& rec : r.class_map)
    if (rec.dropped) {
      ++dropped;
      EXPECT_EQ(rec.last_pairing, 0);
      EXPECT_FALSE(rec.reason.empty());
    }
  EXPECT_EQ(dropped, 1);
}

TEST(TautBlowdown, RejectsNonTaut) {
  IntersectionLattice big({"f", "s"}, RatMatrix{{0, 1}, {1, -4}});
  ManifoldSeries m = make_series(sinh_c(Integer(4) * HClass::basis(big, "f")), 48, -32, 7);
  EXPECT_THROW(taut_blowdown(m, ConfigCp(2, {HClass::basis(big, "s")})), Error);
}

TEST(TautBlowdown, KeepsExactlyTheExtendingExtremeClasses) {
  for (long n = 4; n <= 9; ++n) {
    IntersectionLattice h = horikawa_model_lattice(n);
    ManifoldSeries m = make_series(sinh_c(HClass::basis(h, "f")).pow(static_cast<unsigned>(n - 2)),
                                   12 * n, -8 * n, 2 * n - 1);
    ConfigCp c = horikawa_config(h, n, 1);
    BlowdownResult r = taut_blowdown(m, c);
    const long p = n - 2;
    for (const auto& rec : r.class_map) {
      bool extreme = abs(rec.last_pairing) == p;
      EXPECT_EQ(!rec.dropped, extreme && rec.boundary.value % p == 0);
      if (!rec.dropped) EXPECT_EQ(rec.square, m.kernel.lattice().pair(rec.old_class, rec.old_class) + (p - 1));
    }
    EXPECT_EQ(r.series.kernel.size(), 2u);
    expect_characteristic(r.series);
  }
}

TEST(P2Blowdown, LogOrderTwo) {
  for (long n = 2; n <= 5; ++n) {
    ManifoldSeries b = blowup(elliptic(n), 1);
    const IntersectionLattice& l = b.kernel.lattice();
    BlowdownResult r = p2_blowdown(b, HClass::basis(l, "f") - Integer(2) * HClass::basis(l, 1));
    ManifoldSeries want = log_transform(elliptic(n), HClass::basis(fiber_line(), 0), 2);
    EXPECT_TRUE(same_series(r.series, want)) << n;
  }
}

TEST(P2Blowdown, K3ControlIsZero) {
  BlowdownResult r = k3_control_blowdown();
  EXPECT_TRUE(r.series.kernel.is_zero());
  EXPECT_EQ(r.series.euler, 23);
  EXPECT_EQ(r.series.signature, -15);
}

TEST(P2Blowdown, AgreesWithTautOnTautInputs) {
  std::mt19937 rng(17);
  IntersectionLattice l({"f", "s", "a"}, RatMatrix{{0, 1, 0}, {1, -4, 0}, {0, 0, -2}});
  HClass s = HClass::basis(l, "s");
  std::uniform_int_distribution<int> x(-1, 1), y(-2, 2), c(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    ExpKernel k(l);
    for (int i = 0; i < 4; ++i) k.add_term({2 * x(rng), 0, y(rng)}, c(rng));
    if (k.is_zero()) continue;
    ManifoldSeries m = make_series(k, 48, -32, 7);
    BlowdownResult a = p2_blowdown(m, s);
    BlowdownResult b = taut_blowdown(m, ConfigCp(2, {s}));
    EXPECT_TRUE(same_series(a.series, b.series)) << format_kernel(k);
  }
}

TEST(LogTransform, Examples) {
  ManifoldSeries e2 = elliptic(2);
  HClass f = HClass::basis(fiber_line(), 0);
  EXPECT_TRUE(same_series(log_transform(e2, f, 1), e2));

  ManifoldSeries t = log_transform(e2, f, 3);
  const IntersectionLattice& l = t.kernel.lattice();
  EXPECT_EQ(l.names(), (std::vector<std::string>{"f_3"}));
  ExpKernel want(l);
  for (long m : {2, 0, -2}) want.add_term({m}, 1);
  EXPECT_EQ(t.kernel, want);
  EXPECT_EQ(t.euler, 24);

  ManifoldSeries t3 = log_transform(elliptic(3), f, 2);
  const IntersectionLattice& l2 = t3.kernel.lattice();
  HClass u = HClass::basis(l2, 0);
  EXPECT_EQ(t3.kernel, exact_div(sinh_c(Integer(2) * u).pow(2), sinh_c(u)));

  EXPECT_THROW(log_transform(e2, f, 0), Error);
  ManifoldSeries e4 = e4_with_section();
  EXPECT_THROW(log_transform(e4, HClass::basis(e4.kernel.lattice(), "s"), 2), Error);
}

TEST(LogTransform, Multiplicativity) {
  HClass f = HClass::basis(fiber_line(), 0);
  for (long p = 2; p <= 7; ++p)
    for (long q = 2; q <= 7; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ManifoldSeries a = log_transform(elliptic(3), f, p);
      HClass fp = HClass::basis(a.kernel.lattice(), 0);
      ManifoldSeries b = log_transform(a, fp, q);
      ManifoldSeries c = log_transform(elliptic(3), f, p * q);
      EXPECT_EQ(b.kernel.terms(), c.kernel.terms()) << p << " " << q;
      EXPECT_EQ(b.kernel.lattice().gram(), c.kernel.lattice().gram());
    }
}

TEST(FormalLog, Coefficients) {
  auto c2 = formal_log_coefficients(2);
  EXPECT_EQ(c2, (std::vector<std::pair<long, Rational>>{{1, 1}, {-1, 1}}));
  auto c5 = formal_log_coefficients(5);
  ASSERT_EQ(c5.size(), 5u);
  long m = 4;
  for (const auto& [e, c] : c5) {
    EXPECT_EQ(e, m);
    EXPECT_EQ(c, 1);
    m -= 2;
  }
  for (long p = 1; p <= 12; ++p) {
    Rational s = 0;
    for (const auto& [e, c] : formal_log_coefficients(p)) s += c;
    EXPECT_EQ(s, p);
  }
}

TEST(PropJ, Identity) {
  for (long p = 2; p <= 12; ++p) {
    EXPECT_TRUE(verify_pa_identity(p));
    std::vector<long> ones(static_cast<std::size_t>(p - 1), 1);
    auto x = prop_j_solution(p, ones);
    EXPECT_EQ(x.back(), make_rational(p - 1, p));
  }
  EXPECT_EQ(prop_j_matrix(2), (RatMatrix{{-2}}));
}

TEST(Nodal, PipelineEqualsLogTransform) {
  HClass f = HClass::basis(fiber_line(), 0);
  for (long n = 2; n <= 4; ++n)
    for (long p = 2; p <= 6; ++p) {
      BlowdownResult r = nodal_log_pipeline(elliptic(n), f, p);
      EXPECT_TRUE(same_series(r.series, log_transform(elliptic(n), f, p))) << n << " " << p;
      for (const auto& rec : r.class_map)
        if (!rec.dropped) EXPECT_TRUE(rec.boundary.value % p == 0);
    }
  BlowdownResult e22 = nodal_log_pipeline(elliptic(2), f, 2);
  EXPECT_EQ(e22.series.kernel, Rational(2) * cosh_c(HClass::basis(e22.series.kernel.lattice(), 0)));
}

TEST(Nodal, PipelineComposes) {
  HClass f = HClass::basis(fiber_line(), 0);
  ManifoldSeries a = nodal_log_pipeline(elliptic(3), f, 2).series;
  ManifoldSeries b = nodal_log_pipeline(a, HClass::basis(a.kernel.lattice(), 0), 3).series;
  ManifoldSeries c = nodal_log_pipeline(elliptic(3), f, 6).series;
  EXPECT_EQ(b.kernel.terms(), c.kernel.terms());
}

TEST(HpSum, ScalesByP) {
  ManifoldSeries e2 = elliptic(2);
  BlowdownResult r = connected_sum_hp(e2, 3);
  EXPECT_EQ(r.series.kernel, ExpKernel::constant(e2.kernel.lattice(), 3));
  BlowdownResult r3 = connected_sum_hp(elliptic(3), 2);
  EXPECT_EQ(r3.series.kernel, Rational(2) * elliptic(3).kernel);
  EXPECT_EQ(coeff_sum(connected_sum_hp(elliptic(4), 5).series.kernel), 5 * coeff_sum(elliptic(4).kernel));
  EXPECT_EQ(r3.series.euler, 36);
  EXPECT_EQ(r3.series.signature, -24);
}

TEST(CoefficientMatching, OddP) {
  for (long p : {3L, 5L, 7L, 9L}) {
    auto [a, b] = coefficient_matching_expansions(p);
    EXPECT_EQ(a, b) << p;
    EXPECT_EQ(a.lattice().name(0), "f_" + std::to_string(2 * p));
  }
}

TEST(BlownDown, NamesAndCarriedClasses) {
  EXPECT_EQ(refined_name("f", 3), "f_3");
  EXPECT_EQ(refined_name("f_2", 3), "f_6");
  IntersectionLattice w = w_model_lattice();
  ManifoldSeries m = make_series(sinh_c(HClass::basis(w, "f")).pow(2), 48, -32, 7);
  BlowdownResult r = taut_blowdown(m, ConfigCp(2, {HClass::basis(w, "s1")}));
  HClass s2 = carry_class(r, HClass::basis(w, "s2"));
  EXPECT_EQ(pairing(s2, s2), -4);
  EXPECT_THROW(carry_class(r, HClass::basis(w, "f")), Error);
}

TEST(RestrictToLine, Projection) {
  IntersectionLattice l({"a", "b"}, RatMatrix{{2, 1}, {1, 2}});
  ExpKernel k(l);
  k.add_term({2, 2}, 3);
  k.add_term({-2, -2}, 1);
  k.add_term({0, 0}, 5);
  ExpKernel r = restrict_to_line(k, "k");
  ASSERT_EQ(r.lattice().rank(), 1u);
  EXPECT_EQ(r.lattice().gram()(0, 0), 6);
  EXPECT_EQ(r.coeff({2}), 3);
  EXPECT_EQ(r.coeff({-2}), 1);
  EXPECT_EQ(r.coeff({0}), 5);
  k.add_term({1, 0}, 1);
  EXPECT_THROW(restrict_to_line(k, "k"), Error);
}
