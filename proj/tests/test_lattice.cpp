#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ratblow/lattice.hpp"

using namespace ratblow;

namespace {

IntersectionLattice diag(std::vector<std::string> names, std::vector<long> d) {
  RatMatrix g(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) g(i, i) = d[i];
  return IntersectionLattice(std::move(names), g);
}

std::vector<long> unit(std::size_t n, std::size_t i) {
  std::vector<long> v(n);
  v[i] = 1;
  return v;
}

}  // namespace

TEST(Lattice, RejectsBadGram) {
  EXPECT_THROW(IntersectionLattice({"a", "b"}, RatMatrix{{0, 1}, {2, 0}}), Error);
  EXPECT_THROW(IntersectionLattice({"a", "a"}, RatMatrix{{0, 0}, {0, 0}}), Error);
  EXPECT_THROW(IntersectionLattice({"a"}, RatMatrix{{0, 0}, {0, 0}}), Error);
}

TEST(Lattice, Pairing) {
  IntersectionLattice l = diag({"g"}, {-4});
  HClass g = HClass::basis(l, 0);
  EXPECT_EQ(pairing(g, g), -4);

  IntersectionLattice fe = diag({"f", "e"}, {0, -1});
  HClass f = HClass::basis(fe, "f"), e = HClass::basis(fe, "e");
  HClass sigma = f - Integer(2) * e;
  EXPECT_EQ(pairing(sigma, sigma), -4);
  EXPECT_EQ(pairing(f, e), 0);
}

TEST(Lattice, CrossLatticeIsAnError) {
  IntersectionLattice a = diag({"f"}, {0});
  IntersectionLattice b = diag({"f"}, {-1});
  EXPECT_THROW(pairing(HClass::basis(a, 0), HClass::basis(b, 0)), Error);
  EXPECT_THROW(HClass::basis(a, 0) + HClass::basis(b, 0), Error);
  // Equal data means equal lattices.
  EXPECT_NO_THROW(pairing(HClass::basis(a, 0), HClass::basis(diag({"f"}, {0}), 0)));
}

TEST(Lattice, Characteristic) {
  IntersectionLattice l4 = diag({"g"}, {-4});
  EXPECT_TRUE(is_characteristic(l4, Integer(2) * HClass::basis(l4, 0)));
  EXPECT_TRUE(is_characteristic(l4, HClass::basis(l4, 0)));
  IntersectionLattice l1 = diag({"g"}, {-1});
  EXPECT_FALSE(is_characteristic(l1, HClass::zero(l1)));
  IntersectionLattice f = diag({"f"}, {0});
  for (long k = -3; k <= 3; ++k) EXPECT_TRUE(is_characteristic(f, Integer(k) * HClass::basis(f, 0)));
}

TEST(Lattice, FormatClass) {
  IntersectionLattice l = diag({"f_3", "e1"}, {0, -1});
  EXPECT_EQ(format_class(l, std::vector<Integer>{2, -1}), "2*f_3-e1");
  EXPECT_EQ(format_class(l, std::vector<Integer>{0, 0}), "0");
}

TEST(Plumbing, SmallCases) {
  EXPECT_EQ(plumbing_matrix(2), (RatMatrix{{-4}}));
  EXPECT_EQ(plumbing_matrix(3), (RatMatrix{{-2, 1}, {1, -5}}));
  EXPECT_EQ(plumbing_matrix(4), (RatMatrix{{-2, 1, 0}, {1, -2, 1}, {0, 1, -6}}));
  EXPECT_EQ(plumbing_inverse(2)(0, 0), make_rational(-1, 4));
  RatMatrix i3 = plumbing_inverse(3);
  EXPECT_EQ(i3, (RatMatrix{{make_rational(-5, 9), make_rational(-1, 9)}, {make_rational(-1, 9), make_rational(-2, 9)}}));
  EXPECT_EQ(plumbing_inverse(5)(3, 3), make_rational(-4, 25));
  EXPECT_THROW(plumbing_matrix(1), Error);
  EXPECT_THROW(plumbing_inverse(1), Error);
}

TEST(Plumbing, InverseForAllP) {
  for (long p = 2; p <= 50; ++p) {
    RatMatrix inv = plumbing_inverse(p);
    EXPECT_TRUE(inv.is_symmetric());
    EXPECT_EQ(plumbing_matrix(p) * inv, RatMatrix::identity(static_cast<std::size_t>(p - 1))) << p;
  }
  for (long p = 2; p <= 15; ++p) {
    auto want = oracle::gauss_inverse(oracle::chain_matrix(p));
    RatMatrix inv = plumbing_inverse(p);
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(p); ++i)
      for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(p); ++j) EXPECT_EQ(inv(i, j), want[i][j]);
  }
}

TEST(Plumbing, TelescopedSpheres) {
  for (long p = 2; p <= 12; ++p) {
    RatMatrix P = plumbing_matrix(p);
    const std::size_t n = static_cast<std::size_t>(p - 1);
    // v_i = u_{p-1} + ... + u_i
    auto v = [&](std::size_t i) {
      std::vector<Rational> c(n);
      for (std::size_t j = i; j < n; ++j) c[j] = 1;
      return c;
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto a = v(i), b = P.apply(v(j));
        Rational s = 0;
        for (std::size_t k = 0; k < n; ++k) s += a[k] * b[k];
        EXPECT_EQ(s, i == j ? -(p + 2) : -(p + 1)) << p << " " << i << " " << j;
      }
  }
}

TEST(Residue, Arithmetic) {
  Residue a(7, 4), b(-1, 4);
  EXPECT_EQ(a.value, 3);
  EXPECT_EQ(b.value, 3);
  EXPECT_EQ((a + b).value, 2);
  EXPECT_EQ((-a).value, 1);
  EXPECT_THROW(a + Residue(1, 9), Error);
  EXPECT_THROW(Residue(1, 0), Error);
}

TEST(RelClass, BasisConvert) {
  RelClassCp d(5, {1, 0, 0, 0});
  EXPECT_EQ(basis_convert(d, RelBasis::Gamma).coords, (std::vector<long>{1, 0, 0, 0}));
  for (long t = 0; t <= 4; ++t) {
    RelClassCp e(3, {t, t + 1});
    EXPECT_EQ(basis_convert(e, RelBasis::Gamma).coords, (std::vector<long>{-1, t + 1}));
  }
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> coord(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    long p = 2 + trial % 8;
    std::vector<long> c(static_cast<std::size_t>(p - 1));
    for (auto& x : c) x = coord(rng);
    RelClassCp g(p, c, RelBasis::Gamma);
    RelClassCp back = basis_convert(basis_convert(g, RelBasis::Delta), RelBasis::Gamma);
    EXPECT_EQ(back.coords, c);
    EXPECT_EQ(boundary(g), boundary(basis_convert(g, RelBasis::Delta)));
    EXPECT_EQ(rel_pairing(g, g), rel_pairing(basis_convert(g, RelBasis::Delta), g));
  }
}

TEST(RelClass, Pairings) {
  EXPECT_EQ(rel_pairing(RelClassCp(3, {1, 0}), RelClassCp(3, {0, 1})), make_rational(4, 9));
  EXPECT_EQ(rel_pairing(RelClassCp(3, {1, 0}), RelClassCp(3, {1, 0})), make_rational(-5, 9));
  RelClassCp g1(2, {1}, RelBasis::Gamma);
  EXPECT_EQ(rel_pairing(g1, g1), make_rational(-1, 4));
  EXPECT_THROW(rel_pairing(RelClassCp(2, {1}), RelClassCp(3, {1, 0})), Error);
}

TEST(RelClass, DeltaGramMatchesClosedForms) {
  for (long p = 2; p <= 20; ++p) {
    const std::size_t n = static_cast<std::size_t>(p - 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        EXPECT_EQ(rel_pairing(RelClassCp(p, unit(n, i)), RelClassCp(p, unit(n, j))),
                  oracle::delta_pairing(p, i, j));
  }
}

TEST(RelClass, GammaDualToSpheres) {
  for (long p = 2; p <= 20; ++p) {
    RatMatrix P = plumbing_matrix(p);
    const std::size_t n = static_cast<std::size_t>(p - 1);
    for (std::size_t l = 0; l < n; ++l) {
      std::vector<long> col(n);
      for (std::size_t i = 0; i < n; ++i) col[i] = to_long(to_integer(P(i, l)));
      RelClassCp u(p, col, RelBasis::Gamma);
      for (std::size_t k = 0; k < n; ++k)
        EXPECT_EQ(rel_pairing(RelClassCp(p, unit(n, k), RelBasis::Gamma), u), k == l ? 1 : 0);
    }
  }
}

TEST(RelClass, Boundary) {
  EXPECT_EQ(boundary(RelClassCp::canonical(3, 1, 1)).value, 3);
  EXPECT_EQ(boundary(RelClassCp(5, {0, 0, 1, 0}, RelBasis::Gamma)).value, 3);
  EXPECT_EQ(boundary(RelClassCp(4, {0, 0, 0})).value, 0);
  EXPECT_EQ(boundary(RelClassCp(3, {5, 5})).modulus, 9);
  EXPECT_EQ(boundary_residue_class(Residue(3, 4)), 1);
  EXPECT_EQ(boundary_residue_class(Residue(4, 9)), 4);
  EXPECT_EQ(boundary_residue_class(Residue(0, 9)), 0);
  for (long p = 2; p <= 9; ++p)
    for (long t = 0; t <= 4; ++t)
      for (long b = 1; b < p; ++b)
        EXPECT_EQ(boundary(RelClassCp::canonical(p, t, b)).value, ((p - 1) * t + b) % (p * p));
}

TEST(RelClass, CanonicalShapeAndValidation) {
  EXPECT_EQ(RelClassCp::canonical(4, 2, 1).coords, (std::vector<long>{2, 2, 3}));
  EXPECT_EQ(RelClassCp::canonical(4, 0, 3).coords, (std::vector<long>{1, 1, 1}));
  EXPECT_THROW(RelClassCp::canonical(4, 0, 4), Error);
  EXPECT_THROW(RelClassCp::canonical(4, -1, 1), Error);
  EXPECT_THROW(RelClassCp(3, {1}), Error);
}

TEST(Config, ChecksGram) {
  IntersectionLattice l = diag({"a", "b"}, {-2, -5});
  EXPECT_THROW(ConfigCp(3, {HClass::basis(l, 0), HClass::basis(l, 1)}), Error);
  IntersectionLattice ok({"a", "b"}, plumbing_matrix(3));
  ConfigCp c(3, {HClass::basis(ok, 0), HClass::basis(ok, 1)});
  EXPECT_EQ(c.sphere(2), HClass::basis(ok, 1));
  EXPECT_THROW(ConfigCp(3, {HClass::basis(ok, 0)}), Error);
}
