#include "ratblow/swinv.hpp"

namespace ratblow {

namespace {

Rational key_square(const IntersectionLattice& l, const Exponent& k) { return l.pair(k, k); }

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

void SWMap::validate() const {
  if (b_plus < 1 || b_plus % 2 == 0)
    throw Error("b+ must be odd (got " + std::to_string(b_plus) + ")");
  for (const auto& [k, v] : values) {
    if (v == 0) throw Error("zero value stored in SW map");
    if (!is_characteristic(lattice, HClass(lattice, k)))
      throw Error("SW class " + format_class(lattice, k) + " is not characteristic");
    if (simple_type && sw_dim(*this, k) != 0)
      throw Error("SW class " + format_class(lattice, k) + " has nonzero moduli dimension");
  }
}

Rational sw_dim(const SWMap& m, const Exponent& l) {
  if (!is_characteristic(m.lattice, HClass(m.lattice, l)))
    throw Error("class " + format_class(m.lattice, l) + " is not characteristic");
  return (key_square(m.lattice, l) - (3 * m.signature + 2 * m.euler)) / 4;
}

Rational sw_dim(const SWMap& m, const HClass& l) {
  if (l.lattice() != m.lattice) throw Error("class lives on a different lattice");
  return sw_dim(m, l.coeffs());
}

bool sw_simple_type(const SWMap& m) {
  for (const auto& [k, v] : m.values)
    if (sw_dim(m, k) != 0) return false;
  return true;
}

SWMap sw_en_on(const IntersectionLattice& lattice, const HClass& f, long n) {
  if (n < 2) throw Error("n >= 2 required (b+ >= 3)");
  if (f.lattice() != lattice) throw Error("fiber class lives on a different lattice");
  SWMap m{lattice, {}, 12 * n, -8 * n, 2 * n - 1, true};
  for (long r = 0; r <= n - 2; ++r) {
    Integer v = binomial(n - 2, r);
    if (r % 2) v = -v;
    m.values[(Integer(n - 2 - 2 * r) * f).coeffs()] = v;
  }
  m.validate();
  return m;
}

SWMap sw_en(long n) {
  IntersectionLattice l({"f"}, RatMatrix{{Rational(0)}});
  return sw_en_on(l, HClass::basis(l, 0), n);
}

SWMap sw_blowup(const SWMap& m, const std::vector<long>& k_levels) {
  SWMap cur = m;
  for (long kmax : k_levels) {
    if (kmax < 0) throw Error("blowup levels must be non-negative");
    ManifoldSeries shell{ExpKernel(cur.lattice), 0, 0, 3, true};
    IntersectionLattice big = blowup(shell, 1).kernel.lattice();
    const std::size_t e = big.rank() - 1;
    SWMap next{big, {}, cur.euler + 1, cur.signature - 1, cur.b_plus, cur.simple_type};
    for (const auto& [k, v] : cur.values) {
      Rational d = sw_dim(cur, k);
      for (long j = 0; j <= kmax; ++j) {
        if (d - j * (j + 1) < 0) break;
        Exponent key = k;
        key.push_back(0);
        for (int sign : {1, -1}) {
          key[e] = sign * (2 * j + 1);
          auto [it, inserted] = next.values.emplace(key, v);
          if (!inserted) throw Error("SW blowup produced colliding classes");
        }
      }
    }
    next.simple_type = sw_simple_type(next);
    cur = std::move(next);
  }
  cur.validate();
  return cur;
}

SWMap sw_log_transform(const SWMap& m, const HClass& s, long p) {
  if (p < 1) throw Error("log transform order must be at least 1");
  if (s.lattice() != m.lattice) throw Error("fiber class lives on a different lattice");
  if (pairing(s, s) != 0) throw Error("fiber class must have square 0");
  for (const auto& [k, v] : m.values)
    if (m.lattice.pair(k, s.coeffs()) != 0)
      throw Error("SW class " + format_class(m.lattice, k) + " is not orthogonal to the fiber");
  if (p == 1) return m;
  LogRefinement ref = log_refinement(m.lattice, s, p);
  SWMap out{ref.lattice, {}, m.euler, m.signature, m.b_plus, m.simple_type};
  for (const auto& [k, v] : m.values) {
    Exponent base = k;
    base[ref.index] *= ref.divisor;
    for (long j = p - 1; j >= -(p - 1); j -= 2) {
      Exponent key = base;
      key[ref.index] += j * ref.fiber_p[ref.index];
      auto [it, inserted] = out.values.emplace(key, v);
      if (!inserted)
        throw Error("SW log transform collision at " + format_class(ref.lattice, key));
    }
  }
  out.validate();
  return out;
}

SWBlowdownResult sw_taut_blowdown(const SWMap& m, const ConfigCp& c, const std::string& prefix) {
  if (c.ambient() != m.lattice) throw Error("configuration lives on a different lattice");
  const long p = c.p();
  for (const auto& [k, v] : m.values) {
    for (long i = 1; i <= p - 2; ++i)
      if (m.lattice.pair(k, c.sphere(i).coeffs()) != 0)
        throw Error("configuration is not SW-taut");
    if (abs(m.lattice.pair(k, c.sphere(p - 1).coeffs())) > p)
      throw Error("configuration is not SW-taut");
  }
  std::vector<std::pair<Restriction, Integer>> kept;
  std::vector<std::string> warnings;
  for (const auto& [k, v] : m.values) {
    Integer last = to_integer(m.lattice.pair(k, c.sphere(p - 1).coeffs()));
    if (last == 0) continue;  // extension cannot be characteristic
    if (abs(last) != p) {
      warnings.push_back("dropped " + format_class(m.lattice, k) + ": 0 < |k.u_{p-1}| < p");
      continue;
    }
    Restriction r = restrict_class(c, k);
    if (!r.extends)
      throw Error("SW class " + format_class(m.lattice, k) + " has |k.u| = p but does not extend");
    // last = m p with m = +-1, so the dimension shift vanishes
    if (sw_dim_shift(p, to_long(last) / p) != 0 || r.square != key_square(m.lattice, k) + (p - 1))
      throw Error("square rule violated for " + format_class(m.lattice, k));
    kept.emplace_back(r, v);
  }
  std::vector<QClass> ext;
  for (const auto& [r, v] : kept) ext.push_back(r.extended);
  BlownDownLattice bl = blown_down_lattice(c, ext, prefix);
  SWMap out{bl.lattice, {}, m.euler - (p - 1), m.signature + (p - 1), m.b_plus, m.simple_type};
  for (const auto& [r, v] : kept)
    out.values[integer_coordinates(bl.ambient_basis, r.extended.coeffs())] = v;
  out.validate();
  return SWBlowdownResult{std::move(out), std::move(bl.ambient_basis), std::move(warnings)};
}

Rational sw_dim_shift(long p, long m) {
  if (m % 2 == 0) throw Error("dimension shift needs an odd multiple (got " + std::to_string(m) + ")");
  return Rational((m * m - 1) * (p - 1)) / 4;
}

Rational witten_exponent(long euler, long signature) {
  return 2 + Rational(7 * euler + 11 * signature) / 4;
}

Rational printed_witten_exponent(long euler, long signature, long b_plus) {
  return Rational(3 * signature + 2 * euler) - Rational(b_plus - 3) / 2;
}

ExpKernel witten_kernel(const SWMap& m) {
  Rational c = witten_exponent(m.euler, m.signature);
  if (!is_integer(c)) throw Error("non-integral Witten exponent " + c.get_str());
  Rational scale = pow2(to_long(c.get_num()));
  ExpKernel k(m.lattice);
  for (const auto& [key, v] : m.values) k.add_term(key, scale * Rational(v));
  return k;
}

bool witten_check(const ManifoldSeries& d, const SWMap& m) {
  if (d.kernel.lattice() != m.lattice) throw Error("lattice mismatch between Donaldson and SW data");
  if (d.euler != m.euler || d.signature != m.signature || d.b_plus != m.b_plus)
    throw Error("characteristic numbers differ between Donaldson and SW data");
  ExpKernel w = witten_kernel(m);
  if (w.size() != d.kernel.size()) return false;
  return w == d.kernel;
}

}  // namespace ratblow
