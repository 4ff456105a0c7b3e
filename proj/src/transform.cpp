#include "ratblow/transform.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ratblow {

void ManifoldSeries::validate() const {
  if (b_plus < 3 || b_plus % 2 == 0)
    throw Error("b+ must be odd and at least 3 (got " + std::to_string(b_plus) + ")");
  const IntersectionLattice& L = kernel.lattice();
  for (const auto& [k, c] : kernel.terms())
    if (!is_characteristic(L, HClass(L, k)))
      throw Error("basic class " + format_class(L, k) + " is not characteristic");
}

ManifoldSeries make_series(ExpKernel kernel, long euler, long signature, long b_plus) {
  ManifoldSeries m{std::move(kernel), euler, signature, b_plus, true};
  m.validate();
  return m;
}

namespace {

std::vector<Rational> to_rational_vec(const std::vector<Integer>& v) {
  return std::vector<Rational>(v.begin(), v.end());
}

Integer pair_int(const IntersectionLattice& L, const Exponent& a, const HClass& b) {
  return to_integer(L.pair(a, b.coeffs()));
}

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

void require_same(const IntersectionLattice& a, const IntersectionLattice& b, const char* what) {
  if (a != b) throw Error(std::string(what) + " lives on a different lattice");
}

}  // namespace

std::string refined_name(const std::string& old, long divisor) {
  if (divisor == 1) return old;
  std::string root = old;
  long k = 1;
  auto pos = old.rfind('_');
  if (pos != std::string::npos && pos + 1 < old.size() &&
      std::all_of(old.begin() + static_cast<long>(pos) + 1, old.end(),
                  [](char ch) { return ch >= '0' && ch <= '9'; })) {
    root = old.substr(0, pos);
    k = std::stol(old.substr(pos + 1));
  }
  return root + "_" + std::to_string(k * divisor);
}

std::vector<std::string> exceptional_names(const IntersectionLattice& l, long k) {
  std::vector<std::string> out;
  std::set<std::string> used(l.names().begin(), l.names().end());
  for (long i = 1; static_cast<long>(out.size()) < k; ++i) {
    std::string n = "e" + std::to_string(i);
    if (used.count(n)) continue;
    out.push_back(n);
    used.insert(n);
  }
  return out;
}

HClass extend_class(const HClass& c, const IntersectionLattice& larger) {
  std::vector<Integer> v = c.coeffs();
  if (v.size() > larger.rank()) throw Error("cannot extend a class to a smaller lattice");
  v.resize(larger.rank());
  return HClass(larger, std::move(v));
}

ExpKernel extend_kernel(const ExpKernel& k, const IntersectionLattice& larger) {
  ExpKernel r(larger);
  for (const auto& [e, c] : k.terms()) {
    Exponent v = e;
    v.resize(larger.rank());
    r.add_term(v, c);
  }
  return r;
}

ManifoldSeries blowup(const ManifoldSeries& m, long k) {
  if (k < 0) throw Error("blowup count must be non-negative");
  if (k == 0) return m;
  const IntersectionLattice& L = m.kernel.lattice();
  std::vector<std::string> names = L.names();
  for (auto& n : exceptional_names(L, k)) names.push_back(n);
  const std::size_t r = L.rank(), n = r + static_cast<std::size_t>(k);
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) g(i, j) = L.gram()(i, j);
  for (std::size_t i = r; i < n; ++i) g(i, i) = -1;
  IntersectionLattice big(std::move(names), std::move(g));
  ExpKernel kernel = extend_kernel(m.kernel, big);
  for (std::size_t i = r; i < n; ++i) kernel = kernel * cosh_c(HClass::basis(big, i));
  ManifoldSeries out{std::move(kernel), m.euler + k, m.signature - k, m.b_plus, m.simple_type};
  return out;
}

std::vector<Exponent> check_adjunction(const ManifoldSeries& m, const HClass& u,
                                       long positive_double_points) {
  const IntersectionLattice& L = m.kernel.lattice();
  require_same(L, u.lattice(), "sphere class");
  if (u.is_zero()) throw Error("adjunction check needs a nontrivial class");
  const Rational uu = L.pair(u.coeffs(), u.coeffs());
  std::vector<Exponent> bad;
  for (const auto& [k, c] : m.kernel.terms()) {
    Rational lhs = uu + abs(L.pair(k, u.coeffs()));
    if (2 * positive_double_points - 2 < lhs) bad.push_back(k);
  }
  return bad;
}

bool check_sphere_relation(const ManifoldSeries& m, const HClass& u) {
  const IntersectionLattice& L = m.kernel.lattice();
  auto bad = check_adjunction(m, u, 0);
  const Rational uu = L.pair(u.coeffs(), u.coeffs());
  for (const auto& k : bad) {
    Rational ku = L.pair(k, u.coeffs());
    if (ku != uu && ku != -uu)
      throw Error("violating class " + format_class(L, k) + " does not satisfy k.u = +-u^2");
  }
  // sign (-1)^{(1+b+)/2}
  const Rational sign = ((m.b_plus + 1) / 2) % 2 == 0 ? 1 : -1;
  ExpKernel rel(L);
  for (const auto& k : bad) {
    if (L.pair(k, u.coeffs()) != -uu) continue;
    Rational a = m.kernel.coeff(k);
    Exponent plus = k, minus = k;
    for (std::size_t i = 0; i < plus.size(); ++i) {
      plus[i] += u[i];
      minus[i] = -plus[i];
    }
    rel.add_term(plus, a);
    rel.add_term(minus, -sign * a);
  }
  return rel.is_zero();
}

bool check_taut(const ManifoldSeries& m, const ConfigCp& c) {
  const IntersectionLattice& L = m.kernel.lattice();
  require_same(L, c.ambient(), "configuration");
  for (const auto& [k, a] : m.kernel.terms()) {
    for (long i = 1; i <= c.p() - 2; ++i)
      if (L.pair(k, c.sphere(i).coeffs()) != 0) return false;
    if (abs(L.pair(k, c.sphere(c.p() - 1).coeffs())) > c.p()) return false;
  }
  return true;
}

Restriction restrict_class(const ConfigCp& c, const Exponent& k) {
  const IntersectionLattice& L = c.ambient();
  const long p = c.p();
  const std::size_t n = static_cast<std::size_t>(p - 1);
  std::vector<Rational> rhs(n);
  long bnd = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Rational v = L.pair(k, c.spheres()[j].coeffs());
    rhs[j] = -v;
    bnd += static_cast<long>(j + 1) * to_long(to_integer(v)) % (p * p);
  }
  std::vector<Rational> x = plumbing_inverse(p).apply(rhs);
  std::vector<Rational> ext = to_rational_vec(k);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < ext.size(); ++i) ext[i] += x[j] * c.spheres()[j][i];
  QClass e(L, std::move(ext));
  Residue b(bnd, p * p);
  return Restriction{e, pairing(e, e), b, b.value % p == 0};
}

Restriction restrict_class(const ConfigCp& c, const HClass& k) {
  require_same(c.ambient(), k.lattice(), "class");
  return restrict_class(c, k.coeffs());
}

BlownDownLattice blown_down_lattice(const ConfigCp& c, const std::vector<QClass>& extended,
                                    const std::string& prefix) {
  const IntersectionLattice& L = c.ambient();
  const std::size_t r = L.rank(), n = c.spheres().size();
  RatMatrix m(r, n);
  Integer den = 1;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = L.pair(HClass::basis(L, i).coeffs(), c.spheres()[j].coeffs());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
  IntMatrix mi(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) mi(i, j) = to_integer(m(i, j) * den);
  IntMatrix kern = integer_left_kernel(mi);

  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < kern.rows(); ++i) rows.push_back(to_rational_vec(kern.row(i)));
  for (const auto& e : extended) {
    require_same(L, e.lattice(), "extended class");
    rows.push_back(e.coeffs());
  }
  if (rows.empty()) throw Error("blown-down lattice would have rank 0");
  RatMatrix basis = rational_span_basis(rows);
  if (basis.rows() == 0) throw Error("blown-down lattice would have rank 0");

  const std::size_t k = basis.rows();
  RatMatrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = L.pair(basis.row(i), basis.row(j));

  std::vector<std::string> names(k);
  std::set<std::string> used;
  std::vector<std::size_t> unnamed;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> v = basis.row(i);
    long idx = -1;
    bool single = true;
    for (std::size_t j = 0; j < r; ++j) {
      if (v[j] == 0) continue;
      if (idx >= 0) single = false;
      idx = static_cast<long>(j);
    }
    if (single && idx >= 0) {
      const Rational& a = v[static_cast<std::size_t>(idx)];
      const std::string& old = L.name(static_cast<std::size_t>(idx));
      if (a == 1) {
        names[i] = old;
      } else if (a.get_num() == 1) {
        names[i] = refined_name(old, to_long(a.get_den()));
      }
    }
    if (names[i].empty() || used.count(names[i])) {
      names[i].clear();
      unnamed.push_back(i);
    } else {
      used.insert(names[i]);
    }
  }
  long counter = 1;
  for (std::size_t i : unnamed) {
    std::string candidate;
    do {
      candidate = counter == 1 ? prefix : prefix + std::to_string(counter);
      ++counter;
    } while (used.count(candidate));
    names[i] = candidate;
    used.insert(candidate);
  }
  return BlownDownLattice{IntersectionLattice(std::move(names), std::move(gram)), std::move(basis)};
}

HClass carry_class(const BlowdownResult& r, const HClass& c) {
  if (!r.ambient || c.lattice() != *r.ambient)
    throw Error("class does not live on the ambient lattice of this blowdown");
  return HClass(r.series.kernel.lattice(),
                integer_coordinates(r.ambient_basis, to_rational_vec(c.coeffs())));
}

namespace {

// Assembles the blown-down series from per-term extensions and coefficients.
struct KeptTerm {
  Exponent old_class;
  Restriction ext;
  Rational coeff;
};

BlowdownResult assemble(const ManifoldSeries& m, const ConfigCp& c, std::vector<KeptTerm> kept,
                        std::vector<ClassRecord> records, std::vector<std::string> warnings,
                        const std::string& prefix) {
  std::vector<QClass> ext;
  for (const auto& t : kept) ext.push_back(t.ext.extended);
  BlownDownLattice bl = blown_down_lattice(c, ext, prefix);
  ExpKernel kernel(bl.lattice);
  for (const auto& t : kept) {
    Exponent coords = integer_coordinates(bl.ambient_basis, t.ext.extended.coeffs());
    kernel.add_term(coords, t.coeff);
    for (auto& rec : records)
      if (!rec.dropped && rec.old_class == t.old_class) rec.new_class = coords;
  }
  const long p = c.p();
  ManifoldSeries series{std::move(kernel), m.euler - (p - 1), m.signature + (p - 1), m.b_plus,
                        m.simple_type};
  series.validate();
  return BlowdownResult{std::move(series), p, std::move(records), std::move(bl.ambient_basis),
                        c.ambient(), std::move(warnings)};
}

ClassRecord make_record(const Exponent& k, const Restriction& r, const Integer& last) {
  ClassRecord rec{k, r.extended, std::nullopt, r.square, r.boundary, last, false, ""};
  return rec;
}

}  // namespace

BlowdownResult taut_blowdown(const ManifoldSeries& m, const ConfigCp& c, const std::string& prefix) {
  if (!check_taut(m, c)) throw Error("configuration is not tautly embedded");
  const IntersectionLattice& L = m.kernel.lattice();
  const long p = c.p();
  const Rational scale = pow2(p - 1);
  std::vector<KeptTerm> kept;
  std::vector<ClassRecord> records;
  std::vector<std::string> warnings;
  for (const auto& [k, a] : m.kernel.terms()) {
    Restriction r = restrict_class(c, k);
    Integer last = pair_int(L, k, c.sphere(p - 1));
    ClassRecord rec = make_record(k, r, last);
    if (abs(last) == p) {
      if (!r.extends) throw Error("taut class " + format_class(L, k) + " does not extend");
      kept.push_back(KeptTerm{k, r, scale * a});
    } else {
      rec.dropped = true;
      if (last == 0) {
        rec.reason = "k.u_{p-1} = 0: extension is not characteristic";
      } else if (!r.extends) {
        rec.reason = "boundary not in pZ_{p^2}: class does not extend";
        warnings.push_back("dropped " + format_class(L, k) + ": 0 < |k.u_{p-1}| < p, no extension");
      } else {
        rec.reason = "0 < |k.u_{p-1}| < p";
        warnings.push_back("dropped " + format_class(L, k) + ": 0 < |k.u_{p-1}| < p");
      }
    }
    records.push_back(std::move(rec));
  }
  return assemble(m, c, std::move(kept), std::move(records), std::move(warnings), prefix);
}

BlowdownResult p2_blowdown(const ManifoldSeries& m, const HClass& sigma, const std::string& prefix) {
  const IntersectionLattice& L = m.kernel.lattice();
  require_same(L, sigma.lattice(), "sphere class");
  if (pairing(sigma, sigma) != -4) throw Error("p = 2 blowdown needs a class of square -4");
  ExpKernel diff = m.kernel - twist(m.kernel, sigma);
  ConfigCp c(2, {sigma});
  std::vector<KeptTerm> kept;
  std::vector<ClassRecord> records;
  for (const auto& [k, a] : m.kernel.terms()) {
    Restriction r = restrict_class(c, k);
    ClassRecord rec = make_record(k, r, pair_int(L, k, sigma));
    Rational b = diff.coeff(k);
    if (b == 0) {
      rec.dropped = true;
      rec.reason = "cancelled by the twist";
    } else {
      if (!r.extends) throw Error("class " + format_class(L, k) + " does not extend");
      kept.push_back(KeptTerm{k, r, b});
    }
    records.push_back(std::move(rec));
  }
  return assemble(m, c, std::move(kept), std::move(records), {}, prefix);
}

LogRefinement log_refinement(const IntersectionLattice& l, const HClass& s, long p) {
  require_same(l, s.lattice(), "fiber class");
  if (p < 1) throw Error("log transform order must be at least 1");
  long idx = -1;
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
    if (s[i] == 0) continue;
    if (idx >= 0) throw Error("log transform needs a multiple of a basis vector");
    idx = static_cast<long>(i);
  }
  if (idx < 0) throw Error("log transform needs a nonzero fiber class");
  const auto ui = static_cast<std::size_t>(idx);
  const long mult = to_long(abs(s[ui]));
  const long d = p / std::gcd(mult, p);
  IntersectionLattice refined =
      d == 1 ? l : refine_lattice(l, ui, d, refined_name(l.name(ui), d));
  HClass fiber = refine_class(s, refined, ui, d);
  std::vector<Integer> sp(refined.rank());
  sp[ui] = fiber[ui] / p;
  return LogRefinement{refined, ui, d, fiber, HClass(refined, sp)};
}

HClass carry_class(const LogRefinement& r, const HClass& c) {
  return refine_class(c, r.lattice, r.index, r.divisor);
}

namespace {
void check_fiber(const ManifoldSeries& m, const HClass& s) {
  const IntersectionLattice& L = m.kernel.lattice();
  require_same(L, s.lattice(), "fiber class");
  if (pairing(s, s) != 0) throw Error("fiber class must have square 0");
  for (const auto& [k, a] : m.kernel.terms())
    if (L.pair(k, s.coeffs()) != 0)
      throw Error("basic class " + format_class(L, k) + " is not orthogonal to the fiber");
}
}  // namespace

ManifoldSeries log_transform(const ManifoldSeries& m, const HClass& s, long p) {
  if (p < 1) throw Error("log transform order must be at least 1");
  check_fiber(m, s);
  if (p == 1) return m;
  LogRefinement ref = log_refinement(m.kernel.lattice(), s, p);
  ExpKernel k(ref.lattice);
  for (const auto& [e, c] : m.kernel.terms()) {
    Exponent v = e;
    v[ref.index] *= ref.divisor;
    k.add_term(v, c);
  }
  ExpKernel factor(ref.lattice);
  for (long j = 0; j < p; ++j) {
    Exponent v(ref.lattice.rank());
    v[ref.index] = ref.fiber_p[ref.index] * (p - 1 - 2 * j);
    factor.add_term(v, 1);
  }
  ManifoldSeries out{k * factor, m.euler, m.signature, m.b_plus, m.simple_type};
  out.validate();
  return out;
}

std::vector<std::pair<long, Rational>> formal_log_coefficients(long p) {
  if (p < 1) throw Error("log transform order must be at least 1");
  IntersectionLattice line({"u"}, RatMatrix{{Rational(0)}});
  HClass u = HClass::basis(line, 0);
  ExpKernel q = exact_div(sinh_c(Integer(p) * u), sinh_c(u));
  std::vector<std::pair<long, Rational>> out;
  for (auto it = q.terms().rbegin(); it != q.terms().rend(); ++it)
    out.emplace_back(to_long(it->first[0]), it->second);
  return out;
}

RatMatrix prop_j_matrix(long p) {
  if (p < 2) throw Error("p must be at least 2");
  const auto n = static_cast<std::size_t>(p - 1);
  RatMatrix a(n, n);
  for (long i = 1; i <= p - 2; ++i) {
    a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(p - (i + 1) - 1)) += 1;
    a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(p - i - 1)) -= 1;
  }
  for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = j == 0 ? -2 : -1;
  return a;
}

bool verify_pa_identity(long p) {
  RatMatrix P = plumbing_matrix(p), A = prop_j_matrix(p);
  RatMatrix At = A.transpose();
  const auto n = static_cast<std::size_t>(p - 1);
  return P * inverse(At) == -A && At * plumbing_inverse(p) * A == -RatMatrix::identity(n);
}

std::vector<Rational> prop_j_solution(long p, const std::vector<long>& eps) {
  if (eps.size() != static_cast<std::size_t>(p - 1)) throw Error("sign vector has the wrong length");
  std::vector<Rational> e(eps.begin(), eps.end());
  return plumbing_inverse(p).apply(prop_j_matrix(p).apply(e));
}

ConfigCp nodal_config(const IntersectionLattice& blown_up, const std::optional<HClass>& s, long p) {
  if (p < 2) throw Error("p must be at least 2");
  const std::size_t r = blown_up.rank();
  if (r < static_cast<std::size_t>(p - 1)) throw Error("lattice has too few exceptional classes");
  const std::size_t first = r - static_cast<std::size_t>(p - 1);
  auto e = [&](long i) { return HClass::basis(blown_up, first + static_cast<std::size_t>(i - 1)); };
  std::vector<HClass> spheres;
  for (long i = 1; i <= p - 2; ++i) spheres.push_back(e(p - (i + 1)) - e(p - i));
  HClass last = s ? *s : HClass::zero(blown_up);
  require_same(blown_up, last.lattice(), "fiber class");
  last = last - Integer(2) * e(1);
  for (long i = 2; i <= p - 1; ++i) last = last - e(i);
  spheres.push_back(last);
  return ConfigCp(p, std::move(spheres));
}

namespace {

BlowdownResult nodal_blowdown(const ManifoldSeries& m, const std::optional<HClass>& s, long p) {
  if (p < 2) throw Error("p must be at least 2");
  if (s) check_fiber(m, *s);
  ManifoldSeries y = blowup(m, p - 1);
  const IntersectionLattice& L = y.kernel.lattice();
  std::optional<HClass> sy;
  if (s) sy = extend_class(*s, L);
  ConfigCp c = nodal_config(L, sy, p);

  std::map<long, Rational> b;
  for (const auto& [j, v] : formal_log_coefficients(p)) b[j] = v;
  const std::size_t first = L.rank() - static_cast<std::size_t>(p - 1);
  const Rational full = pow2(p - 1);

  std::vector<KeptTerm> kept;
  std::vector<ClassRecord> records;
  for (const auto& [k, a] : y.kernel.terms()) {
    long size_j = 0;
    for (std::size_t i = first; i < k.size(); ++i) size_j += to_long(k[i]);
    Restriction r = restrict_class(c, k);
    ClassRecord rec = make_record(k, r, pair_int(L, k, c.sphere(p - 1)));
    auto it = b.find(size_j);
    if (it == b.end() || !r.extends) {
      rec.dropped = true;
      rec.reason = "no coefficient for |J| = " + std::to_string(size_j);
    } else {
      Rational share = full * it->second / Rational(binomial(p - 1, (p - 1 + size_j) / 2));
      kept.push_back(KeptTerm{k, r, a * share});
    }
    records.push_back(std::move(rec));
  }
  return assemble(y, c, std::move(kept), std::move(records), {}, "x");
}

}  // namespace

BlowdownResult nodal_log_pipeline(const ManifoldSeries& m, const HClass& s, long p) {
  return nodal_blowdown(m, s, p);
}

BlowdownResult connected_sum_hp(const ManifoldSeries& m, long p) {
  return nodal_blowdown(m, std::nullopt, p);
}

std::pair<ExpKernel, ExpKernel> coefficient_matching_expansions(long p) {
  if (p < 3 || p % 2 == 0) throw Error("coefficient matching needs an odd p >= 3");
  IntersectionLattice line({refined_name("f", 2 * p)}, RatMatrix{{Rational(0)}});
  auto e = [&](long m) {
    ExpKernel k(line);
    k.add_term(Exponent{Integer(m)}, 1);
    return k;
  };
  ExpKernel top_sum(line), bottom_sum(line);
  for (const auto& [j, bj] : formal_log_coefficients(p)) {
    top_sum = top_sum + bj * e(j);         // e^{j f_2 / p}, f_2 = p f_2p
    bottom_sum = bottom_sum + bj * e(2 * j);  // e^{j f_p}, f_p = 2 f_2p
  }
  ExpKernel top = (e(p) + e(-p)) * top_sum;       // e^{+-f_2}
  ExpKernel bottom = bottom_sum * (e(1) + e(-1));  // e^{+-f_p/2}
  return {top, bottom};
}

ExpKernel restrict_to_line(const ExpKernel& k, const std::string& name) {
  const IntersectionLattice& L = k.lattice();
  Exponent dir;
  for (const auto& [e, c] : k.terms())
    if (std::any_of(e.begin(), e.end(), [](const Integer& x) { return x != 0; })) {
      dir = e;
      break;
    }
  if (dir.empty()) throw Error("kernel has no nonzero class");
  Integer g = 0;
  for (const auto& x : dir) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  for (auto& x : dir) x /= g;
  std::size_t lead = 0;
  while (dir[lead] == 0) ++lead;

  std::map<Integer, Rational> line;
  for (const auto& [e, c] : k.terms()) {
    Integer m = e[lead] / dir[lead];
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != m * dir[i]) throw Error("not collinear");
    line[m] = c;
  }
  Integer top = 0;
  for (const auto& [m, c] : line) top = std::max(top, Integer(abs(m)));
  auto at = [&](const Integer& m) {
    auto it = line.find(m);
    return it == line.end() ? Rational(0) : it->second;
  };
  const bool flip = at(-top) > at(top);
  IntersectionLattice out_lattice({name}, RatMatrix{{L.pair(dir, dir)}});
  ExpKernel out(out_lattice);
  for (const auto& [m, c] : line) out.add_term(Exponent{flip ? Integer(-m) : m}, c);
  return out;
}

}  // namespace ratblow
