#include "ratblow/exppoly.hpp"

#include <sstream>

namespace ratblow {

ExpKernel::ExpKernel(IntersectionLattice lattice, const Terms& terms) : lattice_(std::move(lattice)) {
  for (const auto& [k, c] : terms) add_term(k, c);
}

ExpKernel ExpKernel::constant(const IntersectionLattice& lattice, const Rational& c) {
  ExpKernel k(lattice);
  k.add_term(Exponent(lattice.rank()), c);
  return k;
}

Rational ExpKernel::coeff(const Exponent& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExpKernel::add_term(const Exponent& k, const Rational& c) {
  if (k.size() != lattice_.rank()) throw Error("exponent length does not match lattice rank");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void ExpKernel::same_lattice(const ExpKernel& o) const {
  if (lattice_ != o.lattice_) throw Error("kernels live on different lattices");
}

ExpKernel ExpKernel::operator+(const ExpKernel& o) const {
  same_lattice(o);
  ExpKernel r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

ExpKernel ExpKernel::operator-(const ExpKernel& o) const {
  same_lattice(o);
  ExpKernel r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

ExpKernel ExpKernel::operator-() const {
  ExpKernel r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

ExpKernel ExpKernel::operator*(const ExpKernel& o) const {
  same_lattice(o);
  ExpKernel r(lattice_);
  Exponent sum(lattice_.rank());
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ka[i] + kb[i];
      r.add_term(sum, ca * cb);
    }
  return r;
}

ExpKernel operator*(const Rational& c, const ExpKernel& k) {
  if (c == 0) return ExpKernel(k.lattice());
  ExpKernel r = k;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

ExpKernel ExpKernel::pow(unsigned n) const {
  ExpKernel r = constant(lattice_, 1);
  ExpKernel base = *this;
  while (n) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

ExpKernel sinh_c(const HClass& k) {
  ExpKernel r(k.lattice());
  r.add_term(k.coeffs(), make_rational(1, 2));
  r.add_term((-k).coeffs(), make_rational(-1, 2));
  return r;
}

ExpKernel cosh_c(const HClass& k) {
  ExpKernel r(k.lattice());
  r.add_term(k.coeffs(), make_rational(1, 2));
  r.add_term((-k).coeffs(), make_rational(1, 2));
  return r;
}

ExpKernel exp_c(const HClass& k) {
  ExpKernel r(k.lattice());
  r.add_term(k.coeffs(), 1);
  return r;
}

namespace {

bool is_zero_vec(const Exponent& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Multiple m with v = m * dir, if any.
bool multiple_of(const Exponent& v, const Exponent& dir, Integer& m) {
  std::size_t lead = 0;
  while (dir[lead] == 0) ++lead;
  if (v[lead] % dir[lead] != 0) return false;
  m = v[lead] / dir[lead];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != m * dir[i]) return false;
  return true;
}

using Laurent = std::map<Integer, Rational>;

}  // namespace

ExpKernel exact_div(const ExpKernel& a, const ExpKernel& b) {
  if (a.lattice() != b.lattice()) throw Error("kernels live on different lattices");
  if (b.is_zero()) throw Error("division by the zero kernel");
  // Primitive direction shared by all exponents.
  Exponent dir;
  for (const auto* k : {&a, &b})
    for (const auto& [e, c] : k->terms())
      if (dir.empty() && !is_zero_vec(e)) dir = e;
  const std::size_t rank = a.lattice().rank();
  if (dir.empty()) dir.assign(rank, 0), dir[0] = 1;
  Integer g = 0;
  for (const auto& x : dir) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  std::size_t lead = 0;
  while (dir[lead] == 0) ++lead;
  if (dir[lead] < 0) g = -g;
  for (auto& x : dir) x /= g;

  auto to_laurent = [&](const ExpKernel& k) {
    Laurent l;
    for (const auto& [e, c] : k.terms()) {
      Integer m;
      if (!multiple_of(e, dir, m)) throw Error("not collinear");
      l[m] = c;
    }
    return l;
  };
  Laurent num = to_laurent(a), den = to_laurent(b);
  ExpKernel q(a.lattice());
  if (num.empty()) return q;
  const Integer den_lo = den.begin()->first, den_hi = den.rbegin()->first;
  const Rational den_lead = den.rbegin()->second;
  const Integer q_lo = num.begin()->first - den_lo;
  Exponent e(rank);
  while (!num.empty()) {
    Integer deg = num.rbegin()->first - den_hi;
    if (deg < q_lo) break;
    Rational c = num.rbegin()->second / den_lead;
    for (const auto& [d, v] : den) {
      Rational& slot = num[deg + d];
      slot -= c * v;
      if (slot == 0) num.erase(deg + d);
    }
    for (std::size_t i = 0; i < rank; ++i) e[i] = deg * dir[i];
    q.add_term(e, c);
  }
  if (!num.empty()) throw Error("inexact division");
  return q;
}

ExpKernel twist(const ExpKernel& k, const HClass& c) {
  if (k.lattice() != c.lattice()) throw Error("twist class lives on a different lattice");
  const IntersectionLattice& L = k.lattice();
  const Rational cc = L.pair(c.coeffs(), c.coeffs());
  ExpKernel r(L);
  for (const auto& [e, a] : k.terms()) {
    Rational x = cc + L.pair(e, c.coeffs());
    if (!is_integer(x) || mpz_odd_p(x.get_num_mpz_t()))
      throw Error("odd exponent in twist: c^2 + k.c = " + x.get_str());
    Integer half = x.get_num() / 2;
    r.add_term(e, mpz_odd_p(half.get_mpz_t()) ? Rational(-a) : a);
  }
  return r;
}

Rational coeff_sum(const ExpKernel& k) {
  Rational s = 0;
  for (const auto& [e, c] : k.terms()) s += c;
  return s;
}

Parity parity(const ExpKernel& k) {
  bool even = true, odd = true;
  Exponent neg;
  for (const auto& [e, c] : k.terms()) {
    neg = e;
    for (auto& x : neg) x = -x;
    Rational m = k.coeff(neg);
    if (m != c) even = false;
    if (m != -c) odd = false;
  }
  if (even) return Parity::Even;
  if (odd) return Parity::Odd;
  return Parity::Neither;
}

std::string to_string(Parity p) {
  switch (p) {
    case Parity::Even:
      return "even";
    case Parity::Odd:
      return "odd";
    default:
      return "neither";
  }
}

ExpKernel directional_derivative(const ExpKernel& k, const HClass& u) {
  if (k.lattice() != u.lattice()) throw Error("direction lives on a different lattice");
  ExpKernel r(k.lattice());
  for (const auto& [e, c] : k.terms()) r.add_term(e, c * k.lattice().pair(e, u.coeffs()));
  return r;
}

IntersectionLattice refine_lattice(const IntersectionLattice& lattice, std::size_t index,
                                   long divisor, const std::string& new_name) {
  if (divisor < 1) throw Error("refinement divisor must be at least 1");
  if (index >= lattice.rank()) throw Error("refinement index out of range");
  std::vector<std::string> names = lattice.names();
  names[index] = new_name;
  RatMatrix g = lattice.gram();
  for (std::size_t j = 0; j < g.cols(); ++j) {
    if (j == index) continue;
    g(index, j) /= divisor;
    g(j, index) /= divisor;
  }
  g(index, index) /= divisor * divisor;
  return IntersectionLattice(std::move(names), std::move(g));
}

HClass refine_class(const HClass& c, const IntersectionLattice& refined, std::size_t index,
                    long divisor) {
  std::vector<Integer> v = c.coeffs();
  v.at(index) *= divisor;
  return HClass(refined, std::move(v));
}

long basis_index(const HClass& c) {
  long idx = -1;
  for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
    if (c[i] == 0) continue;
    if (c[i] != 1 || idx >= 0) return -1;
    idx = static_cast<long>(i);
  }
  return idx;
}

ExpKernel refine_lattice(const ExpKernel& k, const HClass& old, long divisor,
                         const std::string& new_name) {
  if (k.lattice() != old.lattice()) throw Error("refined class lives on a different lattice");
  long idx = basis_index(old);
  if (idx < 0) throw Error("refinement needs a basis vector");
  IntersectionLattice refined =
      refine_lattice(k.lattice(), static_cast<std::size_t>(idx), divisor, new_name);
  ExpKernel r(refined);
  for (const auto& [e, c] : k.terms()) {
    Exponent v = e;
    v[static_cast<std::size_t>(idx)] *= divisor;
    r.add_term(v, c);
  }
  return r;
}

ExpKernel relabel(const ExpKernel& k, const IntersectionLattice& lattice) {
  if (k.lattice().rank() != lattice.rank() || k.lattice().gram() != lattice.gram())
    throw Error("relabel needs an isometric basis");
  return ExpKernel(lattice, k.terms());
}

std::string format_kernel(const ExpKernel& k) {
  if (k.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest exponents first reads more naturally.
  for (auto it = k.terms().rbegin(); it != k.terms().rend(); ++it) {
    Rational c = it->second;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    bool zero = is_zero_vec(it->first);
    if (zero) {
      out << c.get_str();
    } else {
      if (c != 1) out << c.get_str() << "*";
      out << "e^{" << format_class(k.lattice(), it->first) << "}";
    }
    first = false;
  }
  return out.str();
}

std::string describe_kernel(const ExpKernel& k) {
  if (k.size() == 1 && is_zero_vec(k.terms().begin()->first))
    return k.terms().begin()->second.get_str();
  if (k.size() == 2) {
    const auto& [e1, c1] = *k.terms().begin();
    const auto& [e2, c2] = *k.terms().rbegin();
    Exponent neg = e1;
    for (auto& x : neg) x = -x;
    if (neg == e2) {
      // Larger exponent is e2 in the canonical order; name the class by it.
      const Exponent& pos = e2;
      std::string cls = format_class(k.lattice(), pos);
      bool simple = cls.find_first_of("+-") == std::string::npos;
      std::string arg = simple ? cls : "(" + cls + ")";
      if (c1 == c2) {
        Rational a = 2 * c2;
        return (a == 1 ? std::string() : a.get_str() + "*") + "cosh(" + arg + ")";
      }
      if (c1 == -c2) {
        Rational a = 2 * c2;
        return (a == 1 ? std::string() : a.get_str() + "*") + "sinh(" + arg + ")";
      }
    }
  }
  return format_kernel(k);
}

}  // namespace ratblow
