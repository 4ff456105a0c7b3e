#include "ratblow/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ratblow {

IntersectionLattice::IntersectionLattice(std::vector<std::string> names, RatMatrix gram) {
  if (names.empty()) throw Error("lattice rank must be positive");
  if (gram.rows() != names.size() || gram.cols() != names.size())
    throw Error("gram matrix size does not match the number of basis names");
  if (!gram.is_symmetric()) throw Error("gram matrix is not symmetric");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error("empty basis name");
    if (!seen.insert(n).second) throw Error("duplicate basis name '" + n + "'");
  }
  data_ = std::make_shared<const Data>(Data{std::move(names), std::move(gram)});
}

long IntersectionLattice::index_of(const std::string& name) const {
  const auto& n = names();
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] == name) return static_cast<long>(i);
  return -1;
}

QClass to_qclass(const HClass& c) {
  std::vector<Rational> q(c.coeffs().begin(), c.coeffs().end());
  return QClass(c.lattice(), std::move(q));
}

namespace {
void check_same(const IntersectionLattice& a, const IntersectionLattice& b) {
  if (a != b) throw Error("classes live on different lattices");
}
}  // namespace

Rational pairing(const HClass& a, const HClass& b) {
  check_same(a.lattice(), b.lattice());
  return a.lattice().pair(a.coeffs(), b.coeffs());
}
Rational pairing(const QClass& a, const QClass& b) {
  check_same(a.lattice(), b.lattice());
  return a.lattice().pair(a.coeffs(), b.coeffs());
}
Rational pairing(const HClass& a, const QClass& b) {
  check_same(a.lattice(), b.lattice());
  return a.lattice().pair(a.coeffs(), b.coeffs());
}
Rational pairing(const QClass& a, const HClass& b) { return pairing(b, a); }

bool is_characteristic(const IntersectionLattice& lattice, const HClass& c) {
  check_same(lattice, c.lattice());
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    Rational ci = lattice.pair(c.coeffs(), HClass::basis(lattice, i).coeffs());
    Rational d = ci - lattice.gram()(i, i);
    if (!is_integer(d) || mpz_odd_p(d.get_num_mpz_t())) return false;
  }
  return true;
}

namespace {
template <typename T>
std::string format_impl(const IntersectionLattice& lattice, const std::vector<T>& coeffs) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    T c = coeffs[i];
    if (c < 0) {
      out << "-";
      c = -c;
    } else if (!first) {
      out << "+";
    }
    if (c != 1) out << c.get_str() << "*";
    out << lattice.name(i);
    first = false;
  }
  if (first) return "0";
  return out.str();
}
}  // namespace

std::string format_class(const IntersectionLattice& lattice, const std::vector<Integer>& coeffs) {
  return format_impl(lattice, coeffs);
}
std::string format_class(const IntersectionLattice& lattice, const std::vector<Rational>& coeffs) {
  return format_impl(lattice, coeffs);
}

RatMatrix plumbing_matrix(long p) {
  if (p < 2) throw Error("plumbing matrix needs p >= 2");
  const auto n = static_cast<std::size_t>(p - 1);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = -2;
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = 1;
  }
  m(n - 1, n - 1) = -(p + 2);
  return m;
}

RatMatrix plumbing_inverse(long p) {
  if (p < 2) throw Error("plumbing matrix needs p >= 2");
  const auto n = static_cast<std::size_t>(p - 1);
  RatMatrix m(n, n);
  const Rational scale = make_rational(p + 1, p * p);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b <= a; ++b) {
      long i = static_cast<long>(a) + 1, j = static_cast<long>(b) + 1;
      Rational v = -j + scale * (i * j);
      m(a, b) = m(b, a) = v;
    }
  return m;
}

Residue::Residue(long v, long m) : value(0), modulus(m) {
  if (m < 1) throw Error("residue modulus must be positive");
  value = floor_mod(v, m);
}

Residue Residue::operator+(const Residue& o) const {
  if (modulus != o.modulus) throw Error("residues with different moduli");
  return Residue(value + o.value, modulus);
}

Residue Residue::operator-(const Residue& o) const {
  if (modulus != o.modulus) throw Error("residues with different moduli");
  return Residue(value - o.value, modulus);
}

RelClassCp::RelClassCp(long p_, std::vector<long> coords_, RelBasis basis_)
    : p(p_), basis(basis_), coords(std::move(coords_)) {
  if (p < 2) throw Error("relative class needs p >= 2");
  if (coords.size() != static_cast<std::size_t>(p - 1))
    throw Error("relative class for p=" + std::to_string(p) + " needs " + std::to_string(p - 1) +
                " coordinates");
}

RelClassCp RelClassCp::canonical(long p, long t, long b) {
  if (p < 2) throw Error("canonical class needs p >= 2");
  if (b < 1 || b > p - 1) throw Error("canonical class needs 1 <= b <= p-1");
  if (t < 0) throw Error("canonical class needs t >= 0");
  std::vector<long> c(static_cast<std::size_t>(p - 1), t);
  for (long k = p - 1 - b; k < p - 1; ++k) c[static_cast<std::size_t>(k)] = t + 1;
  return RelClassCp(p, std::move(c));
}

RelClassCp basis_convert(const RelClassCp& e, RelBasis to) {
  if (e.basis == to) return e;
  const std::size_t n = e.coords.size();
  std::vector<long> out(n);
  if (to == RelBasis::Gamma) {
    // sum t_k delta_k with delta_k = gamma_k - gamma_{k-1}
    for (std::size_t k = 0; k < n; ++k) out[k] = e.coords[k] - (k + 1 < n ? e.coords[k + 1] : 0);
  } else {
    long acc = 0;
    for (std::size_t k = n; k-- > 0;) {
      acc += e.coords[k];
      out[k] = acc;
    }
  }
  return RelClassCp(e.p, std::move(out), to);
}

Rational rel_pairing(const RelClassCp& a, const RelClassCp& b) {
  if (a.p != b.p) throw Error("relative classes for different p");
  RelClassCp ga = basis_convert(a, RelBasis::Gamma), gb = basis_convert(b, RelBasis::Gamma);
  RatMatrix inv = plumbing_inverse(a.p);
  Rational s = 0;
  for (std::size_t i = 0; i < ga.coords.size(); ++i)
    for (std::size_t j = 0; j < gb.coords.size(); ++j) s += inv(i, j) * ga.coords[i] * gb.coords[j];
  return s;
}

Residue boundary(const RelClassCp& e) {
  long s = 0;
  if (e.basis == RelBasis::Delta) {
    for (long c : e.coords) s += c;
  } else {
    for (std::size_t j = 0; j < e.coords.size(); ++j) s += static_cast<long>(j + 1) * e.coords[j];
  }
  return Residue(s, e.p * e.p);
}

long boundary_residue_class(const Residue& m) { return std::min(m.value, m.modulus - m.value) % m.modulus; }

long boundary_residue_class(const RelClassCp& e) { return boundary_residue_class(boundary(e)); }

ConfigCp::ConfigCp(long p, std::vector<HClass> spheres) : p_(p), spheres_(std::move(spheres)) {
  if (p < 2) throw Error("configuration needs p >= 2");
  if (spheres_.size() != static_cast<std::size_t>(p - 1))
    throw Error("configuration C_" + std::to_string(p) + " needs " + std::to_string(p - 1) +
                " spheres");
  RatMatrix expect = plumbing_matrix(p);
  for (std::size_t i = 0; i < spheres_.size(); ++i)
    for (std::size_t j = 0; j < spheres_.size(); ++j)
      if (pairing(spheres_[i], spheres_[j]) != expect(i, j))
        throw Error("sphere pairings do not match the plumbing matrix of C_" + std::to_string(p));
}

}  // namespace ratblow
