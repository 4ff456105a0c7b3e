#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ratblow/matrix.hpp"
#include "ratblow/rational.hpp"

namespace ratblow {

/// Free Z-module with a symmetric rational pairing and named basis vectors.
/// Immutable; copies share the same data.
class IntersectionLattice {
 public:
  IntersectionLattice(std::vector<std::string> names, RatMatrix gram);

  std::size_t rank() const { return data_->names.size(); }
  const RatMatrix& gram() const { return data_->gram; }
  const std::vector<std::string>& names() const { return data_->names; }
  const std::string& name(std::size_t i) const { return data_->names.at(i); }
  /// Index of a basis name, or -1.
  long index_of(const std::string& name) const;

  template <typename A, typename B>
  Rational pair(const std::vector<A>& a, const std::vector<B>& b) const {
    check_length(a.size());
    check_length(b.size());
    Rational s = 0;
    const RatMatrix& g = gram();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] == 0 || g(i, j) == 0) continue;
        s += g(i, j) * a[i] * b[j];
      }
    }
    return s;
  }

  friend bool operator==(const IntersectionLattice& a, const IntersectionLattice& b) {
    return a.data_ == b.data_ || (a.names() == b.names() && a.gram() == b.gram());
  }
  friend bool operator!=(const IntersectionLattice& a, const IntersectionLattice& b) {
    return !(a == b);
  }

 private:
  void check_length(std::size_t n) const {
    if (n != rank()) throw Error("class length does not match lattice rank");
  }
  struct Data {
    std::vector<std::string> names;
    RatMatrix gram;
  };
  std::shared_ptr<const Data> data_;
};

/// Coefficient vector on a lattice basis.
template <typename Scalar>
class LatticeClass {
 public:
  LatticeClass(IntersectionLattice lattice, std::vector<Scalar> coeffs)
      : lattice_(std::move(lattice)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != lattice_.rank()) throw Error("class length does not match lattice rank");
  }
  static LatticeClass zero(const IntersectionLattice& lattice) {
    return LatticeClass(lattice, std::vector<Scalar>(lattice.rank()));
  }
  static LatticeClass basis(const IntersectionLattice& lattice, std::size_t i) {
    LatticeClass c = zero(lattice);
    c.coeffs_.at(i) = 1;
    return c;
  }
  static LatticeClass basis(const IntersectionLattice& lattice, const std::string& name) {
    long i = lattice.index_of(name);
    if (i < 0) throw Error("unknown basis name '" + name + "'");
    return basis(lattice, static_cast<std::size_t>(i));
  }

  const IntersectionLattice& lattice() const { return lattice_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_.at(i); }
  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  LatticeClass operator+(const LatticeClass& o) const {
    same_lattice(o);
    LatticeClass r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
  }
  LatticeClass operator-(const LatticeClass& o) const {
    same_lattice(o);
    LatticeClass r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    return r;
  }
  LatticeClass operator-() const {
    LatticeClass r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend LatticeClass operator*(const Scalar& k, const LatticeClass& a) {
    LatticeClass r = a;
    for (auto& c : r.coeffs_) c *= k;
    return r;
  }
  friend bool operator==(const LatticeClass& a, const LatticeClass& b) {
    return a.lattice_ == b.lattice_ && a.coeffs_ == b.coeffs_;
  }

  void same_lattice(const LatticeClass& o) const {
    if (lattice_ != o.lattice_) throw Error("classes live on different lattices");
  }

 private:
  IntersectionLattice lattice_;
  std::vector<Scalar> coeffs_;
};

using HClass = LatticeClass<Integer>;
using QClass = LatticeClass<Rational>;

QClass to_qclass(const HClass& c);

Rational pairing(const HClass& a, const HClass& b);
Rational pairing(const QClass& a, const QClass& b);
Rational pairing(const HClass& a, const QClass& b);
Rational pairing(const QClass& a, const HClass& b);

bool is_characteristic(const IntersectionLattice& lattice, const HClass& c);

/// Renders a class with basis names, e.g. "2*f_3-e1".
std::string format_class(const IntersectionLattice& lattice, const std::vector<Integer>& coeffs);
std::string format_class(const IntersectionLattice& lattice, const std::vector<Rational>& coeffs);

/// Tridiagonal plumbing matrix of the linear chain C_p.
RatMatrix plumbing_matrix(long p);
/// Closed-form inverse of plumbing_matrix(p).
RatMatrix plumbing_inverse(long p);

/// Residue class in Z/modulus; arithmetic across different moduli is refused.
struct Residue {
  long value = 0;
  long modulus = 1;

  Residue() = default;
  Residue(long v, long m);
  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator-() const { return Residue(-value, modulus); }
  friend bool operator==(const Residue& a, const Residue& b) {
    return a.value == b.value && a.modulus == b.modulus;
  }
};

enum class RelBasis { Delta, Gamma };

/// Relative class in H_2(C_p, boundary) given by coordinates in the delta or
/// gamma basis.
struct RelClassCp {
  long p = 2;
  RelBasis basis = RelBasis::Delta;
  std::vector<long> coords;

  RelClassCp() = default;
  RelClassCp(long p, std::vector<long> coords, RelBasis basis = RelBasis::Delta);

  /// <t,t+1;b>: t repeated p-1-b times followed by t+1 repeated b times.
  static RelClassCp canonical(long p, long t, long b);
};

RelClassCp basis_convert(const RelClassCp& e, RelBasis to);
/// Intersection number of two relative classes (any basis).
Rational rel_pairing(const RelClassCp& a, const RelClassCp& b);
Residue boundary(const RelClassCp& e);
long boundary_residue_class(const Residue& m);
long boundary_residue_class(const RelClassCp& e);

/// An embedded C_p: spheres u_1..u_{p-1} in an ambient lattice whose Gram
/// matrix equals plumbing_matrix(p).
class ConfigCp {
 public:
  ConfigCp(long p, std::vector<HClass> spheres);

  long p() const { return p_; }
  const IntersectionLattice& ambient() const { return spheres_.front().lattice(); }
  const std::vector<HClass>& spheres() const { return spheres_; }
  /// u_j for j in 1..p-1.
  const HClass& sphere(long j) const { return spheres_.at(static_cast<std::size_t>(j - 1)); }

 private:
  long p_;
  std::vector<HClass> spheres_;
};

}  // namespace ratblow
