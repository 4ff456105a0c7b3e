#pragma once

#include <map>
#include <string>
#include <vector>

#include "ratblow/lattice.hpp"

namespace ratblow {

using Exponent = std::vector<Integer>;

/// Finite formal sum of a_s e^{k_s} over lattice classes k_s.
class ExpKernel {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit ExpKernel(IntersectionLattice lattice) : lattice_(std::move(lattice)) {}
  ExpKernel(IntersectionLattice lattice, const Terms& terms);

  static ExpKernel constant(const IntersectionLattice& lattice, const Rational& c);

  const IntersectionLattice& lattice() const { return lattice_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of e^{k}, zero when absent.
  Rational coeff(const Exponent& k) const;

  /// Adds c e^{k}; drops the term if the coefficient cancels.
  void add_term(const Exponent& k, const Rational& c);

  ExpKernel operator+(const ExpKernel& o) const;
  ExpKernel operator-(const ExpKernel& o) const;
  ExpKernel operator-() const;
  ExpKernel operator*(const ExpKernel& o) const;
  friend ExpKernel operator*(const Rational& c, const ExpKernel& k);
  ExpKernel pow(unsigned n) const;

  friend bool operator==(const ExpKernel& a, const ExpKernel& b) {
    return a.lattice_ == b.lattice_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const ExpKernel& a, const ExpKernel& b) { return !(a == b); }

 private:
  void same_lattice(const ExpKernel& o) const;
  IntersectionLattice lattice_;
  Terms terms_;
};

ExpKernel sinh_c(const HClass& k);
ExpKernel cosh_c(const HClass& k);
ExpKernel exp_c(const HClass& k);

/// Q with Q * b == a, when all exponents lie on one line through 0.
/// Throws "not collinear" or "inexact division".
ExpKernel exact_div(const ExpKernel& a, const ExpKernel& b);

/// Multiplies each a_s by (-1)^{(c^2 + k_s.c)/2}. Throws on an odd exponent.
ExpKernel twist(const ExpKernel& k, const HClass& c);

Rational coeff_sum(const ExpKernel& k);

enum class Parity { Even, Odd, Neither };
Parity parity(const ExpKernel& k);
std::string to_string(Parity p);

/// a_s e^{k_s} -> a_s (k_s.u) e^{k_s}.
ExpKernel directional_derivative(const ExpKernel& k, const HClass& u);

/// Lattice in which basis vector `index` is replaced by new_name with
/// old = divisor * new.
IntersectionLattice refine_lattice(const IntersectionLattice& lattice, std::size_t index,
                                   long divisor, const std::string& new_name);
/// Re-expresses a class of the old lattice on the refined lattice.
HClass refine_class(const HClass& c, const IntersectionLattice& refined, std::size_t index,
                    long divisor);
ExpKernel refine_lattice(const ExpKernel& k, const HClass& old, long divisor,
                         const std::string& new_name);

/// Index of the basis vector c equals, or -1 when c is not a basis vector.
long basis_index(const HClass& c);

/// Re-expresses the kernel on another lattice of the same rank with the same
/// Gram matrix (only the basis names may differ).
ExpKernel relabel(const ExpKernel& k, const IntersectionLattice& lattice);

/// Term listing, e.g. "1/2*e^{f} - 1/2*e^{-f}".
std::string format_kernel(const ExpKernel& k);
/// Compact form: "c*cosh(k)" or "c*sinh(k)" when the kernel has that shape,
/// otherwise the term listing.
std::string describe_kernel(const ExpKernel& k);

}  // namespace ratblow
