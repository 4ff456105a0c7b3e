#pragma once

#include <map>
#include <string>
#include <vector>

#include "ratblow/transform.hpp"

namespace ratblow {

/// Support of a Seiberg-Witten function: characteristic classes with their
/// nonzero integer values.
struct SWMap {
  IntersectionLattice lattice;
  std::map<Exponent, Integer> values;
  long euler = 0;
  long signature = 0;
  long b_plus = 0;
  bool simple_type = true;

  /// Throws if a key is not characteristic, a value is zero, or (when the
  /// simple-type flag is set) a key has nonzero sw_dim.
  void validate() const;
};

/// (c_1(L)^2 - (3 sign + 2 e)) / 4.
Rational sw_dim(const SWMap& m, const HClass& l);
Rational sw_dim(const SWMap& m, const Exponent& l);
bool sw_simple_type(const SWMap& m);

/// Keys (n-2-2r) f with values (-1)^r C(n-2, r).
SWMap sw_en(long n);
/// Same map on a caller-supplied lattice in which `f` names the fiber.
SWMap sw_en_on(const IntersectionLattice& lattice, const HClass& f, long n);

/// One exceptional class per entry of k_levels; entry k allows the odd
/// multiples (2j+1) e for j = 0..k whenever sw_dim(L) - j(j+1) >= 0.
SWMap sw_blowup(const SWMap& m, const std::vector<long>& k_levels);

SWMap sw_log_transform(const SWMap& m, const HClass& s, long p);

struct SWBlowdownResult {
  SWMap map;
  RatMatrix ambient_basis;
  std::vector<std::string> warnings;
};
SWBlowdownResult sw_taut_blowdown(const SWMap& m, const ConfigCp& c,
                                  const std::string& prefix = "k");

/// (m^2 - 1)(p - 1)/4 for odd m.
Rational sw_dim_shift(long p, long m);

/// 2 + (7 e + 11 sign)/4.
Rational witten_exponent(long euler, long signature);
/// 3 sign + 2 e - (b+ - 3)/2, kept for comparison only.
Rational printed_witten_exponent(long euler, long signature, long b_plus);

/// 2^c * sum SW(L) e^{L}.
ExpKernel witten_kernel(const SWMap& m);
/// Throws on a lattice or characteristic-number mismatch.
bool witten_check(const ManifoldSeries& d, const SWMap& m);

}  // namespace ratblow
