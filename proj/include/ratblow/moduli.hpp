#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ratblow/lattice.hpp"

namespace ratblow {

/// (b^2 + b^2 p - b p^2 - 2bt + t^2 - p t^2) / p^2, the square of <t,t+1;b>.
Rational e_square(long p, long t, long b);
Rational general_e_square(const RelClassCp& e);

/// Least (t, b) with (p-1)t + b = m, 1 <= b <= p-1, for m in 1..p^2-1.
std::pair<long, long> canonical_for_residue(long p, long m);

/// Boundary correction anchored so that dim <t,t+1;b> = 2t-1 on the least
/// canonical representative of each nonzero residue; 1 for residue 0.
Rational dim_correction(long p, long m);

/// Formal dimension -2e^2 - 2 - corr(p, boundary e). Throws if not integral.
long dim_moduli(const RelClassCp& e);

struct DimReport {
  RelClassCp e;
  Rational e_square;
  Residue boundary;
  long boundary_class = 0;
  long dim = 0;
};
DimReport dim_report(const RelClassCp& e);

/// rho/2 at boundary (p-1)t+b, as printed in the Lawson computation.
Rational lawson_half_rho_printed(long p, long t, long b);
/// -2e^2 - 2 - sign * (printed rho/2); sign = +1 reproduces the printed text.
Rational dim_from_printed_rho(long p, long t, long b, int sign);

struct MinDimResult {
  long min_dim = 0;
  std::vector<RelClassCp> minimizers;
};

/// Exhaustive scan of delta coordinates in [-box, box]^{p-1} with boundary m
/// and componentwise parity equal to that of parity_of.
MinDimResult min_dim_search(long p, const Residue& m, const RelClassCp& parity_of, long box);

struct Counterexample {
  std::vector<long> e;
  std::vector<long> e_prime;
  long dim_e = 0;
  long dim_e_prime = 0;
};

struct LemmaReport {
  std::string lemma;
  long p = 0;
  long t_max = 0;
  long box = 0;
  bool pass = true;
  long checked = 0;
  long violations = 0;
  std::vector<Counterexample> counterexamples;  // first few only
};

struct BvReport {
  std::vector<LemmaReport> lemmas;
  bool pass() const;
};

/// Checks the four minimization statements for every canonical class with
/// t <= t_max and boundary <= p^2/2 against all classes in the box.
/// threads = 0 picks the hardware concurrency; the result does not depend on it.
BvReport verify_bv_lemmas(long p, long t_max, long box, unsigned threads = 0);

struct Mod2Lift {
  bool exists = false;
  std::vector<int> witness;  // c with P c = e (mod 2), e in gamma coordinates
};
Mod2Lift mod2_lift_exists(const RelClassCp& e);

}  // namespace ratblow
