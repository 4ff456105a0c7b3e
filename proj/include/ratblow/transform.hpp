#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratblow/exppoly.hpp"
#include "ratblow/lattice.hpp"

namespace ratblow {

/// Donaldson series exp(Q/2) * kernel together with the characteristic
/// numbers of the manifold. The quadratic factor is implicit.
struct ManifoldSeries {
  ExpKernel kernel;
  long euler = 0;
  long signature = 0;
  long b_plus = 0;
  bool simple_type = true;

  /// Throws unless b_plus is odd and >= 3 and every kernel class is
  /// characteristic.
  void validate() const;
};

ManifoldSeries make_series(ExpKernel kernel, long euler, long signature, long b_plus);

/// What happened to one class of the input during a rational blowdown.
struct ClassRecord {
  Exponent old_class;
  QClass extended;                         // k + sum x_i u_i, ambient coordinates
  std::optional<Exponent> new_class;       // coordinates on the blown-down lattice
  Rational square;                         // square of the extension
  Residue boundary;
  Integer last_pairing;                    // k . u_{p-1}
  bool dropped = false;
  std::string reason;
};

struct BlowdownResult {
  ManifoldSeries series;
  long p = 0;
  std::vector<ClassRecord> class_map;
  /// Rows: basis of the blown-down lattice in ambient coordinates.
  RatMatrix ambient_basis;
  std::optional<IntersectionLattice> ambient;
  std::vector<std::string> warnings;
};

/// Carries an ambient class orthogonal to the configuration onto the
/// blown-down lattice.
HClass carry_class(const BlowdownResult& r, const HClass& c);

struct Restriction {
  QClass extended;
  Rational square;
  Residue boundary;
  bool extends = false;  // boundary lies in p Z_{p^2}
};
Restriction restrict_class(const ConfigCp& c, const HClass& k);
Restriction restrict_class(const ConfigCp& c, const Exponent& k);

/// Lattice of the rational blowdown: span of the integer orthogonal
/// complement of the configuration and the given extended classes.
/// New basis vectors that are not ambient basis vectors are named after
/// `prefix` unless they are 1/d of an ambient basis vector, in which case
/// the refined name is used (f -> f_d, f_2 -> f_{2d}).
struct BlownDownLattice {
  IntersectionLattice lattice;
  RatMatrix ambient_basis;
};
BlownDownLattice blown_down_lattice(const ConfigCp& c, const std::vector<QClass>& extended,
                                    const std::string& prefix);

/// Name of the basis vector old/divisor: "f" -> "f_3", "f_2" -> "f_6".
std::string refined_name(const std::string& old, long divisor);

/// Lattice extension by k exceptional classes with square -1, then kernel
/// times prod cosh(e_i).
ManifoldSeries blowup(const ManifoldSeries& m, long k);
/// The names of the exceptional classes blowup() would add.
std::vector<std::string> exceptional_names(const IntersectionLattice& l, long k);
/// Old classes re-expressed on the lattice returned by blowup().
HClass extend_class(const HClass& c, const IntersectionLattice& larger);
ExpKernel extend_kernel(const ExpKernel& k, const IntersectionLattice& larger);

/// Kernel classes k with 2*positive_double_points - 2 < u^2 + |k.u|.
std::vector<Exponent> check_adjunction(const ManifoldSeries& m, const HClass& u,
                                       long positive_double_points);
/// The relation for spheres meeting the special case of the adjunction bound.
bool check_sphere_relation(const ManifoldSeries& m, const HClass& u);
bool check_taut(const ManifoldSeries& m, const ConfigCp& c);

BlowdownResult taut_blowdown(const ManifoldSeries& m, const ConfigCp& c,
                             const std::string& prefix = "k");
/// Blowdown of a single -4 sphere: K - twist(K, sigma), then extension.
BlowdownResult p2_blowdown(const ManifoldSeries& m, const HClass& sigma,
                           const std::string& prefix = "k");

/// Refinement used by a log transform of order p on S = m * b (b a basis
/// vector): b is replaced by b/d with d = p / gcd(m, p).
struct LogRefinement {
  IntersectionLattice lattice;
  std::size_t index = 0;
  long divisor = 1;
  HClass fiber;    // S on the refined lattice
  HClass fiber_p;  // S/p on the refined lattice
};
LogRefinement log_refinement(const IntersectionLattice& l, const HClass& s, long p);
HClass carry_class(const LogRefinement& r, const HClass& c);

ManifoldSeries log_transform(const ManifoldSeries& m, const HClass& s, long p);

/// (exponent multiple of S/p, coefficient) for sinh(S)/sinh(S/p), highest first.
std::vector<std::pair<long, Rational>> formal_log_coefficients(long p);

/// Rows A_i = w_{p-(i+1)} - w_{p-i}, A_{p-1} = -2w_1 - w_2 - ... - w_{p-1}.
RatMatrix prop_j_matrix(long p);
bool verify_pa_identity(long p);
/// x = P^{-1} A eps.
std::vector<Rational> prop_j_solution(long p, const std::vector<long>& eps);

/// Spheres of the nodal configuration in the blown-up lattice; pass
/// std::nullopt for the configuration without the fiber (homology sphere sum).
ConfigCp nodal_config(const IntersectionLattice& blown_up, const std::optional<HClass>& s,
                      long p);

/// Log transform realized as blowup p-1 times followed by rational blowdown
/// of the nodal configuration.
BlowdownResult nodal_log_pipeline(const ManifoldSeries& m, const HClass& s, long p);
/// Sum with the homology sphere H_p via the configuration without the fiber.
BlowdownResult connected_sum_hp(const ManifoldSeries& m, long p);

/// Both expansions of the order 2p factor for odd p, on the lattice {f_2p}.
std::pair<ExpKernel, ExpKernel> coefficient_matching_expansions(long p);

/// Projects a kernel whose classes are collinear onto the rank-1 lattice
/// spanned by the primitive class of that line; the sign of the generator is
/// chosen so the coefficient at the top positive multiple is the larger one.
ExpKernel restrict_to_line(const ExpKernel& k, const std::string& name);

}  // namespace ratblow
