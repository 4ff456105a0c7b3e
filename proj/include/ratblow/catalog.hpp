#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratblow/swinv.hpp"
#include "ratblow/transform.hpp"

namespace ratblow {

/// A well-formed spec that violates a range condition (n, gcd, ...).
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Expression tree for a named manifold.
struct ManifoldSpec {
  enum class Kind { Elliptic, W, Y, H, Blowup, LogT, HpSum };
  Kind kind = Kind::Elliptic;
  long n = 0;                                // E, W, Y, H
  std::vector<std::pair<long, long>> pairs;  // E(n;p,q;...): q = 1 for E(n;p)
  std::shared_ptr<const ManifoldSpec> child;
  long arg = 0;                              // k for blowup, p for logt / hpsum
};

/// Parses the spec grammar; throws ParseError with the offending position.
ManifoldSpec parse_spec(const std::string& text);
/// Canonical rendering, e.g. "logt(E(2;2,3),5)".
std::string to_string(const ManifoldSpec& s);
/// Range checks; throws SpecError.
void validate_spec(const ManifoldSpec& s);

/// A series or SW map together with the fiber class a log transform acts on,
/// when one is tracked.
struct CatalogSeries {
  ManifoldSeries series;
  std::optional<HClass> fiber;
};
struct CatalogSW {
  SWMap map;
  std::optional<HClass> fiber;
};

CatalogSeries donaldson_closed_form(const ManifoldSpec& s);
CatalogSeries donaldson_pipeline(const ManifoldSpec& s);
CatalogSW sw_closed_form(const ManifoldSpec& s);

/// Every rational blowdown performed by donaldson_pipeline, labelled.
std::vector<std::pair<std::string, BlowdownResult>> pipeline_blowdowns(const ManifoldSpec& s);

/// Lattice {f, s1..s9}: fiber and nine disjoint sections of square -4.
IntersectionLattice w_model_lattice();
/// Lattice {f, s, a1..a_{n-4}, t, b1..b_{n-4}}: two disjoint section chains
/// (a..., s) and (b..., t), each a C_{n-2}.
IntersectionLattice horikawa_model_lattice(long n);
ConfigCp horikawa_config(const IntersectionLattice& model, long n, int which);
/// Lattice {f, sigma} with sigma^2 = -4 and kernel 1: the K3 control.
ManifoldSeries k3_control_series();
BlowdownResult k3_control_blowdown();

struct AuditClass {
  std::string name;
  Rational square;
  bool simple_type = false;  // square == 3 sign + 2 e
};
struct AuditReport {
  std::string spec;
  long euler = 0, signature = 0, b_plus = 0;
  long c1_squared = 0;  // 2e + 3 sign
  long c2 = 0;          // e
  long noether = 0;     // 5 c1^2 - c2 + 36
  long bisecting = 0;   // 11 c1^2 - c2 + 36
  std::string line;     // "noether", "bisecting" or ""
  std::vector<AuditClass> classes;
  /// Configuration spheres of the model checked against the adjunction bound.
  long spheres_checked = 0;
  long adjunction_violations = 0;
  bool pass = false;
};
AuditReport adjunction_audit(const ManifoldSpec& s);

}  // namespace ratblow
