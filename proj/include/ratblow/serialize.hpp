#pragma once

#include "json.hpp"

#include "ratblow/catalog.hpp"
#include "ratblow/moduli.hpp"
#include "ratblow/swinv.hpp"
#include "ratblow/transform.hpp"
#include "ratblow/verify.hpp"

namespace ratblow {

using Json = nlohmann::ordered_json;

/// Rationals travel as "num/den" strings, integers inside classes as numbers.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

/// {"basis": [names], "gram": [[rationals]]}
Json to_json(const IntersectionLattice& l);
IntersectionLattice lattice_from_json(const Json& j);

/// {"lattice": ..., "terms": [{"class": [ints], "coeff": "num/den"}]}
Json to_json(const ExpKernel& k);
ExpKernel kernel_from_json(const Json& j);

/// Kernel plus euler, signature, b_plus, simple_type.
Json to_json(const ManifoldSeries& m);
ManifoldSeries series_from_json(const Json& j);

/// {"lattice": ..., "classes": [{"class": [ints], "sw": int}], "euler", "signature", "b_plus"}
Json to_json(const SWMap& m);
SWMap swmap_from_json(const Json& j);

Json to_json(const Residue& r);
Json to_json(const BlowdownResult& r);
Json to_json(const DimReport& r);
Json to_json(const LemmaReport& r);
Json to_json(const BvReport& r);
Json to_json(const AuditReport& r);
Json to_json(const SuiteReport& r);

}  // namespace ratblow
