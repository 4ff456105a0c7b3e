#include "ratblow/serialize.hpp"

namespace ratblow {

namespace {

Json int_vector(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_long(x));
  return a;
}

std::vector<Integer> int_vector_from_json(const Json& j) {
  std::vector<Integer> v;
  for (const auto& x : j) v.emplace_back(x.get<long>());
  return v;
}

Json rational_vector(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'", 0);
  return j.at(key);
}

Json counterexample_json(const Counterexample& c) {
  return Json{{"e", c.e}, {"e_prime", c.e_prime}, {"dim_e", c.dim_e}, {"dim_e_prime", c.dim_e_prime}};
}

}  // namespace

Json to_json(const Rational& r) { return r.get_str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("rational must be a \"num/den\" string", 0);
  return parse_rational(j.get<std::string>());
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(rational_vector(m.row(i)));
  return rows;
}

RatMatrix matrix_from_json(const Json& j) {
  const std::size_t r = j.size();
  const std::size_t c = r ? j.at(0).size() : 0;
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (j.at(i).size() != c) throw ParseError("ragged matrix", i);
    for (std::size_t k = 0; k < c; ++k) m(i, k) = rational_from_json(j.at(i).at(k));
  }
  return m;
}

Json to_json(const IntersectionLattice& l) {
  return Json{{"basis", l.names()}, {"gram", to_json(l.gram())}};
}

IntersectionLattice lattice_from_json(const Json& j) {
  return IntersectionLattice(field(j, "basis").get<std::vector<std::string>>(),
                             matrix_from_json(field(j, "gram")));
}

Json to_json(const ExpKernel& k) {
  Json terms = Json::array();
  for (const auto& [e, c] : k.terms()) terms.push_back(Json{{"class", int_vector(e)}, {"coeff", to_json(c)}});
  return Json{{"lattice", to_json(k.lattice())}, {"terms", terms}};
}

ExpKernel kernel_from_json(const Json& j) {
  ExpKernel k(lattice_from_json(field(j, "lattice")));
  for (const auto& t : field(j, "terms"))
    k.add_term(int_vector_from_json(field(t, "class")), rational_from_json(field(t, "coeff")));
  return k;
}

Json to_json(const ManifoldSeries& m) {
  return Json{{"kernel", to_json(m.kernel)},
              {"euler", m.euler},
              {"signature", m.signature},
              {"b_plus", m.b_plus},
              {"simple_type", m.simple_type}};
}

ManifoldSeries series_from_json(const Json& j) {
  ManifoldSeries m{kernel_from_json(field(j, "kernel")), field(j, "euler").get<long>(),
                   field(j, "signature").get<long>(), field(j, "b_plus").get<long>(),
                   j.value("simple_type", true)};
  m.validate();
  return m;
}

Json to_json(const SWMap& m) {
  Json classes = Json::array();
  for (const auto& [k, v] : m.values)
    classes.push_back(Json{{"class", int_vector(k)}, {"sw", to_long(v)}});
  return Json{{"lattice", to_json(m.lattice)},
              {"classes", classes},
              {"euler", m.euler},
              {"signature", m.signature},
              {"b_plus", m.b_plus}};
}

SWMap swmap_from_json(const Json& j) {
  SWMap m{lattice_from_json(field(j, "lattice")), {}, field(j, "euler").get<long>(),
          field(j, "signature").get<long>(), field(j, "b_plus").get<long>(), true};
  for (const auto& c : field(j, "classes"))
    m.values[int_vector_from_json(field(c, "class"))] = Integer(field(c, "sw").get<long>());
  m.simple_type = sw_simple_type(m);
  m.validate();
  return m;
}

Json to_json(const Residue& r) { return Json{{"value", r.value}, {"modulus", r.modulus}}; }

Json to_json(const BlowdownResult& r) {
  Json map = Json::array();
  for (const auto& c : r.class_map) {
    map.push_back(Json{{"old_class", int_vector(c.old_class)},
                       {"extended", rational_vector(c.extended.coeffs())},
                       {"new_class", c.new_class ? int_vector(*c.new_class) : Json(nullptr)},
                       {"square", to_json(c.square)},
                       {"boundary", to_json(c.boundary)},
                       {"last_pairing", to_long(c.last_pairing)},
                       {"dropped", c.dropped},
                       {"reason", c.reason}});
  }
  Json out{{"series", to_json(r.series)}, {"p", r.p}, {"class_map", map}};
  if (r.ambient) out["ambient"] = to_json(*r.ambient);
  out["ambient_basis"] = to_json(r.ambient_basis);
  out["warnings"] = r.warnings;
  return out;
}

Json to_json(const DimReport& r) {
  return Json{{"p", r.e.p},
              {"basis", r.e.basis == RelBasis::Delta ? "delta" : "gamma"},
              {"coords", r.e.coords},
              {"e_square", to_json(r.e_square)},
              {"boundary", to_json(r.boundary)},
              {"boundary_class", r.boundary_class},
              {"dim", r.dim}};
}

Json to_json(const LemmaReport& r) {
  Json ce = Json::array();
  for (const auto& c : r.counterexamples) ce.push_back(counterexample_json(c));
  return Json{{"lemma", r.lemma},
              {"p", r.p},
              {"parameters", Json{{"t_max", r.t_max}, {"box", r.box}}},
              {"pass", r.pass},
              {"checked", r.checked},
              {"violations", r.violations},
              {"counterexamples", ce}};
}

Json to_json(const BvReport& r) {
  Json lemmas = Json::array();
  for (const auto& l : r.lemmas) lemmas.push_back(to_json(l));
  return Json{{"pass", r.pass()}, {"lemmas", lemmas}};
}

Json to_json(const AuditReport& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes)
    classes.push_back(Json{{"class", c.name}, {"square", to_json(c.square)}, {"simple_type", c.simple_type}});
  return Json{{"spec", r.spec},
              {"euler", r.euler},
              {"signature", r.signature},
              {"b_plus", r.b_plus},
              {"c1_squared", r.c1_squared},
              {"c2", r.c2},
              {"noether", r.noether},
              {"bisecting", r.bisecting},
              {"line", r.line},
              {"classes", classes},
              {"spheres_checked", r.spheres_checked},
              {"adjunction_violations", r.adjunction_violations},
              {"pass", r.pass}};
}

Json to_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  Json out{{"suite", r.suite}, {"pass", r.pass()}, {"checks", checks}};
  if (!r.lemma_reports.empty()) {
    Json reports = Json::array();
    for (const auto& b : r.lemma_reports) reports.push_back(to_json(b));
    out["lemma_reports"] = reports;
  }
  return out;
}

}  // namespace ratblow
