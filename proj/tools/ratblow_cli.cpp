// Command-line front end for the ratblow library.
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ratblow/catalog.hpp"
#include "ratblow/serialize.hpp"
#include "ratblow/verify.hpp"

using namespace ratblow;

namespace {

enum Exit { kOk = 0, kVerifyFail = 1, kUsage = 2, kSemantic = 3 };

struct Options {
  std::string format = "text";
  std::string spec;
  bool pipeline = false;
  bool k3 = false;
  std::string suite;
  VerifyBounds bounds;
  long p = 0;
  std::string canonical, delta, gamma;
};

bool json_out(const Options& o) { return o.format == "json"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t pos = 0;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw ParseError("malformed integer '" + item + "'", pos + used);
    } catch (const std::logic_error&) {
      throw ParseError("malformed integer '" + item + "'", pos);
    }
    pos += item.size() + 1;
  }
  if (out.empty()) throw ParseError("empty coordinate list", 0);
  return out;
}

std::string squares_line(const IntersectionLattice& l) {
  std::string out;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    out += (i ? " " : "") + l.name(i) + "^2=" + l.gram()(i, i).get_str();
  }
  return out;
}

void print_terms(const ExpKernel& k) {
  std::cout << "terms: " << k.size() << "\n";
  for (auto it = k.terms().rbegin(); it != k.terms().rend(); ++it) {
    std::string cls = format_class(k.lattice(), it->first);
    std::cout << "  " << it->second.get_str() << "  " << (cls.empty() ? "0" : cls) << "\n";
  }
}

void print_numbers(long e, long s, long b) {
  std::cout << "euler " << e << "  signature " << s << "  b+ " << b << "\n";
}

void print_series(const ManifoldSeries& m) {
  std::cout << describe_kernel(m.kernel) << "  " << squares_line(m.kernel.lattice()) << "\n";
  print_terms(m.kernel);
  print_numbers(m.euler, m.signature, m.b_plus);
}

ManifoldSpec spec_of(const std::string& text) {
  ManifoldSpec s = parse_spec(text);
  validate_spec(s);
  return s;
}

int cmd_series(const Options& o) {
  ManifoldSpec s = spec_of(o.spec);
  ManifoldSeries m = (o.pipeline ? donaldson_pipeline(s) : donaldson_closed_form(s)).series;
  if (json_out(o)) {
    Json j{{"spec", to_string(s)}, {"method", o.pipeline ? "pipeline" : "closed_form"}};
    j["series"] = to_json(m);
    emit(j);
  } else {
    print_series(m);
  }
  return kOk;
}

int cmd_sw(const Options& o) {
  ManifoldSpec s = spec_of(o.spec);
  SWMap m = sw_closed_form(s).map;
  if (json_out(o)) {
    emit(Json{{"spec", to_string(s)}, {"sw", to_json(m)}, {"simple_type", sw_simple_type(m)}});
    return kOk;
  }
  std::cout << "classes: " << m.values.size() << "  " << squares_line(m.lattice) << "\n";
  for (auto it = m.values.rbegin(); it != m.values.rend(); ++it) {
    std::string cls = format_class(m.lattice, it->first);
    std::cout << "  " << it->second.get_str() << "  " << (cls.empty() ? "0" : cls) << "\n";
  }
  print_numbers(m.euler, m.signature, m.b_plus);
  std::cout << "simple type: " << (sw_simple_type(m) ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_witten(const Options& o) {
  ManifoldSpec s = spec_of(o.spec);
  ManifoldSeries d = donaldson_closed_form(s).series;
  SWMap m = sw_closed_form(s).map;
  bool ok = witten_check(d, m);
  Rational c = witten_exponent(d.euler, d.signature);
  Rational printed = printed_witten_exponent(d.euler, d.signature, d.b_plus);
  if (json_out(o)) {
    emit(Json{{"spec", to_string(s)},
              {"exponent", to_json(c)},
              {"printed_exponent", to_json(printed)},
              {"donaldson", to_json(d)},
              {"witten_kernel", to_json(witten_kernel(m))},
              {"pass", ok}});
  } else {
    std::cout << "exponent c = " << c.get_str() << "  (printed form gives " << printed.get_str() << ")\n";
    std::cout << "donaldson:  " << describe_kernel(d.kernel) << "\n";
    std::cout << "2^c * SW:   " << describe_kernel(witten_kernel(m)) << "\n";
    std::cout << (ok ? "pass" : "FAIL") << "\n";
  }
  return ok ? kOk : kVerifyFail;
}

int cmd_dim(const Options& o) {
  if (o.p < 2) throw SpecError("--p must be at least 2");
  int given = !o.canonical.empty() + !o.delta.empty() + !o.gamma.empty();
  if (given != 1) throw SpecError("give exactly one of --canonical, --delta, --gamma");
  RelClassCp e;
  if (!o.canonical.empty()) {
    auto tb = parse_list(o.canonical);
    if (tb.size() != 2) throw SpecError("--canonical takes t,b");
    if (tb[1] < 1 || tb[1] > o.p - 1) throw SpecError("b must lie in 1..p-1");
    e = RelClassCp::canonical(o.p, tb[0], tb[1]);
  } else {
    auto c = parse_list(o.delta.empty() ? o.gamma : o.delta);
    if (static_cast<long>(c.size()) != o.p - 1)
      throw SpecError("expected " + std::to_string(o.p - 1) + " coordinates");
    e = RelClassCp(o.p, c, o.delta.empty() ? RelBasis::Gamma : RelBasis::Delta);
  }
  DimReport r = dim_report(e);
  if (json_out(o)) {
    emit(to_json(r));
  } else {
    std::cout << "e^2 " << r.e_square.get_str() << "\n";
    std::cout << "boundary " << r.boundary.value << " mod " << r.boundary.modulus << "\n";
    std::cout << "boundary class " << r.boundary_class << "\n";
    std::cout << "dim " << r.dim << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  SuiteReport r = run_suite(o.suite, o.bounds);
  if (json_out(o)) {
    emit(to_json(r));
  } else {
    for (const auto& c : r.checks) {
      std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name;
      if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
      std::cout << "\n";
    }
    std::cout << "verify " << r.suite << ": " << (r.pass() ? "pass" : "FAIL") << "\n";
  }
  return r.pass() ? kOk : kVerifyFail;
}

void print_blowdown(const std::string& label, const BlowdownResult& r) {
  std::cout << "== " << label << " (p=" << r.p << ")\n";
  const IntersectionLattice& amb = *r.ambient;
  const IntersectionLattice& out = r.series.kernel.lattice();
  for (const auto& c : r.class_map) {
    std::string old = format_class(amb, c.old_class);
    std::cout << "  " << (old.empty() ? "0" : old) << " -> ";
    if (c.dropped) {
      std::cout << "dropped (" << c.reason << ")";
    } else {
      std::string nw = format_class(out, *c.new_class);
      std::cout << (nw.empty() ? "0" : nw) << "  square " << c.square.get_str();
    }
    std::cout << "  boundary " << c.boundary.value << " mod " << c.boundary.modulus << "\n";
  }
  for (const auto& w : r.warnings) std::cout << "  warning: " << w << "\n";
  std::cout << "  result: " << describe_kernel(r.series.kernel) << "  " << squares_line(out) << "\n";
}

int cmd_blowdown(const Options& o) {
  std::vector<std::pair<std::string, BlowdownResult>> steps;
  if (o.k3) {
    steps.emplace_back("K3 -4 sphere", k3_control_blowdown());
  } else {
    if (o.spec.empty()) throw SpecError("blowdown needs a spec or --k3");
    steps = pipeline_blowdowns(spec_of(o.spec));
  }
  if (json_out(o)) {
    Json arr = Json::array();
    for (const auto& [label, r] : steps) {
      Json j = to_json(r);
      j["label"] = label;
      arr.push_back(j);
    }
    emit(Json{{"steps", arr}});
  } else {
    if (steps.empty()) std::cout << "no rational blowdowns in this pipeline\n";
    for (const auto& [label, r] : steps) print_blowdown(label, r);
  }
  return kOk;
}

int cmd_logt(const Options& o) {
  if (o.p < 1) throw SpecError("logt order p ≥ 1 required");
  ManifoldSpec child = spec_of(o.spec);
  ManifoldSpec s;
  s.kind = ManifoldSpec::Kind::LogT;
  s.child = std::make_shared<const ManifoldSpec>(child);
  s.arg = o.p;
  Options inner = o;
  inner.spec = to_string(s);
  return cmd_series(inner);
}

int cmd_audit(const Options& o) {
  AuditReport r = adjunction_audit(spec_of(o.spec));
  if (json_out(o)) {
    emit(to_json(r));
  } else {
    std::cout << r.spec << "\n";
    std::cout << "c1^2 " << r.c1_squared << "  c2 " << r.c2 << "\n";
    std::cout << "5c1^2-c2+36 = " << r.noether << "  11c1^2-c2+36 = " << r.bisecting;
    if (!r.line.empty()) std::cout << "  (" << r.line << " line)";
    std::cout << "\n";
    for (const auto& c : r.classes)
      std::cout << "  " << (c.name.empty() ? "0" : c.name) << "  square " << c.square.get_str()
                << (c.simple_type ? "" : "  not simple type") << "\n";
    if (r.spheres_checked)
      std::cout << "adjunction: " << r.spheres_checked << " spheres, " << r.adjunction_violations
                << " violations\n";
    std::cout << (r.pass ? "pass" : "FAIL") << "\n";
  }
  return r.pass ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Donaldson and Seiberg-Witten series under rational blowdown"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto inherit_format = [&](CLI::App* sub) {
    sub->fallthrough();
    return sub;
  };

  auto* series = inherit_format(app.add_subcommand("series", "Donaldson series of a manifold spec"));
  series->add_option("spec", o.spec, "Manifold spec, e.g. \"E(3;2,5)\"")->required();
  series->add_flag("--pipeline", o.pipeline, "Build with the transform pipeline instead of the closed form");

  auto* sw = inherit_format(app.add_subcommand("sw", "Seiberg-Witten basic classes of a manifold spec"));
  sw->add_option("spec", o.spec)->required();

  auto* witten = inherit_format(app.add_subcommand("witten", "Compare Donaldson and SW data"));
  witten->add_option("spec", o.spec)->required();

  auto* dim = inherit_format(app.add_subcommand("dim", "Moduli dimension of a relative class"));
  dim->add_option("--p", o.p, "Order of the configuration")->required();
  dim->add_option("--canonical", o.canonical, "t,b for the class <t,t+1;b>");
  dim->add_option("--delta", o.delta, "Comma-separated delta coordinates");
  dim->add_option("--gamma", o.gamma, "Comma-separated gamma coordinates");

  auto* verify = inherit_format(app.add_subcommand("verify", "Run a verification suite"));
  verify->add_option("suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"lattice", "lemmas", "identities", "witten", "all"}));
  verify->add_option("--p-max", o.bounds.p_max, "Largest p")->check(CLI::Range(2L, 50L));
  verify->add_option("--box", o.bounds.box, "Half-width of the enumeration box")->check(CLI::Range(1L, 12L));
  verify->add_option("--t-max", o.bounds.t_max, "Largest t for canonical classes")->check(CLI::Range(0L, 12L));

  auto* blowdown = inherit_format(app.add_subcommand("blowdown", "Class map of every rational blowdown in a pipeline"));
  blowdown->add_option("spec", o.spec);
  blowdown->add_flag("--k3", o.k3, "Blow down a -4 sphere in K3 (zero kernel control)");

  auto* logt = inherit_format(app.add_subcommand("logt", "Log transform of the fiber of a spec"));
  logt->add_option("spec", o.spec)->required();
  logt->add_option("--p", o.p, "Order")->required();
  logt->add_flag("--pipeline", o.pipeline, "Blowup then nodal blowdown");

  auto* audit = inherit_format(app.add_subcommand("audit", "Adjunction and characteristic-number audit"));
  audit->add_option("spec", o.spec)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*series) return cmd_series(o);
    if (*sw) return cmd_sw(o);
    if (*witten) return cmd_witten(o);
    if (*dim) return cmd_dim(o);
    if (*verify) return cmd_verify(o);
    if (*blowdown) return cmd_blowdown(o);
    if (*logt) return cmd_logt(o);
    if (*audit) return cmd_audit(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  }
  return kUsage;
}
