#include "ratblow/catalog.hpp"

#include <cctype>
#include <numeric>

namespace ratblow {

// ---------------------------------------------------------------- parsing

namespace {

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : text_(text) {}

  ManifoldSpec parse() {
    ManifoldSpec s = spec();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    if (pos_ - digits > 9) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stol(text_.substr(start, pos_ - start));
  }

  ManifoldSpec spec() {
    std::size_t start = (skip(), pos_);
    std::string name = word();
    ManifoldSpec s;
    if (name == "E") {
      expect('(');
      s.kind = ManifoldSpec::Kind::Elliptic;
      s.n = integer();
      bool bare_p = false;
      while (accept(';')) {
        long p = integer();
        long q = 1;
        if (accept(',')) {
          q = integer();
        } else {
          bare_p = true;
        }
        if (bare_p && !s.pairs.empty()) fail("expected ','");
        s.pairs.emplace_back(p, q);
      }
      if (s.pairs.size() == 2 || s.pairs.size() > 3) fail("expected one or three (p,q) pairs");
      expect(')');
    } else if (name == "W" || name == "Y" || name == "H") {
      s.kind = name == "W" ? ManifoldSpec::Kind::W
               : name == "Y" ? ManifoldSpec::Kind::Y
                             : ManifoldSpec::Kind::H;
      expect('(');
      s.n = integer();
      expect(')');
    } else if (name == "blowup" || name == "logt" || name == "hpsum") {
      s.kind = name == "blowup" ? ManifoldSpec::Kind::Blowup
               : name == "logt" ? ManifoldSpec::Kind::LogT
                                : ManifoldSpec::Kind::HpSum;
      expect('(');
      s.child = std::make_shared<const ManifoldSpec>(spec());
      expect(',');
      s.arg = integer();
      expect(')');
    } else {
      pos_ = start;
      fail(name.empty() ? "expected a manifold name" : "unknown manifold '" + name + "'");
    }
    return s;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

ManifoldSpec parse_spec(const std::string& text) { return SpecParser(text).parse(); }

std::string to_string(const ManifoldSpec& s) {
  using K = ManifoldSpec::Kind;
  switch (s.kind) {
    case K::Elliptic: {
      std::string out = "E(" + std::to_string(s.n);
      for (const auto& [p, q] : s.pairs) {
        out += ";" + std::to_string(p);
        if (q != 1 || s.pairs.size() > 1) out += "," + std::to_string(q);
      }
      return out + ")";
    }
    case K::W:
      return "W(" + std::to_string(s.n) + ")";
    case K::Y:
      return "Y(" + std::to_string(s.n) + ")";
    case K::H:
      return "H(" + std::to_string(s.n) + ")";
    case K::Blowup:
      return "blowup(" + to_string(*s.child) + "," + std::to_string(s.arg) + ")";
    case K::LogT:
      return "logt(" + to_string(*s.child) + "," + std::to_string(s.arg) + ")";
    case K::HpSum:
      return "hpsum(" + to_string(*s.child) + "," + std::to_string(s.arg) + ")";
  }
  return "";
}

void validate_spec(const ManifoldSpec& s) {
  using K = ManifoldSpec::Kind;
  switch (s.kind) {
    case K::Elliptic:
      if (s.n < 2) throw SpecError("n ≥ 2 required (b⁺ ≥ 3)");
      for (const auto& [p, q] : s.pairs) {
        if (p < 1 || q < 1) throw SpecError("log transform orders must be positive");
        if (std::gcd(p, q) != 1)
          throw SpecError("gcd(p,q) = 1 required (got " + std::to_string(p) + "," +
                          std::to_string(q) + ")");
      }
      return;
    case K::W:
      if (s.n < 1 || s.n > 8)
        throw SpecError("W(n) requires 1 ≤ n ≤ 8 (simply connected only for n ≤ 8)");
      return;
    case K::Y:
    case K::H:
      if (s.n < 4) throw SpecError(std::string(s.kind == K::Y ? "Y" : "H") + "(n) requires n ≥ 4");
      return;
    case K::Blowup:
      validate_spec(*s.child);
      if (s.arg < 1) throw SpecError("blowup count must be at least 1");
      return;
    case K::LogT:
      validate_spec(*s.child);
      if (s.arg < 1) throw SpecError("logt order p ≥ 1 required");
      return;
    case K::HpSum:
      validate_spec(*s.child);
      if (s.arg < 2) throw SpecError("hpsum order p ≥ 2 required");
      return;
  }
}

// ---------------------------------------------------------------- models

namespace {

IntersectionLattice null_lattice(const std::vector<std::string>& names) {
  return IntersectionLattice(names, RatMatrix(names.size(), names.size()));
}

IntersectionLattice line_lattice(const std::string& name, long square) {
  return IntersectionLattice({name}, RatMatrix{{Rational(square)}});
}

ExpKernel sinh_power(const HClass& f, long k) { return sinh_c(f).pow(static_cast<unsigned>(k)); }

// Order pq factor sinh^2(pq u)/(sinh(q u) sinh(p u)) on the refined direction u.
ExpKernel elliptic_factor(const HClass& u, long p, long q, long numerator_power) {
  const Integer l = Integer(p) * q;
  return exact_div(sinh_power(l * u, numerator_power),
                   sinh_c(Integer(q) * u) * sinh_c(Integer(p) * u));
}

std::vector<std::string> three_pair_names(const std::vector<std::pair<long, long>>& pairs) {
  std::vector<std::string> names{"f"};
  for (std::size_t i = 0; i < pairs.size(); ++i)
    names.push_back(refined_name("S" + std::to_string(i + 1), pairs[i].first * pairs[i].second));
  return names;
}

void check_spec(const ManifoldSpec& s) { validate_spec(s); }

}  // namespace

IntersectionLattice w_model_lattice() {
  std::vector<std::string> names{"f"};
  for (int i = 1; i <= 9; ++i) names.push_back("s" + std::to_string(i));
  RatMatrix g(10, 10);
  for (std::size_t i = 1; i < 10; ++i) {
    g(0, i) = g(i, 0) = 1;
    g(i, i) = -4;
  }
  return IntersectionLattice(std::move(names), std::move(g));
}

IntersectionLattice horikawa_model_lattice(long n) {
  if (n < 4) throw SpecError("horikawa model needs n ≥ 4");
  const long chain = n - 4;
  std::vector<std::string> names{"f", "s"};
  for (long j = 1; j <= chain; ++j) names.push_back("a" + std::to_string(j));
  names.push_back("t");
  for (long j = 1; j <= chain; ++j) names.push_back("b" + std::to_string(j));
  const std::size_t r = names.size();
  RatMatrix g(r, r);
  // block offset: section at `sec`, chain at sec+1..sec+chain
  for (std::size_t sec : {std::size_t{1}, static_cast<std::size_t>(2 + chain)}) {
    g(0, sec) = g(sec, 0) = 1;
    g(sec, sec) = -n;
    for (long j = 0; j < chain; ++j) {
      std::size_t a = sec + 1 + static_cast<std::size_t>(j);
      g(a, a) = -2;
      if (j + 1 < chain) g(a, a + 1) = g(a + 1, a) = 1;
    }
    if (chain > 0) {
      std::size_t last = sec + static_cast<std::size_t>(chain);
      g(last, sec) = g(sec, last) = 1;
    }
  }
  return IntersectionLattice(std::move(names), std::move(g));
}

ConfigCp horikawa_config(const IntersectionLattice& model, long n, int which) {
  const std::string sec = which == 1 ? "s" : "t";
  const std::string chain = which == 1 ? "a" : "b";
  std::vector<HClass> spheres;
  for (long j = 1; j <= n - 4; ++j) spheres.push_back(HClass::basis(model, chain + std::to_string(j)));
  spheres.push_back(HClass::basis(model, sec));
  return ConfigCp(n - 2, std::move(spheres));
}

ManifoldSeries k3_control_series() {
  RatMatrix g(2, 2);
  g(1, 1) = -4;
  IntersectionLattice l({"f", "sigma"}, g);
  return make_series(ExpKernel::constant(l, 1), 24, -16, 3);
}

BlowdownResult k3_control_blowdown() {
  ManifoldSeries k3 = k3_control_series();
  return p2_blowdown(k3, HClass::basis(k3.kernel.lattice(), "sigma"));
}

// ---------------------------------------------------------------- closed forms

namespace {

CatalogSeries closed_impl(const ManifoldSpec& s) {
  using K = ManifoldSpec::Kind;
  switch (s.kind) {
    case K::Elliptic: {
      const long n = s.n;
      if (s.pairs.size() == 3) {
        IntersectionLattice l = null_lattice(three_pair_names(s.pairs));
        HClass f = HClass::basis(l, 0);
        ExpKernel k = sinh_power(f, n - 2);
        for (std::size_t i = 0; i < 3; ++i)
          k = k * elliptic_factor(HClass::basis(l, i + 1), s.pairs[i].first, s.pairs[i].second, 2);
        return {make_series(k, 12 * n, -8 * n, 2 * n - 1), f};
      }
      const long p = s.pairs.empty() ? 1 : s.pairs[0].first;
      const long q = s.pairs.empty() ? 1 : s.pairs[0].second;
      IntersectionLattice l = null_lattice({refined_name("f", p * q)});
      HClass u = HClass::basis(l, 0);
      ExpKernel k = p * q == 1 ? sinh_power(u, n - 2) : elliptic_factor(u, p, q, n);
      return {make_series(k, 12 * n, -8 * n, 2 * n - 1), Integer(p * q) * u};
    }
    case K::W: {
      IntersectionLattice l = line_lattice("k", s.n);
      return {make_series(pow2(s.n - 1) * cosh_c(HClass::basis(l, 0)), 48 - s.n, s.n - 32, 7),
              std::nullopt};
    }
    case K::Y: {
      IntersectionLattice l = line_lattice("l", s.n - 3);
      HClass x = HClass::basis(l, 0);
      return {make_series(s.n % 2 ? sinh_c(x) : cosh_c(x), 11 * s.n + 3, -7 * s.n - 3, 2 * s.n - 1),
              std::nullopt};
    }
    case K::H: {
      IntersectionLattice l = line_lattice("k", 2 * s.n - 6);
      HClass x = HClass::basis(l, 0);
      ExpKernel k = pow2(s.n - 3) * (s.n % 2 ? sinh_c(x) : cosh_c(x));
      return {make_series(k, 10 * s.n + 6, -6 * s.n - 6, 2 * s.n - 1), std::nullopt};
    }
    case K::Blowup: {
      CatalogSeries c = closed_impl(*s.child);
      ManifoldSeries m = blowup(c.series, s.arg);
      std::optional<HClass> fiber;
      if (c.fiber) fiber = extend_class(*c.fiber, m.kernel.lattice());
      return {m, fiber};
    }
    case K::LogT: {
      CatalogSeries c = closed_impl(*s.child);
      if (!c.fiber) throw Error("no nodal fiber is tracked for " + to_string(*s.child));
      if (s.arg == 1) return c;
      ManifoldSeries m = log_transform(c.series, *c.fiber, s.arg);
      return {m, log_refinement(c.series.kernel.lattice(), *c.fiber, s.arg).fiber};
    }
    case K::HpSum: {
      CatalogSeries c = closed_impl(*s.child);
      c.series.kernel = Rational(s.arg) * c.series.kernel;
      return c;
    }
  }
  throw Error("unhandled spec");
}

// ---------------------------------------------------------------- pipelines

using Trace = std::vector<std::pair<std::string, BlowdownResult>>;

struct Tracked {
  ManifoldSeries series;
  std::vector<HClass> carried;
};

HClass carry_into(const BlowdownResult& r, const HClass& c) {
  return carry_class(r, extend_class(c, *r.ambient));
}

// Nodal log transform of order p on carried[which]; all carried classes follow.
Tracked nodal_step(Tracked t, std::size_t which, long p, Trace* trace, const std::string& label) {
  if (p == 1) return t;
  BlowdownResult r = nodal_log_pipeline(t.series, t.carried.at(which), p);
  std::vector<HClass> carried;
  for (const auto& c : t.carried) carried.push_back(carry_into(r, c));
  Tracked out{r.series, std::move(carried)};
  if (trace) trace->emplace_back(label, std::move(r));
  return out;
}

Tracked taut_step(Tracked t, const ConfigCp& c, Trace* trace, const std::string& label) {
  BlowdownResult r = taut_blowdown(t.series, c);
  std::vector<HClass> carried;
  for (const auto& x : t.carried) carried.push_back(carry_class(r, x));
  Tracked out{r.series, std::move(carried)};
  if (trace) trace->emplace_back(label, std::move(r));
  return out;
}

ManifoldSeries on_line(const ManifoldSeries& m, const std::string& name) {
  ManifoldSeries out{restrict_to_line(m.kernel, name), m.euler, m.signature, m.b_plus,
                     m.simple_type};
  out.validate();
  return out;
}

CatalogSeries pipeline_impl(const ManifoldSpec& s, Trace* trace) {
  using K = ManifoldSpec::Kind;
  switch (s.kind) {
    case K::Elliptic: {
      const long n = s.n;
      if (s.pairs.size() == 3) {
        IntersectionLattice l = null_lattice({"f", "S1", "S2", "S3"});
        Tracked t{make_series(sinh_power(HClass::basis(l, 0), n - 2), 12 * n, -8 * n, 2 * n - 1),
                  {HClass::basis(l, 0), HClass::basis(l, 1), HClass::basis(l, 2),
                   HClass::basis(l, 3)}};
        for (std::size_t i = 0; i < 3; ++i) {
          const auto [p, q] = s.pairs[i];
          std::string tag = "S" + std::to_string(i + 1);
          t = nodal_step(std::move(t), i + 1, p, trace, "nodal p=" + std::to_string(p) + " on " + tag);
          t = nodal_step(std::move(t), i + 1, q, trace, "nodal p=" + std::to_string(q) + " on " + tag);
        }
        return {t.series, t.carried[0]};
      }
      IntersectionLattice l = null_lattice({"f"});
      HClass f = HClass::basis(l, 0);
      Tracked t{make_series(sinh_power(f, n - 2), 12 * n, -8 * n, 2 * n - 1), {f}};
      for (const auto& [p, q] : s.pairs) {
        t = nodal_step(std::move(t), 0, p, trace, "nodal p=" + std::to_string(p));
        t = nodal_step(std::move(t), 0, q, trace, "nodal p=" + std::to_string(q));
      }
      return {t.series, t.carried[0]};
    }
    case K::W: {
      IntersectionLattice l = w_model_lattice();
      std::vector<HClass> sections;
      for (int i = 1; i <= 9; ++i) sections.push_back(HClass::basis(l, "s" + std::to_string(i)));
      Tracked t{make_series(sinh_power(HClass::basis(l, "f"), 2), 48, -32, 7), sections};
      for (long i = 0; i < s.n; ++i) {
        ConfigCp c(2, {t.carried.front()});
        t.carried.erase(t.carried.begin());
        t = taut_step(std::move(t), c, trace, "section s" + std::to_string(i + 1));
      }
      return {on_line(t.series, "k"), std::nullopt};
    }
    case K::Y:
    case K::H: {
      const long n = s.n;
      IntersectionLattice l = horikawa_model_lattice(n);
      ConfigCp second = horikawa_config(l, n, 2);
      Tracked t{make_series(sinh_power(HClass::basis(l, "f"), n - 2), 12 * n, -8 * n, 2 * n - 1),
                second.spheres()};
      t = taut_step(std::move(t), horikawa_config(l, n, 1), trace, "configuration 1");
      if (s.kind == K::Y) return {on_line(t.series, "l"), std::nullopt};
      ConfigCp c2(n - 2, t.carried);
      t.carried.clear();
      t = taut_step(std::move(t), c2, trace, "configuration 2");
      return {on_line(t.series, "k"), std::nullopt};
    }
    case K::Blowup: {
      CatalogSeries c = pipeline_impl(*s.child, trace);
      ManifoldSeries m = blowup(c.series, s.arg);
      std::optional<HClass> fiber;
      if (c.fiber) fiber = extend_class(*c.fiber, m.kernel.lattice());
      return {m, fiber};
    }
    case K::LogT: {
      CatalogSeries c = pipeline_impl(*s.child, trace);
      if (!c.fiber) throw Error("no nodal fiber is tracked for " + to_string(*s.child));
      Tracked t = nodal_step(Tracked{c.series, {*c.fiber}}, 0, s.arg, trace,
                             "nodal p=" + std::to_string(s.arg));
      return {t.series, t.carried[0]};
    }
    case K::HpSum: {
      CatalogSeries c = pipeline_impl(*s.child, trace);
      BlowdownResult r = connected_sum_hp(c.series, s.arg);
      std::optional<HClass> fiber;
      if (c.fiber) fiber = carry_into(r, *c.fiber);
      CatalogSeries out{r.series, fiber};
      if (trace) trace->emplace_back("H_" + std::to_string(s.arg) + " sum", std::move(r));
      return out;
    }
  }
  throw Error("unhandled spec");
}

// ---------------------------------------------------------------- SW

struct TrackedSW {
  SWMap map;
  std::vector<HClass> carried;
};

TrackedSW sw_log_step(TrackedSW t, std::size_t which, long p) {
  if (p == 1) return t;
  const HClass s = t.carried.at(which);
  SWMap m = sw_log_transform(t.map, s, p);
  LogRefinement ref = log_refinement(t.map.lattice, s, p);
  std::vector<HClass> carried;
  for (const auto& c : t.carried) carried.push_back(carry_class(ref, c));
  return {std::move(m), std::move(carried)};
}

TrackedSW sw_taut_step(TrackedSW t, const ConfigCp& c) {
  SWBlowdownResult r = sw_taut_blowdown(t.map, c);
  std::vector<HClass> carried;
  for (const auto& x : t.carried)
    carried.emplace_back(r.map.lattice,
                         integer_coordinates(r.ambient_basis,
                                             std::vector<Rational>(x.coeffs().begin(), x.coeffs().end())));
  return {std::move(r.map), std::move(carried)};
}

SWMap sw_on_line(const SWMap& m, const std::string& name) {
  ExpKernel k(m.lattice);
  for (const auto& [key, v] : m.values) k.add_term(key, Rational(v));
  ExpKernel line = restrict_to_line(k, name);
  SWMap out{line.lattice(), {}, m.euler, m.signature, m.b_plus, m.simple_type};
  for (const auto& [key, v] : line.terms()) out.values[key] = to_integer(v);
  out.validate();
  return out;
}

CatalogSW sw_impl(const ManifoldSpec& s) {
  using K = ManifoldSpec::Kind;
  switch (s.kind) {
    case K::Elliptic: {
      if (s.pairs.size() == 3) {
        IntersectionLattice l = null_lattice({"f", "S1", "S2", "S3"});
        TrackedSW t{sw_en_on(l, HClass::basis(l, 0), s.n),
                    {HClass::basis(l, 0), HClass::basis(l, 1), HClass::basis(l, 2),
                     HClass::basis(l, 3)}};
        for (std::size_t i = 0; i < 3; ++i) {
          t = sw_log_step(std::move(t), i + 1, s.pairs[i].first);
          t = sw_log_step(std::move(t), i + 1, s.pairs[i].second);
        }
        return {t.map, t.carried[0]};
      }
      SWMap m = sw_en(s.n);
      TrackedSW t{m, {HClass::basis(m.lattice, 0)}};
      for (const auto& [p, q] : s.pairs) {
        t = sw_log_step(std::move(t), 0, p);
        t = sw_log_step(std::move(t), 0, q);
      }
      return {t.map, t.carried[0]};
    }
    case K::W: {
      IntersectionLattice l = w_model_lattice();
      std::vector<HClass> sections;
      for (int i = 1; i <= 9; ++i) sections.push_back(HClass::basis(l, "s" + std::to_string(i)));
      TrackedSW t{sw_en_on(l, HClass::basis(l, "f"), 4), sections};
      for (long i = 0; i < s.n; ++i) {
        ConfigCp c(2, {t.carried.front()});
        t.carried.erase(t.carried.begin());
        t = sw_taut_step(std::move(t), c);
      }
      return {sw_on_line(t.map, "k"), std::nullopt};
    }
    case K::Y:
    case K::H: {
      const long n = s.n;
      IntersectionLattice l = horikawa_model_lattice(n);
      TrackedSW t{sw_en_on(l, HClass::basis(l, "f"), n), horikawa_config(l, n, 2).spheres()};
      t = sw_taut_step(std::move(t), horikawa_config(l, n, 1));
      if (s.kind == K::Y) return {sw_on_line(t.map, "l"), std::nullopt};
      ConfigCp c2(n - 2, t.carried);
      t.carried.clear();
      t = sw_taut_step(std::move(t), c2);
      return {sw_on_line(t.map, "k"), std::nullopt};
    }
    case K::Blowup: {
      CatalogSW c = sw_impl(*s.child);
      SWMap m = sw_blowup(c.map, std::vector<long>(static_cast<std::size_t>(s.arg), 0));
      std::optional<HClass> fiber;
      if (c.fiber) fiber = extend_class(*c.fiber, m.lattice);
      return {m, fiber};
    }
    case K::LogT: {
      CatalogSW c = sw_impl(*s.child);
      if (!c.fiber) throw Error("no nodal fiber is tracked for " + to_string(*s.child));
      TrackedSW t = sw_log_step(TrackedSW{c.map, {*c.fiber}}, 0, s.arg);
      return {t.map, t.carried[0]};
    }
    case K::HpSum:
      throw Error("SW data for " + to_string(s) + " is outside the covered family");
  }
  throw Error("unhandled spec");
}

}  // namespace

CatalogSeries donaldson_closed_form(const ManifoldSpec& s) {
  check_spec(s);
  return closed_impl(s);
}

CatalogSeries donaldson_pipeline(const ManifoldSpec& s) {
  check_spec(s);
  return pipeline_impl(s, nullptr);
}

std::vector<std::pair<std::string, BlowdownResult>> pipeline_blowdowns(const ManifoldSpec& s) {
  check_spec(s);
  Trace trace;
  pipeline_impl(s, &trace);
  return trace;
}

CatalogSW sw_closed_form(const ManifoldSpec& s) {
  check_spec(s);
  return sw_impl(s);
}

// ---------------------------------------------------------------- audit

AuditReport adjunction_audit(const ManifoldSpec& s) {
  check_spec(s);
  ManifoldSeries m = closed_impl(s).series;
  AuditReport r;
  r.spec = to_string(s);
  r.euler = m.euler;
  r.signature = m.signature;
  r.b_plus = m.b_plus;
  r.c1_squared = 2 * m.euler + 3 * m.signature;
  r.c2 = m.euler;
  r.noether = 5 * r.c1_squared - r.c2 + 36;
  r.bisecting = 11 * r.c1_squared - r.c2 + 36;
  if (r.noether == 0) r.line = "noether";
  else if (r.bisecting == 0) r.line = "bisecting";

  const IntersectionLattice& l = m.kernel.lattice();
  bool ok = true;
  for (auto it = m.kernel.terms().rbegin(); it != m.kernel.terms().rend(); ++it) {
    AuditClass c{format_class(l, it->first), l.pair(it->first, it->first), false};
    c.simple_type = c.square == r.c1_squared;
    ok = ok && c.simple_type;
    r.classes.push_back(std::move(c));
  }

  using K = ManifoldSpec::Kind;
  auto audit_spheres = [&](const ManifoldSeries& model, const std::vector<HClass>& spheres) {
    for (const auto& u : spheres) {
      ++r.spheres_checked;
      r.adjunction_violations += static_cast<long>(check_adjunction(model, u, 0).size());
    }
  };
  if (s.kind == K::W) {
    IntersectionLattice w = w_model_lattice();
    ManifoldSeries e4 = make_series(sinh_power(HClass::basis(w, "f"), 2), 48, -32, 7);
    std::vector<HClass> sections;
    for (int i = 1; i <= 9; ++i) sections.push_back(HClass::basis(w, "s" + std::to_string(i)));
    audit_spheres(e4, sections);
  } else if (s.kind == K::Y || s.kind == K::H) {
    IntersectionLattice h = horikawa_model_lattice(s.n);
    ManifoldSeries en = make_series(sinh_power(HClass::basis(h, "f"), s.n - 2), 12 * s.n,
                                    -8 * s.n, 2 * s.n - 1);
    audit_spheres(en, horikawa_config(h, s.n, 1).spheres());
    audit_spheres(en, horikawa_config(h, s.n, 2).spheres());
  }
  ok = ok && r.adjunction_violations == 0;
  if (s.kind == K::H) ok = ok && r.noether == 0;
  if (s.kind == K::Y) ok = ok && r.bisecting == 0;
  r.pass = ok;
  return r;
}

}  // namespace ratblow
