#include "ratblow/moduli.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>

namespace ratblow {

Rational e_square(long p, long t, long b) {
  if (p < 2) throw Error("e_square needs p >= 2");
  if (b < 1 || b > p - 1) throw Error("e_square needs 1 <= b <= p-1");
  if (t < 0) throw Error("e_square needs t >= 0");
  long num = b * b + b * b * p - b * p * p - 2 * b * t + t * t - p * t * t;
  return make_rational(num, p * p);
}

Rational general_e_square(const RelClassCp& e) { return rel_pairing(e, e); }

std::pair<long, long> canonical_for_residue(long p, long m) {
  if (p < 2) throw Error("canonical_for_residue needs p >= 2");
  m = floor_mod(m, p * p);
  if (m == 0) throw Error("residue 0 has no canonical class");
  long t = (m - 1) / (p - 1);
  return {t, m - (p - 1) * t};
}

Rational dim_correction(long p, long m) {
  m = floor_mod(m, p * p);
  if (m == 0) return 1;
  auto [t, b] = canonical_for_residue(p, m);
  return -2 * e_square(p, t, b) - 2 - (2 * t - 1);
}

long dim_moduli(const RelClassCp& e) {
  Rational d = -2 * general_e_square(e) - 2 - dim_correction(e.p, boundary(e).value);
  if (!is_integer(d)) throw Error("non-integral moduli dimension " + d.get_str());
  return to_long(d.get_num());
}

DimReport dim_report(const RelClassCp& e) {
  DimReport r{basis_convert(e, RelBasis::Delta), general_e_square(e), boundary(e), 0, 0};
  r.boundary_class = boundary_residue_class(r.boundary);
  r.dim = dim_moduli(e);
  return r;
}

Rational lawson_half_rho_printed(long p, long t, long b) {
  long inner = -2 * b * b - 2 * b * b * p - p * p + 2 * b * p * p + 4 * b * t - 2 * p * p * t -
               2 * t * t + 2 * p * t * t;
  return make_rational(-inner, p * p);
}

Rational dim_from_printed_rho(long p, long t, long b, int sign) {
  return -2 * e_square(p, t, b) - 2 - sign * lawson_half_rho_printed(p, t, b);
}

namespace {

// Integer tables for the exhaustive scans. All values are multiplied by p^2
// where needed so no rational arithmetic happens in the inner loops.
struct Scanner {
  long p;
  long n;
  long box;
  long side;
  std::int64_t count;
  std::vector<std::int64_t> corr_scaled;  // p^2 * corr(p, m)

  Scanner(long p_, long box_) : p(p_), n(p_ - 1), box(box_), side(2 * box_ + 1), count(1) {
    if (box < 1) throw Error("search box must be at least 1");
    for (long i = 0; i < n; ++i) count *= side;
    corr_scaled.resize(static_cast<std::size_t>(p * p));
    for (long m = 0; m < p * p; ++m) {
      Rational c = dim_correction(p, m) * (p * p);
      corr_scaled[static_cast<std::size_t>(m)] = to_long(to_integer(c));
    }
  }

  void decode(std::int64_t idx, std::vector<long>& x) const {
    x.resize(static_cast<std::size_t>(n));
    for (long i = n - 1; i >= 0; --i) {
      x[static_cast<std::size_t>(i)] = static_cast<long>(idx % side) - box;
      idx /= side;
    }
  }

  long sum(const std::vector<long>& x) const {
    long s = 0;
    for (long v : x) s += v;
    return s;
  }

  long dim(const std::vector<long>& x) const {
    std::int64_t sq = 0, cross = 0, s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sq += static_cast<std::int64_t>(x[i]) * x[i];
      s += x[i];
    }
    cross = (s * s - sq) / 2;
    std::int64_t q = -(p * p - p - 1) * sq + 2 * (p + 1) * cross;  // p^2 e^2
    std::int64_t scaled = -2 * q - 2 * p * p - corr_scaled[static_cast<std::size_t>(floor_mod(static_cast<long>(s), p * p))];
    if (scaled % (p * p) != 0) throw Error("non-integral moduli dimension in scan");
    return static_cast<long>(scaled / (p * p));
  }

  unsigned parity_mask(const std::vector<long>& x) const {
    unsigned m = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] & 1) m |= 1u << i;
    return m;
  }
};

struct Entry {
  long sum;
  long dim;
  unsigned parity;
};

std::vector<Entry> tabulate(const Scanner& sc, unsigned threads) {
  std::vector<Entry> table(static_cast<std::size_t>(sc.count));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, sc.count));
  auto work = [&](std::int64_t lo, std::int64_t hi) {
    std::vector<long> x;
    for (std::int64_t i = lo; i < hi; ++i) {
      sc.decode(i, x);
      table[static_cast<std::size_t>(i)] = Entry{sc.sum(x), sc.dim(x), sc.parity_mask(x)};
    }
  };
  std::vector<std::jthread> pool;
  const std::int64_t chunk = (sc.count + threads - 1) / threads;
  for (unsigned k = 0; k < threads; ++k) {
    std::int64_t lo = k * chunk, hi = std::min(sc.count, lo + chunk);
    if (lo < hi) pool.emplace_back(work, lo, hi);
  }
  pool.clear();
  return table;
}

long residue_class(long s, long p) {
  long m = floor_mod(s, p * p);
  return std::min(m, p * p - m);
}

constexpr std::size_t kMaxCounterexamples = 10;

}  // namespace

MinDimResult min_dim_search(long p, const Residue& m, const RelClassCp& parity_of, long box) {
  if (m.modulus != p * p) throw Error("boundary residue must be taken mod p^2");
  if (parity_of.p != p) throw Error("parity class has a different p");
  Scanner sc(p, box);
  RelClassCp pd = basis_convert(parity_of, RelBasis::Delta);
  unsigned want = sc.parity_mask(pd.coords);
  MinDimResult out;
  bool found = false;
  std::vector<long> x;
  for (std::int64_t i = 0; i < sc.count; ++i) {
    sc.decode(i, x);
    if (floor_mod(sc.sum(x), p * p) != m.value || sc.parity_mask(x) != want) continue;
    long d = sc.dim(x);
    if (!found || d < out.min_dim) {
      out.min_dim = d;
      out.minimizers.clear();
      found = true;
    }
    if (d == out.min_dim) out.minimizers.emplace_back(p, x);
  }
  if (!found) throw Error("empty search set");
  return out;
}

bool BvReport::pass() const {
  return std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaReport& r) { return r.pass; });
}

BvReport verify_bv_lemmas(long p, long t_max, long box, unsigned threads) {
  if (p < 2 || t_max < 0 || box < 1) throw Error("verify_bv_lemmas: invalid parameters");
  Scanner sc(p, box);
  std::vector<Entry> table = tabulate(sc, threads);

  const char* names[4] = {"larger boundary lift raises dimension",
                          "equal boundary minimizers are permutations",
                          "mod 2 minimizers have the smallest boundary class",
                          "equal boundary class dimensions differ by 4k"};
  BvReport report;
  for (const char* nm : names) report.lemmas.push_back(LemmaReport{nm, p, t_max, box, true, 0, 0, {}});

  auto record = [&](int which, const std::vector<long>& e, std::int64_t idx, long de, long dx) {
    LemmaReport& r = report.lemmas[static_cast<std::size_t>(which)];
    r.pass = false;
    ++r.violations;
    if (r.counterexamples.size() < kMaxCounterexamples) {
      std::vector<long> x;
      sc.decode(idx, x);
      r.counterexamples.push_back(Counterexample{e, x, de, dx});
    }
  };

  const long pp = p * p;
  std::vector<long> x;
  for (long t = 0; t <= t_max; ++t)
    for (long b = 1; b <= p - 1; ++b) {
      const long m = (p - 1) * t + b;
      if (2 * m > pp) continue;
      RelClassCp ec = RelClassCp::canonical(p, t, b);
      const long de = sc.dim(ec.coords);
      const unsigned pe = sc.parity_mask(ec.coords);
      const long bpe = residue_class(m, p);
      std::vector<long> sorted_e = ec.coords;
      std::sort(sorted_e.begin(), sorted_e.end());
      for (std::int64_t i = 0; i < sc.count; ++i) {
        const Entry& en = table[static_cast<std::size_t>(i)];
        if (floor_mod(en.sum - m, pp) == 0) {
          long r = (en.sum - m) / pp;
          if (r != 0 && r != -1) {
            ++report.lemmas[0].checked;
            if (!(en.dim > de)) record(0, ec.coords, i, de, en.dim);
          }
        }
        if (en.sum == m && en.dim <= de) {
          sc.decode(i, x);
          if (x != ec.coords) {
            ++report.lemmas[1].checked;
            std::sort(x.begin(), x.end());
            if (x != sorted_e) record(1, ec.coords, i, de, en.dim);
          }
        }
        if (en.parity == pe) {
          const long bpx = residue_class(en.sum, p);
          if (en.dim <= de) {
            ++report.lemmas[2].checked;
            if (!(bpx <= bpe)) record(2, ec.coords, i, de, en.dim);
          }
          if (bpx == bpe) {
            ++report.lemmas[3].checked;
            long diff = en.dim - de;
            if (diff < 0 || diff % 4 != 0) record(3, ec.coords, i, de, en.dim);
          }
        }
      }
    }
  return report;
}

Mod2Lift mod2_lift_exists(const RelClassCp& e) {
  const long n = e.p - 1;
  RelClassCp g = basis_convert(e, RelBasis::Gamma);
  RatMatrix P = plumbing_matrix(e.p);
  // Augmented system over GF(2).
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n + 1)));
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j)
      a[i][j] = mpz_odd_p(P(i, j).get_num_mpz_t()) ? 1 : 0;
    a[i][n] = static_cast<int>(floor_mod(g.coords[static_cast<std::size_t>(i)], 2));
  }
  std::vector<long> pivot_col;
  long r = 0;
  for (long c = 0; c < n && r < n; ++c) {
    long piv = r;
    while (piv < n && !a[piv][c]) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[r]);
    for (long i = 0; i < n; ++i)
      if (i != r && a[i][c])
        for (long j = 0; j <= n; ++j) a[i][j] ^= a[r][j];
    pivot_col.push_back(c);
    ++r;
  }
  Mod2Lift out;
  for (long i = r; i < n; ++i)
    if (a[i][n]) return out;
  out.exists = true;
  out.witness.assign(static_cast<std::size_t>(n), 0);
  for (long i = 0; i < r; ++i) out.witness[static_cast<std::size_t>(pivot_col[i])] = a[i][n];
  return out;
}

}  // namespace ratblow
