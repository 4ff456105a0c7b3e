#include "oracles.hpp"

#include <stdexcept>

namespace oracle {

Dense gauss_inverse(Dense m) {
  const std::size_t n = m.size();
  Dense inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Dense multiply(const Dense& a, const Dense& b) {
  Dense c(a.size(), std::vector<Rational>(b.at(0).size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

bool is_identity(const Dense& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

Dense chain_matrix(long p) {
  const std::size_t n = static_cast<std::size_t>(p - 1);
  Dense m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = -2;
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = 1;
  }
  m[n - 1][n - 1] = -(p + 2);
  return m;
}

namespace {
void clean(Laurent& a) {
  for (auto it = a.begin(); it != a.end();) it = it->second == 0 ? a.erase(it) : std::next(it);
}
}  // namespace

Laurent sinh_poly(long a) {
  Laurent r;
  if (a == 0) return r;
  r[a] += ratblow::make_rational(1, 2);
  r[-a] -= ratblow::make_rational(1, 2);
  return r;
}

Laurent cosh_poly(long a) {
  Laurent r;
  r[a] += ratblow::make_rational(1, 2);
  r[-a] += ratblow::make_rational(1, 2);
  return r;
}

Laurent mul(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) r[i + j] += x * y;
  clean(r);
  return r;
}

Laurent power(const Laurent& a, unsigned n) {
  Laurent r{{0, Rational(1)}};
  for (unsigned i = 0; i < n; ++i) r = mul(r, a);
  return r;
}

std::optional<Laurent> divide(const Laurent& num, const Laurent& den) {
  if (den.empty()) return std::nullopt;
  Laurent rem = num, q;
  const auto [dtop, dlead] = *den.rbegin();
  const long min_shift = num.empty() ? 0 : num.begin()->first - den.begin()->first;
  while (!rem.empty()) {
    const auto [rtop, rlead] = *rem.rbegin();
    const long shift = rtop - dtop;
    if (shift < min_shift) return std::nullopt;
    Rational c = rlead / dlead;
    q[shift] += c;
    for (const auto& [e, v] : den) rem[e + shift] -= c * v;
    clean(rem);
  }
  clean(q);
  return q;
}

Laurent elliptic_kernel(long n, long p, long q) {
  Laurent num = power(sinh_poly(p * q), static_cast<unsigned>(n));
  auto a = divide(num, sinh_poly(q));
  if (!a) throw std::runtime_error("inexact");
  auto b = divide(*a, sinh_poly(p));
  if (!b) throw std::runtime_error("inexact");
  return *b;
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::map<long, Integer> sw_elliptic(long n) {
  std::map<long, Integer> m;
  for (long r = 0; r <= n - 2; ++r) m[n - 2 - 2 * r] = (r % 2 ? -1 : 1) * binomial(n - 2, r);
  return m;
}

std::optional<long> fit_witten_exponent(long n) {
  const Laurent d = power(sinh_poly(1), static_cast<unsigned>(n - 2));
  const auto sw = sw_elliptic(n);
  if (d.size() != sw.size()) return std::nullopt;
  std::optional<long> c;
  for (const auto& [k, v] : sw) {
    auto it = d.find(k);
    if (it == d.end()) return std::nullopt;
    Rational ratio = it->second / Rational(v);
    if (ratio <= 0) return std::nullopt;
    Integer num = ratio.get_num(), den = ratio.get_den();
    long e = 0;
    if (num == 1) {
      while (den % 2 == 0) { den /= 2; --e; }
      if (den != 1) return std::nullopt;
    } else if (den == 1) {
      while (num % 2 == 0) { num /= 2; ++e; }
      if (num != 1) return std::nullopt;
    } else {
      return std::nullopt;
    }
    if (c && *c != e) return std::nullopt;
    c = e;
  }
  return c;
}

Rational delta_pairing(long p, std::size_t i, std::size_t j) {
  Rational r = i == j ? ratblow::make_rational(-(p * p - p - 1), p * p) : ratblow::make_rational(p + 1, p * p);
  r.canonicalize();
  return r;
}

}  // namespace oracle
