#include "ratblow/matrix.hpp"

#include <algorithm>
#include <utility>

namespace ratblow {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

namespace {

// Reduces [m | aug] in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  if (rref(a, n).size() != n) throw Error("singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
  return inv;
}

std::vector<Rational> solve(const RatMatrix& m, const std::vector<Rational>& rhs) {
  if (m.rows() != m.cols() || rhs.size() != m.rows()) throw Error("solve: shape mismatch");
  const std::size_t n = m.rows();
  RatMatrix a(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n) = rhs[i];
  }
  if (rref(a, n).size() != n) throw Error("singular system");
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a(i, n);
  return x;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

IntMatrix row_hnf(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  auto combine = [&](std::size_t i, std::size_t k, const Integer& x, const Integer& y,
                     const Integer& u, const Integer& v) {
    // row_i <- x*row_i + y*row_k, row_k <- u*row_i + v*row_k (determinant +-1)
    for (std::size_t j = 0; j < cols; ++j) {
      Integer ai = a(i, j), ak = a(k, j);
      a(i, j) = x * ai + y * ak;
      a(k, j) = u * ai + v * ak;
    }
  };
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (std::size_t k = r + 1; k < rows; ++k) {
      if (a(k, c) == 0) continue;
      if (a(r, c) == 0) {
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(k, j));
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(r, c).get_mpz_t(),
                 a(k, c).get_mpz_t());
      Integer ar = a(r, c) / g, ak = a(k, c) / g;
      combine(r, k, s, t, -ak, ar);
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0)
      for (std::size_t j = 0; j < cols; ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= q * a(r, j);
    }
    ++r;
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  return out;
}

IntMatrix integer_left_kernel(const IntMatrix& m) {
  const std::size_t n = m.rows(), k = m.cols();
  IntMatrix aug(n, k + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = m(i, j);
    aug(i, k + i) = 1;
  }
  IntMatrix h = row_hnf(aug);
  std::vector<std::vector<Integer>> kernel;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < k && zero; ++j) zero = h(i, j) == 0;
    if (!zero) continue;
    std::vector<Integer> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = h(i, k + j);
    kernel.push_back(std::move(row));
  }
  IntMatrix out(kernel.size(), n);
  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = kernel[i][j];
  return out;
}

RatMatrix rational_span_basis(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return RatMatrix();
  const std::size_t n = rows.front().size();
  Integer den = 1;
  for (const auto& row : rows) {
    if (row.size() != n) throw Error("span: ragged rows");
    for (const auto& v : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  }
  IntMatrix scaled(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) = to_integer(rows[i][j] * den);
  IntMatrix h = row_hnf(scaled);
  RatMatrix out(h.rows(), n);
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = Rational(h(i, j), den);
      out(i, j).canonicalize();
    }
  return out;
}

std::vector<Integer> integer_coordinates(const RatMatrix& basis, const std::vector<Rational>& v) {
  const std::size_t k = basis.rows(), n = basis.cols();
  if (v.size() != n) throw Error("coordinates: length mismatch");
  // Solve basis^T c = v.
  RatMatrix a(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = basis(j, i);
    a(i, k) = v[i];
  }
  auto pivots = rref(a, k);
  if (pivots.size() != k) throw Error("coordinates: basis rows are dependent");
  for (std::size_t i = k; i < n; ++i)
    if (a(i, k) != 0) throw Error("class is not in the span of the basis");
  std::vector<Integer> c(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (!is_integer(a(i, k))) throw Error("class is not integral in the basis");
    c[i] = a(i, k).get_num();
  }
  return c;
}

}  // namespace ratblow
