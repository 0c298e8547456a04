#include "monalg/matrix.hpp"

#include <algorithm>
#include <utility>

#include "monalg/errors.hpp"

namespace monalg {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t(a[0].size(), IntVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, IntVector(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

IntVector multiply(const IntMatrix& a, const IntVector& x) {
  IntVector y(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
  return y;
}

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i].assign(a[i].begin(), a[i].end());
  return r;
}

namespace {

// Bareiss elimination in place; returns rank. The last pivot is the determinant
// (up to the sign recorded in *sign) when the matrix is square and non-singular.
std::size_t bareiss(IntMatrix& m, int* sign) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  Integer prev = 1;
  std::size_t r = 0;
  if (sign) *sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      if (sign) *sign = -*sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& a) {
  IntMatrix m = a;
  return bareiss(m, nullptr);
}

std::size_t rank(const RatMatrix& a) {
  std::vector<std::size_t> piv;
  rref(a, &piv);
  return piv.size();
}

Integer determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a) require(row.size() == n, "determinant needs a square matrix");
  if (n == 0) return 1;
  IntMatrix m = a;
  int sign = 1;
  if (bareiss(m, &sign) < n) return 0;
  return sign * m[n - 1][n - 1];
}

RatMatrix rref(RatMatrix a, std::vector<std::size_t>* pivots) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return a;
}

std::vector<IntVector> nullspace(const IntMatrix& a, std::size_t columns) {
  std::vector<std::size_t> piv;
  RatMatrix r = rref(to_rational(a), &piv);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(columns, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r[i][f];
    IntVector w = clear_denominators(v);
    make_primitive(w);
    basis.push_back(std::move(w));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  RatMatrix aug = a;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  std::vector<std::size_t> piv;
  RatMatrix r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  RatVector x(cols, 0);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r[i][cols];
  return x;
}

RatMatrix inverse(const RatMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix aug(n, RatVector(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    require(a[i].size() == n, "inverse needs a square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  std::vector<std::size_t> piv;
  RatMatrix r = rref(aug, &piv);
  require(piv.size() == n && (n == 0 || piv.back() == n - 1), "matrix is singular");
  RatMatrix inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = r[i][n + j];
  return inv;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  IntMatrix m = a;
  SmithForm out;
  out.p = identity_matrix(rows);
  out.p_inverse = identity_matrix(rows);
  out.q = identity_matrix(cols);

  // Row op: row_i += f * row_j (and the inverse column op on P^{-1}).
  auto add_row = [&](std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t c = 0; c < cols; ++c) m[i][c] += f * m[j][c];
    for (std::size_t c = 0; c < rows; ++c) out.p[i][c] += f * out.p[j][c];
    for (std::size_t r = 0; r < rows; ++r) out.p_inverse[r][j] -= f * out.p_inverse[r][i];
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(m[i], m[j]);
    std::swap(out.p[i], out.p[j]);
    for (std::size_t r = 0; r < rows; ++r) std::swap(out.p_inverse[r][i], out.p_inverse[r][j]);
  };
  auto add_col = [&](std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t r = 0; r < rows; ++r) m[r][i] += f * m[r][j];
    for (std::size_t r = 0; r < cols; ++r) out.q[r][i] += f * out.q[r][j];
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][i], m[r][j]);
    for (std::size_t r = 0; r < cols; ++r) std::swap(out.q[r][i], out.q[r][j]);
  };

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest non-zero entry of the trailing block becomes the pivot.
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (bi == rows || abs(m[i][j]) < abs(m[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) break;
      swap_rows(t, bi);
      swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        add_row(i, t, -q);
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        add_col(j, t, -q);
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the trailing block by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row(t, bad, 1);
    }
    if (m[t][t] == 0) break;
    if (m[t][t] < 0) {
      for (std::size_t c = 0; c < cols; ++c) m[t][c] = -m[t][c];
      for (std::size_t c = 0; c < rows; ++c) out.p[t][c] = -out.p[t][c];
      for (std::size_t r = 0; r < rows; ++r) out.p_inverse[r][t] = -out.p_inverse[r][t];
    }
    out.diagonal.push_back(m[t][t]);
  }
  out.rank = out.diagonal.size();
  return out;
}

SmithInvariant smith_invariant(const IntMatrix& b, std::optional<std::size_t> r) {
  SmithForm sf = smith_normal_form(b);
  require(sf.rank > 0, "smith invariant of a zero matrix");
  const std::size_t k = r.value_or(sf.rank);
  require(k >= 1 && k <= sf.rank, "requested minor size exceeds the rank");
  SmithInvariant out{1, sf.rank};
  for (std::size_t i = 0; i < k; ++i) out.value *= sf.diagonal[i];
  return out;
}

}  // namespace monalg
