#include "monalg/lp.hpp"

#include "monalg/errors.hpp"

namespace monalg {

namespace {

// Dense tableau. Row 0 holds reduced costs (z - c.y), column `rhs` holds the basic values.
class Tableau {
public:
  Tableau(std::size_t rows, std::size_t cols) : t_(rows + 1, RatVector(cols + 1, 0)), basis_(rows), rhs_(cols) {}

  Rational& at(std::size_t i, std::size_t j) { return t_[i][j]; }
  Rational& rhs(std::size_t i) { return t_[i][rhs_]; }
  std::size_t& basic(std::size_t row) { return basis_[row - 1]; }
  std::size_t rows() const { return basis_.size(); }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / t_[r][c];
    for (auto& x : t_[r]) x *= inv;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j <= rhs_; ++j)
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
    }
    basis_[r - 1] = c;
  }

  // Bland's rule over columns [0, allowed). Returns false when unbounded.
  bool optimize(std::size_t allowed) {
    while (true) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j)
        if (t_[0][j] < 0) {
          enter = j;
          break;
        }
      if (enter == allowed) return true;
      std::size_t leave = 0;
      Rational best;
      for (std::size_t i = 1; i <= rows(); ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][rhs_] / t_[i][enter];
        if (leave == 0 || ratio < best || (ratio == best && basis_[i - 1] < basis_[leave - 1])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == 0) return false;
      pivot(leave, enter);
    }
  }

  // Recomputes the objective row for costs c (maximization).
  void set_objective(const RatVector& c) {
    auto& z = t_[0];
    std::fill(z.begin(), z.end(), Rational(0));
    for (std::size_t j = 0; j < c.size(); ++j) z[j] = -c[j];
    for (std::size_t i = 1; i <= rows(); ++i) {
      const std::size_t b = basis_[i - 1];
      if (b >= c.size() || c[b] == 0) continue;
      const Rational f = z[b];
      for (std::size_t j = 0; j <= rhs_; ++j) z[j] -= f * t_[i][j];
    }
  }

private:
  std::vector<RatVector> t_;
  std::vector<std::size_t> basis_;
  std::size_t rhs_;
};

}  // namespace

LpResult lp_maximize(const RatMatrix& a, const RatVector& b, const RatVector& c) {
  const std::size_t m = a.size(), n = c.size();
  require(b.size() == m, "lp: right-hand side has the wrong length");
  for (const auto& row : a) require(row.size() == n, "lp: constraint row has the wrong length");

  std::vector<int> sign(m, 1);
  std::size_t artificials = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0) {
      sign[i] = -1;
      ++artificials;
    }
  // Columns: y (n), slacks (m), artificials.
  const std::size_t cols = n + m + artificials;
  Tableau t(m, cols);
  std::size_t next_art = n + m;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.at(i + 1, j) = sign[i] * a[i][j];
    t.at(i + 1, n + i) = sign[i];
    t.rhs(i + 1) = sign[i] * b[i];
    if (sign[i] < 0) {
      t.at(i + 1, next_art) = 1;
      t.basic(i + 1) = next_art++;
    } else {
      t.basic(i + 1) = n + i;
    }
  }

  LpResult out;
  if (artificials > 0) {
    RatVector phase1(cols, 0);
    for (std::size_t j = n + m; j < cols; ++j) phase1[j] = -1;
    t.set_objective(phase1);
    t.optimize(cols);
    if (t.rhs(0) != 0) return out;  // infeasible
    for (std::size_t i = 1; i <= m; ++i) {
      if (t.basic(i) < n + m) continue;
      for (std::size_t j = 0; j < n + m; ++j)
        if (t.at(i, j) != 0) {
          t.pivot(i, j);
          break;
        }
    }
  }
  RatVector cost(cols, 0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  t.set_objective(cost);
  if (!t.optimize(n + m)) {
    out.status = LpStatus::unbounded;
    return out;
  }

  out.status = LpStatus::optimal;
  out.value = t.rhs(0);
  out.primal.assign(n, 0);
  for (std::size_t i = 1; i <= m; ++i)
    if (t.basic(i) < n) out.primal[t.basic(i)] = t.rhs(i);
  out.dual.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) out.dual[i] = t.at(0, n + i);  // row negation flips both slack and dual

  // Certificate: primal and dual feasibility and equal objective values.
  Rational primal_value = 0, dual_value = 0;
  for (std::size_t j = 0; j < n; ++j) {
    check_consistency(out.primal[j] >= 0, "lp: negative primal entry");
    primal_value += c[j] * out.primal[j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    check_consistency(out.dual[i] >= 0, "lp: negative dual entry");
    Rational lhs = 0;
    for (std::size_t j = 0; j < n; ++j) lhs += a[i][j] * out.primal[j];
    check_consistency(lhs <= b[i], "lp: primal infeasible");
    dual_value += out.dual[i] * b[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational col = 0;
    for (std::size_t i = 0; i < m; ++i) col += out.dual[i] * a[i][j];
    check_consistency(col >= c[j], "lp: dual infeasible");
  }
  check_consistency(primal_value == out.value && dual_value == out.value, "lp: duality gap");
  return out;
}

LpOptimum lp_optimize(const IntMatrix& a, const IntVector& alpha, LpSense sense) {
  const std::size_t s = a.size();
  require(s > 0 && alpha.size() == s, "lp: shape mismatch");
  const std::size_t m = a[0].size();
  LpResult r = lp_maximize(to_rational(a), RatVector(alpha.begin(), alpha.end()), RatVector(m, 1));
  require(r.status == LpStatus::optimal,
          r.status == LpStatus::unbounded ? "lp: unbounded" : "lp: infeasible");
  if (sense == LpSense::max) return {r.value, r.primal};
  return {r.value, r.dual};
}

}  // namespace monalg
