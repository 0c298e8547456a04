#include "monalg/codes.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "monalg/errors.hpp"

namespace monalg {

namespace {

// Low coefficients c_0..c_{n-1} of the monic irreducible x^n + ... used for q = p^n.
std::vector<int> modulus_for(int q) {
  switch (q) {
    case 4: return {1, 1};     // x^2 + x + 1
    case 8: return {1, 1, 0};  // x^3 + x + 1
    case 9: return {1, 0};     // x^2 + 1
    default: return {};
  }
}

std::vector<int> digits(int a, int p, std::size_t n) {
  std::vector<int> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

int poly_mul(int a, int b, int p, const std::vector<int>& low) {
  const std::size_t n = std::max<std::size_t>(low.size(), 1);
  if (low.empty()) return (a * b) % p;
  auto x = digits(a, p, n), y = digits(b, p, n);
  std::vector<int> prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  // x^n = -(c_0 + c_1 x + ... + c_{n-1} x^{n-1})
  for (std::size_t k = prod.size(); k-- > n;) {
    const int c = prod[k];
    prod[k] = 0;
    for (std::size_t i = 0; i < n; ++i) prod[k - n + i] = ((prod[k - n + i] - c * low[i]) % p + p) % p;
  }
  prod.resize(n);
  return from_digits(prod, p);
}

std::int64_t checked_power(std::int64_t base, std::size_t e, std::size_t limit, const char* what) {
  std::int64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    v *= base;
    if (v > static_cast<std::int64_t>(limit)) throw BudgetExceeded(what);
  }
  return v;
}

// Calls visit(rows) for every r x k matrix in reduced row echelon form over F_q,
// i.e. once per r-dimensional subspace of F_q^k.
void for_each_subspace(const FiniteField& f, std::size_t k, std::size_t r, std::size_t limit,
                       const std::function<void(const std::vector<FqVector>&)>& visit) {
  const int q = f.order();
  // Gaussian binomial [k choose r]_q, bounded by limit.
  {
    Integer num = 1, den = 1;
    for (std::size_t i = 0; i < r; ++i) {
      Integer a, b;
      mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(q), k - i);
      mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(q), i + 1);
      num *= a - 1;
      den *= b - 1;
    }
    if (Integer(num / den) > static_cast<unsigned long>(limit))
      throw BudgetExceeded("subcode enumeration exceeds max_points");
  }
  std::vector<std::size_t> pivots(r);
  std::vector<FqVector> rows(r, FqVector(k, 0));
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t i, std::size_t from) {
    if (i == r) {
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t a = 0; a < r; ++a) {
        std::fill(rows[a].begin(), rows[a].end(), 0);
        rows[a][pivots[a]] = 1;
        for (std::size_t j = pivots[a] + 1; j < k; ++j)
          if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free.emplace_back(a, j);
      }
      std::vector<int> value(free.size(), 0);
      while (true) {
        for (std::size_t t = 0; t < free.size(); ++t) rows[free[t].first][free[t].second] = value[t];
        visit(rows);
        std::size_t t = 0;
        while (t < value.size() && ++value[t] == q) value[t++] = 0;
        if (t == value.size()) break;
      }
      return;
    }
    for (std::size_t c = from; c + (r - i) <= k; ++c) {
      pivots[i] = c;
      choose(i + 1, c + 1);
    }
  };
  choose(0, 0);
}

int evaluate_monomial(const FiniteField& f, const ExponentVector& a, const FqVector& point) {
  int v = 1;
  for (std::size_t i = 0; i < point.size(); ++i) v = f.mul(v, f.pow(point[i], a[i]));
  return v;
}

std::vector<FqVector> evaluation_matrix(const PointSet& x, std::size_t d) {
  std::vector<FqVector> rows;
  for (const auto& a : monomials_of_degree(x.num_vars(), d)) {
    FqVector row;
    for (const auto& p : x.points()) row.push_back(evaluate_monomial(x.field(), a, p));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
  require(q == 2 || q == 3 || q == 4 || q == 5 || q == 7 || q == 8 || q == 9,
          "field order must be one of 2, 3, 4, 5, 7, 8, 9");
  p_ = (q % 2 == 0) ? 2 : (q % 3 == 0 ? 3 : q);
  const auto low = modulus_for(q);
  const std::size_t n = std::max<std::size_t>(low.size(), 1);
  add_.assign(q, std::vector<int>(q));
  neg_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    auto x = digits(a, p_, n);
    std::vector<int> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = (p_ - x[i]) % p_;
    neg_[a] = from_digits(m, p_);
    for (int b = 0; b < q; ++b) {
      auto y = digits(b, p_, n);
      std::vector<int> s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = (x[i] + y[i]) % p_;
      add_[a][b] = from_digits(s, p_);
    }
  }
  log_.assign(q, -1);
  for (int g = 1; g < q; ++g) {
    std::vector<int> powers{1};
    for (int e = 1; e < q - 1; ++e) powers.push_back(poly_mul(powers.back(), g, p_, low));
    std::set<int> distinct(powers.begin(), powers.end());
    if (static_cast<int>(distinct.size()) != q - 1) continue;
    exp_ = powers;
    exp_.insert(exp_.end(), powers.begin(), powers.end());
    for (int e = 0; e < q - 1; ++e) log_[powers[e]] = e;
    break;
  }
  check_consistency(!exp_.empty(), "no primitive element found");
  check_consistency(poly_mul(exp_[q - 2], exp_[1], p_, low) == 1, "primitive element has the wrong order");
}

int FiniteField::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

int FiniteField::inv(int a) const {
  require(a != 0, "zero has no inverse");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int FiniteField::pow(int a, std::int64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::int64_t>(log_[a]) * e) % (q_ - 1)];
}

PointSet::PointSet(int q, std::size_t s, std::vector<FqVector> points) : field_(q), s_(s) {
  require(s >= 1, "points need at least one coordinate");
  require(!points.empty(), "a point set needs points");
  std::set<FqVector> seen;
  for (auto& p : points) {
    require(p.size() == s, "point has the wrong number of coordinates");
    for (int c : p) require(c >= 0 && c < q, "coordinate outside 0..q-1");
    auto lead = std::find_if(p.begin(), p.end(), [](int c) { return c != 0; });
    require(lead != p.end(), "the zero vector is not a projective point");
    if (*lead != 1) {
      const int scale = field_.inv(*lead);
      for (auto& c : p) c = field_.mul(c, scale);
      ++rescaled_;
    }
    require(seen.insert(p).second, "repeated projective point");
    points_.push_back(p);
  }
}

PointSet projective_space(int q, std::size_t s) {
  std::vector<FqVector> pts;
  for (std::size_t lead = 0; lead < s; ++lead) {
    const std::size_t rest = s - lead - 1;
    const auto total = checked_power(q, rest, 10'000'000, "projective space too large");
    for (std::int64_t code = 0; code < total; ++code) {
      FqVector p(s, 0);
      p[lead] = 1;
      auto c = code;
      for (std::size_t i = 0; i < rest; ++i) {
        p[lead + 1 + i] = static_cast<int>(c % q);
        c /= q;
      }
      pts.push_back(std::move(p));
    }
  }
  return PointSet(q, s, std::move(pts));
}

PointSet affine_space(int q, std::size_t dim) {
  std::vector<FqVector> pts;
  const auto total = checked_power(q, dim, 10'000'000, "affine space too large");
  for (std::int64_t code = 0; code < total; ++code) {
    FqVector p(dim + 1, 1);
    auto c = code;
    for (std::size_t i = 0; i < dim; ++i) {
      p[i] = static_cast<int>(c % q);
      c /= q;
    }
    pts.push_back(std::move(p));
  }
  return PointSet(q, dim + 1, std::move(pts));
}

std::vector<ExponentVector> monomials_of_degree(std::size_t s, std::size_t d) {
  std::vector<ExponentVector> out;
  ExponentVector cur(std::vector<ExponentVector::value_type>(s, 0));
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i + 1 == s) {
      cur[i] = static_cast<ExponentVector::value_type>(left);
      out.push_back(cur);
      return;
    }
    for (std::size_t e = left + 1; e-- > 0;) {
      cur[i] = static_cast<ExponentVector::value_type>(e);
      rec(i + 1, left - e);
    }
    cur[i] = 0;
  };
  if (s > 0) rec(0, d);
  return out;
}

std::vector<FqVector> row_reduce(const FiniteField& f, std::vector<FqVector> rows,
                                 std::vector<std::size_t>* pivot_rows) {
  std::vector<FqVector> basis;
  std::vector<std::size_t> pivot_col;
  if (pivot_rows) pivot_rows->clear();
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    FqVector v = rows[idx];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const int c = v[pivot_col[b]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(c, basis[b][j]));
    }
    auto lead = std::find_if(v.begin(), v.end(), [](int c) { return c != 0; });
    if (lead == v.end()) continue;
    const std::size_t col = static_cast<std::size_t>(lead - v.begin());
    const int scale = f.inv(*lead);
    for (auto& c : v) c = f.mul(c, scale);
    for (auto& row : basis) {
      const int c = row[col];
      if (c == 0) continue;
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = f.sub(row[j], f.mul(c, v[j]));
    }
    basis.push_back(std::move(v));
    pivot_col.push_back(col);
    if (pivot_rows) pivot_rows->push_back(idx);
  }
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivot_col[a] < pivot_col[b]; });
  std::vector<FqVector> out;
  for (auto i : order) out.push_back(basis[i]);
  return out;
}

EvaluationCode build_code(const PointSet& x, std::size_t d) {
  require(d >= 1, "code degree must be at least 1");
  EvaluationCode c;
  c.q = x.field().order();
  c.degree = d;
  c.length = x.size();
  c.generator = evaluation_matrix(x, d);
  c.basis = row_reduce(x.field(), c.generator, &c.basis_monomials);
  return c;
}

std::size_t hilbert_function(const PointSet& x, std::size_t d) {
  if (d == 0) return 1;
  return build_code(x, d).dimension();
}

std::size_t regularity_threshold(const PointSet& x) {
  std::size_t prev = 0;
  for (std::size_t d = 1;; ++d) {
    const std::size_t h = hilbert_function(x, d);
    check_consistency(h >= prev, "Hilbert function of points decreased");
    if (h == x.size()) return d;
    check_consistency(d < x.size(), "points are not separated in degree |X| - 1");
    prev = h;
  }
}

std::size_t generalized_weight(const EvaluationCode& c, std::size_t r, const Budget& budget) {
  require(c.length >= 2, "weights need at least two points");
  require(r >= 1 && r <= c.dimension(), "r must lie in 1..dim C");
  FiniteField f(c.q);
  const std::size_t k = c.dimension();
  std::size_t best = c.length + 1;
  for_each_subspace(f, k, r, budget.max_points, [&](const std::vector<FqVector>& rows) {
    std::size_t support = 0;
    for (std::size_t j = 0; j < c.length; ++j) {
      bool nonzero = false;
      for (const auto& row : rows) {
        int v = 0;
        for (std::size_t b = 0; b < k; ++b) v = f.add(v, f.mul(row[b], c.basis[b][j]));
        if (v != 0) {
          nonzero = true;
          break;
        }
      }
      if (nonzero) ++support;
    }
    best = std::min(best, support);
  });
  check_consistency(best >= r && best <= c.length - k + r, "generalized weight violates the Singleton bound");
  return best;
}

std::size_t minimum_distance(const EvaluationCode& c, const Budget& budget) {
  return generalized_weight(c, 1, budget);
}

GmdReport gmd_and_vasconcelos(const PointSet& x, std::size_t d, std::size_t r, const Budget& budget) {
  require(x.size() >= 2, "weights need at least two points");
  const auto code = build_code(x, d);
  require(r >= 1 && r <= code.dimension(), "r must lie in 1..H_X(d)");
  const auto all = monomials_of_degree(x.num_vars(), d);
  std::vector<ExponentVector> span;
  for (auto i : code.basis_monomials) span.push_back(all[i]);
  const FiniteField& f = x.field();
  // values[b][j] = b-th spanning monomial at the j-th point
  std::vector<FqVector> values;
  for (const auto& a : span) {
    FqVector row;
    for (const auto& p : x.points()) row.push_back(evaluate_monomial(f, a, p));
    values.push_back(std::move(row));
  }

  GmdReport out;
  std::size_t max_zeros = 0, min_nonzeros = x.size();
  bool any = false;
  for_each_subspace(f, span.size(), r, budget.max_points, [&](const std::vector<FqVector>& forms) {
    std::size_t zeros = 0, nonzeros = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      bool common_zero = true;
      for (const auto& coeff : forms) {
        int v = 0;
        for (std::size_t b = 0; b < span.size(); ++b) v = f.add(v, f.mul(coeff[b], values[b][j]));
        if (v != 0) {
          common_zero = false;
          break;
        }
      }
      (common_zero ? zeros : nonzeros)++;
    }
    if (zeros == 0) return;  // (I : (F)) = I
    any = true;
    max_zeros = std::max(max_zeros, zeros);
    min_nonzeros = std::min(min_nonzeros, nonzeros);
  });
  out.family_empty = !any;
  out.gmd = x.size() - max_zeros;
  out.vasconcelos = any ? min_nonzeros : x.size();
  return out;
}

std::size_t v_number_points(const PointSet& x) {
  require(x.size() >= 2, "the v-number needs at least two points");
  const FiniteField& f = x.field();
  for (std::size_t d = 1;; ++d) {
    auto rows = evaluation_matrix(x, d);
    const std::size_t full = row_reduce(f, rows).size();
    for (std::size_t j = 0; j < x.size(); ++j) {
      auto dropped = rows;
      for (auto& row : dropped) row.erase(row.begin() + static_cast<long>(j));
      if (row_reduce(f, dropped).size() < full) return d;
    }
    check_consistency(full < x.size(), "full-rank evaluation map without a separating form");
  }
}

VNumberWitness v_number_monomial(const MonomialIdeal& ideal, std::size_t degree_cap) {
  const std::size_t s = ideal.num_vars();
  for (std::size_t d = 0; d <= degree_cap; ++d)
    for (const auto& a : monomials_of_degree(s, d)) {
      if (ideal.contains(a)) continue;
      auto colon = colon_monomial(ideal, a);
      if (is_prime_monomial_ideal(colon)) return {d, a, colon};
    }
  throw BudgetExceeded("no monomial v-number witness up to degree " + std::to_string(degree_cap));
}

bool is_well_covered(const Graph& g, VertexSet vertices) {
  std::optional<std::size_t> size;
  bool uniform = true;
  std::function<void(VertexSet, VertexSet, std::size_t)> rec = [&](VertexSet chosen, VertexSet candidates,
                                                                   std::size_t count) {
    if (!uniform) return;
    if (candidates == 0) {
      // Maximal inside `vertices` iff every other vertex has a neighbour in `chosen`.
      for (auto v : members(vertices & ~chosen))
        if ((g.neighbors(v) & chosen) == 0) return;
      if (size && *size != count) uniform = false;
      size = count;
      return;
    }
    const auto v = members(candidates).front();
    const VertexSet bit = VertexSet{1} << v;
    rec(chosen | bit, candidates & ~bit & ~g.neighbors(v), count + 1);
    rec(chosen, candidates & ~bit, count);
  };
  rec(0, vertices, 0);
  return uniform;
}

W2Report w2_test(const Graph& g) {
  require(!g.has_loops(), "W_2 is defined for simple graphs");
  require(!g.has_isolated_vertices(), "W_2 needs a graph without isolated vertices");
  const std::size_t s = g.num_vertices();
  const VertexSet all = s == 64 ? ~VertexSet{0} : (VertexSet{1} << s) - 1;
  W2Report out;
  out.dimension = s - static_cast<std::size_t>(covering_number(g.clutter()));

  bool combinatorial = is_well_covered(g, all);
  for (std::size_t v = 0; v < s && combinatorial; ++v)
    combinatorial = is_well_covered(g, all & ~(VertexSet{1} << v));

  try {
    out.v_number = v_number_monomial(g.edge_ideal(), out.dimension).degree;
  } catch (const BudgetExceeded&) {
    out.v_number.reset();
  }
  const bool algebraic = out.v_number && *out.v_number == out.dimension;
  check_consistency(combinatorial == algebraic, "W_2 combinatorial test disagrees with v(I) = dim S/I");
  out.w2 = combinatorial;
  return out;
}

}  // namespace monalg
