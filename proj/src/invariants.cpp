#include "monalg/invariants.hpp"

#include <algorithm>
#include <functional>

#include "monalg/closure.hpp"
#include "monalg/errors.hpp"
#include "monalg/matrix.hpp"
#include "monalg/polyhedron.hpp"

namespace monalg {

namespace {

Integer face_value(const IntVector& f, const IntVector& x) {
  Integer v = f.back();
  for (std::size_t i = 0; i < x.size(); ++i) v += f[i] * x[i];
  return v;
}

// Pulling triangulation: cone from the smallest vertex over the facets missing it.
void pull(const std::vector<IntVector>& points, std::vector<IntVector>& apexes,
          std::vector<std::vector<IntVector>>& out) {
  LatticePolytope p(points);
  auto verts = p.vertices();
  if (p.dimension() == 0) {
    out.push_back(apexes);
    out.back().push_back(verts.front());
    return;
  }
  const IntVector base = verts.front();
  for (const auto& f : p.facets()) {
    if (face_value(f, base) == 0) continue;
    std::vector<IntVector> face;
    for (const auto& v : verts)
      if (face_value(f, v) == 0) face.push_back(v);
    apexes.push_back(base);
    pull(face, apexes, out);
    apexes.pop_back();
  }
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

std::vector<IntVector> simplex_vertices(const IntVector& a) {
  std::vector<IntVector> out{IntVector(a.size(), 0)};
  for (std::size_t i = 0; i < a.size(); ++i) {
    IntVector v(a.size(), 0);
    v[i] = a[i];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<IntVector> as_points(const MonomialIdeal& ideal) {
  std::vector<IntVector> out;
  for (const auto& g : ideal.generators()) out.push_back(g.to_integers());
  return out;
}

void enumerate_degree(std::size_t s, std::size_t k, bool squarefree, std::vector<ExponentVector>& out) {
  ExponentVector cur(std::vector<ExponentVector::value_type>(s, 0));
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i + 1 == s) {
      if (squarefree && left > 1) return;
      cur[i] = static_cast<ExponentVector::value_type>(left);
      out.push_back(cur);
      cur[i] = 0;
      return;
    }
    const std::size_t top = squarefree ? std::min<std::size_t>(left, 1) : left;
    for (std::size_t e = 0; e <= top; ++e) {
      cur[i] = static_cast<ExponentVector::value_type>(e);
      rec(i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(0, k);
}

}  // namespace

Rational pulling_volume(const std::vector<IntVector>& points) {
  require(!points.empty(), "volume of an empty point set");
  const std::size_t n = points.front().size();
  LatticePolytope p(points);
  if (p.dimension() < n) return 0;
  std::vector<std::vector<IntVector>> simplices;
  std::vector<IntVector> apexes;
  pull(points, apexes, simplices);
  Integer total = 0;
  for (const auto& sx : simplices) {
    check_consistency(sx.size() == n + 1, "pulling triangulation produced a degenerate simplex");
    IntMatrix m;
    for (std::size_t i = 1; i <= n; ++i) {
      IntVector row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = sx[i][j] - sx[0][j];
      m.push_back(std::move(row));
    }
    Integer det = determinant(m);
    check_consistency(det != 0, "pulling triangulation produced a flat simplex");
    total += abs(det);
  }
  return Rational(total) / factorial(static_cast<unsigned>(n));
}

MultiplicityRegion multiplicity_region(const MonomialIdeal& ideal) {
  const std::size_t s = ideal.num_vars();
  require(s >= 2, "multiplicity needs at least two variables");
  MultiplicityRegion out;
  out.pure_powers.assign(s, 0);
  for (const auto& g : ideal.generators()) {
    auto sup = g.support();
    if (sup.size() == 1) out.pure_powers[sup.front()] = g[sup.front()];
  }
  for (std::size_t i = 0; i < s; ++i)
    require(out.pure_powers[i] > 0, "ideal is not zero-dimensional: no pure power of t" + std::to_string(i + 1));
  Integer prod = 1;
  for (const auto& a : out.pure_powers) prod *= a;
  for (const auto& g : ideal.generators()) {
    Rational w = 0;
    for (std::size_t i = 0; i < s; ++i) w += Rational(g[i]) / out.pure_powers[i];
    if (g.support().size() == 1 || w < 1) out.p0_points.push_back(g.to_integers());
  }
  out.delta_volume = Rational(prod) / factorial(static_cast<unsigned>(s));
  out.p0_volume = pulling_volume(out.p0_points);
  out.region_volume = out.delta_volume - out.p0_volume;
  return out;
}

Integer multiplicity(const MonomialIdeal& ideal, const Budget& budget) {
  auto region = multiplicity_region(ideal);
  const std::size_t s = ideal.num_vars();
  const Integer sf = factorial(static_cast<unsigned>(s));
  Rational e = sf * region.region_volume;
  check_consistency(e.get_den() == 1, "multiplicity is not an integer");
  check_consistency(e > 0, "multiplicity is not positive");

  LatticePolytope p0(region.p0_points);
  Rational ehrhart_volume = 0;
  if (p0.dimension() == s) ehrhart_volume = ehrhart(p0, budget.max_points).coefficients[s];
  check_consistency(ehrhart_volume == region.p0_volume,
                    "triangulation volume of P0 disagrees with its Ehrhart leading coefficient");
  return e.get_num();
}

Integer normalization_hilbert_function(const MonomialIdeal& ideal, int n, const Budget& budget) {
  require(n >= 0, "normalization Hilbert function needs n >= 0");
  auto region = multiplicity_region(ideal);
  if (n == 0) return 0;
  const std::size_t s = ideal.num_vars();

  std::vector<std::int64_t> bound(s);
  double cells = 1;
  for (std::size_t i = 0; i < s; ++i) {
    bound[i] = to_int64(region.pure_powers[i]) * n;
    cells *= static_cast<double>(bound[i]);
  }
  if (cells > static_cast<double>(budget.max_points))
    throw BudgetExceeded("normalization Hilbert function box exceeds max_points");
  NewtonPolyhedron np(ideal);
  Integer direct = 0;
  ExponentVector x(std::vector<ExponentVector::value_type>(s, 0));
  while (true) {
    if (!np.contains_scaled(x, n)) ++direct;
    std::size_t i = 0;
    while (i < s && ++x[i] == bound[i]) x[i++] = 0;
    if (i == s) break;
  }

  LatticePolytope delta(simplex_vertices(region.pure_powers));
  LatticePolytope p0(region.p0_points);
  Integer diff = delta.count_lattice_points(static_cast<std::size_t>(n), budget.max_points) -
                 p0.count_lattice_points(static_cast<std::size_t>(n), budget.max_points);
  check_consistency(direct == diff, "direct complement count disagrees with E_Delta - E_P0");
  return direct;
}

RatVector normalization_hilbert_polynomial(const MonomialIdeal& ideal, const Budget& budget) {
  auto region = multiplicity_region(ideal);
  const std::size_t s = ideal.num_vars();
  LatticePolytope delta(simplex_vertices(region.pure_powers));
  LatticePolytope p0(region.p0_points);
  std::vector<Integer> values;
  for (std::size_t m = 0; m <= s + 1; ++m)
    values.push_back(delta.count_lattice_points(m, budget.max_points) -
                     p0.count_lattice_points(m, budget.max_points));
  RatVector poly = interpolate(values, s);
  Rational at = 0, p = 1;
  for (const auto& c : poly) {
    at += c * p;
    p *= static_cast<long>(s + 1);
  }
  check_consistency(at == values[s + 1], "normalization Hilbert polynomial misses the extra value");
  return poly;
}

VeroneseInvariants veronese_invariants(std::size_t s, std::size_t k) {
  require(k >= 1 && k + 1 <= s, "Veronese invariants need 1 <= k <= s - 1");
  const auto ss = static_cast<std::int64_t>(s), kk = static_cast<std::int64_t>(k);
  VeroneseInvariants out;
  out.a_squarefree = s >= 2 * k ? -ceil_div(ss, kk) : -ceil_div(ss, ss - kk);
  out.reg_squarefree = ss + out.a_squarefree;
  out.a_veronese = -ceil_div(ss, kk);
  out.reg_veronese = ss + out.a_veronese;
  return out;
}

MonomialIdeal squarefree_veronese_ideal(std::size_t s, std::size_t k) {
  require(k >= 1 && k <= s, "squarefree Veronese needs 1 <= k <= s");
  std::vector<ExponentVector> gens;
  enumerate_degree(s, k, true, gens);
  return MonomialIdeal::from_generators(std::move(gens));
}

MonomialIdeal veronese_ideal(std::size_t s, std::size_t k) {
  require(s >= 1 && k >= 1, "Veronese needs s, k >= 1");
  std::vector<ExponentVector> gens;
  enumerate_degree(s, k, false, gens);
  return MonomialIdeal::from_generators(std::move(gens));
}

std::vector<ExponentVector> veronese_canonical_generators(std::size_t s, std::size_t k,
                                                          std::int64_t degree_cap, const Budget& budget) {
  require(k >= 2 && s >= 2 * k, "canonical generators need s >= 2k >= 4");
  const auto kk = static_cast<std::int64_t>(k);
  std::vector<ExponentVector> out;
  ExponentVector a(std::vector<ExponentVector::value_type>(s, 1));
  std::size_t nodes = 0;
  std::function<void(std::size_t, std::int64_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t sum,
                                                                          std::int64_t big) {
    if (++nodes > budget.max_points) throw BudgetExceeded("canonical generator search exceeds max_points");
    if (i == s) {
      if (sum % kk != 0) return;
      for (std::size_t j = 0; j < s; ++j)
        if (kk * a[j] > sum - 1) return;
      out.push_back(a);
      return;
    }
    const auto rest = static_cast<std::int64_t>(s - i - 1);  // each later entry is at least 1
    for (std::int64_t e = 1; sum + e + rest <= degree_cap; ++e) {
      if (e >= 2 && big + 1 > kk - 1) break;
      a[i] = e;
      rec(i + 1, sum + e, big + (e >= 2 ? 1 : 0));
    }
    a[i] = 1;
  };
  rec(0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SubringRegularityReport subring_regularity(const MonomialIdeal& ideal, const Budget& budget) {
  require(ideal.uniform_degree().has_value(), "subring regularity needs generators of one degree");
  require(is_normal(ideal, NormalityMethod::hilbert, budget).normal,
          "subring regularity needs a normal ideal");
  LatticePolytope p(as_points(ideal));
  auto e = ehrhart(p, budget.max_points);
  SubringRegularityReport out;
  out.h_vector = e.h_vector;
  out.regularity = static_cast<std::int64_t>(e.h_degree());
  out.rank = rank(ideal.incidence_matrix());
  check_consistency(out.rank == p.dimension() + 1, "rank of A differs from dim P + 1");
  out.a_invariant = out.regularity - static_cast<std::int64_t>(out.rank);
  check_consistency(out.a_invariant <= -1, "a-invariant of a normal subring is not negative");
  return out;
}

MonotonicityReport regularity_monotonicity_check(const MonomialIdeal& small, const MonomialIdeal& large,
                                                 const Budget& budget) {
  require(small.num_vars() == large.num_vars(), "ideals live in different rings");
  require(small.uniform_degree().has_value() && small.uniform_degree() == large.uniform_degree(),
          "both ideals must be generated in the same single degree");
  for (const auto& g : small.generators())
    require(std::find(large.generators().begin(), large.generators().end(), g) != large.generators().end(),
            "G(I) is not contained in G(J)");
  MonotonicityReport out;
  out.reg_small = subring_regularity(small, budget).regularity;
  out.reg_large = subring_regularity(large, budget).regularity;
  out.holds = out.reg_small <= out.reg_large;
  check_consistency(out.holds, "regularity decreased along G(I) in G(J)");
  return out;
}

std::int64_t ideal_order(const MonomialIdeal& ideal) {
  std::int64_t best = ideal.generators().front().degree();
  for (const auto& g : ideal.generators()) best = std::min<std::int64_t>(best, g.degree());
  return best;
}

bool is_m_full_2var(const MonomialIdeal& ideal) {
  require(ideal.num_vars() == 2, "m-full criterion needs two variables");
  auto gens = ideal.generators();
  std::sort(gens.begin(), gens.end(), [](const auto& p, const auto& q) { return p[0] > q[0]; });
  require(gens.back()[0] == 0 && gens.front()[1] == 0, "ideal is not zero-dimensional");
  const std::size_t n = gens.size();
  const bool mu_is_ord_plus_one = static_cast<std::int64_t>(n) == ideal_order(ideal) + 1;

  bool power_of_m = true;
  for (const auto& g : gens) power_of_m = power_of_m && g.degree() == static_cast<std::int64_t>(n) - 1;
  if (power_of_m) return true;

  // 1-based: generator i is t1^{x[i]} t2^{y[i]}, x decreasing, y increasing.
  auto x = [&](std::size_t i) { return gens[i - 1][0]; };
  auto y = [&](std::size_t i) { return gens[i - 1][1]; };
  bool full = false;
  for (std::size_t k = 1; k <= n && !full; ++k) {
    bool ok = true;
    for (std::size_t i = 1; i + 1 <= k && ok; ++i) ok = y(i + 1) - y(i) == 1;
    ok = ok && (k == n || y(k + 1) - y(k) >= 2);
    for (std::size_t i = k; i + 1 <= n && ok; ++i) ok = x(i) - x(i + 1) == 1;
    full = ok;
  }
  if (mu_is_ord_plus_one) check_consistency(full, "mu(I) = ord(I) + 1 but the gap criterion fails");
  return full;
}

bool is_cremona_monomial(const std::vector<ExponentVector>& monomials) {
  require(!monomials.empty(), "Cremona test needs monomials");
  const std::size_t s = monomials.front().size();
  require(monomials.size() == s, "Cremona test needs s monomials in s variables");
  const auto d = monomials.front().degree();
  for (const auto& m : monomials) {
    require(m.size() == s, "monomials have mismatched lengths");
    require(m.degree() == d, "monomials must share one degree");
  }
  require(d >= 1, "monomials must have positive degree");
  for (std::size_t i = 0; i < s; ++i) {
    bool present = false, missing = false;
    for (const auto& m : monomials) (m[i] > 0 ? present : missing) = true;
    require(present, "variable t" + std::to_string(i + 1) + " does not appear");
    require(missing, "monomials share the factor t" + std::to_string(i + 1));
  }
  IntMatrix a(s, IntVector(s));
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < s; ++i) a[i][j] = monomials[j][i];
  Integer det = determinant(a);
  require(det != 0, "incidence matrix is singular");
  return abs(det) == d;
}

}  // namespace monalg
