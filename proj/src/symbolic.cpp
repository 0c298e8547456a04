#include "monalg/symbolic.hpp"

#include <algorithm>
#include <functional>

#include "monalg/closure.hpp"
#include "monalg/cone.hpp"
#include "monalg/errors.hpp"
#include "monalg/lp.hpp"
#include "monalg/polyhedron.hpp"

namespace monalg {

namespace {

// All exponent vectors of total degree n supported on the set.
std::vector<ExponentVector> prime_power_generators(std::size_t s, VertexSet set, int n) {
  auto vars = members(set);
  std::vector<ExponentVector> out;
  ExponentVector a(s);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k + 1 == vars.size()) {
      a[vars[k]] = left;
      out.push_back(a);
      a[vars[k]] = 0;
      return;
    }
    for (int v = left; v >= 0; --v) {
      a[vars[k]] = v;
      rec(k + 1, left - v);
    }
    a[vars[k]] = 0;
  };
  rec(0, n);
  return out;
}

Integer sum_over(const IntVector& alpha, VertexSet set) {
  Integer total = 0;
  for (auto i : members(set)) total += alpha[i];
  return total;
}

}  // namespace

SymbolicPowerCache::SymbolicPowerCache(const MonomialIdeal& ideal, const Budget& budget)
    : ideal_(ideal), budget_(budget) {
  require(ideal.is_squarefree(), "symbolic powers are computed for squarefree ideals");
  require(ideal.num_vars() <= 12, "minimal prime enumeration limited to 12 variables");
  covers_ = Clutter::from_ideal(ideal).minimal_vertex_covers();
  powers_.emplace(1, ideal);
}

bool SymbolicPowerCache::contains(const ExponentVector& a, int n) const {
  for (auto c : covers_) {
    std::int64_t total = 0;
    for (auto i : members(c)) total += a[i];
    if (total < n) return false;
  }
  return true;
}

const MonomialIdeal& SymbolicPowerCache::power(int n) {
  require(n >= 1, "symbolic power exponent must be positive");
  if (auto it = powers_.find(n); it != powers_.end()) return it->second;
  const std::size_t s = ideal_.num_vars();

  // Route 1: intersect the prime powers.
  std::optional<MonomialIdeal> meet;
  for (auto c : covers_) {
    auto gens = prime_power_generators(s, c, n);
    MonomialIdeal pn = MonomialIdeal::from_generators(gens);
    if (meet && meet->num_generators() * pn.num_generators() > budget_.max_points)
      throw BudgetExceeded("symbolic power intersection exceeds the point budget");
    meet = meet ? intersection(*meet, pn) : pn;
  }

  // Route 2: minimal a in [0, n]^s with a/n in Q(I^vee). A prefix that already
  // lies in the set with zeros after it admits no larger minimal completion.
  std::vector<ExponentVector> found;
  std::size_t visited = 0;
  ExponentVector a(s);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (++visited > budget_.max_points)
      throw BudgetExceeded("symbolic power lattice scan exceeds the point budget");
    if (k == s) {
      if (!contains(a, n)) return;
      for (std::size_t j = 0; j < s; ++j) {
        if (a[j] == 0) continue;
        a[j] -= 1;
        bool smaller = contains(a, n);
        a[j] += 1;
        if (smaller) return;
      }
      found.push_back(a);
      return;
    }
    for (std::int64_t v = 0; v <= n; ++v) {
      a[k] = v;
      for (std::size_t j = k + 1; j < s; ++j) a[j] = n;
      bool reachable = contains(a, n);
      for (std::size_t j = k + 1; j < s; ++j) a[j] = 0;
      if (!reachable) continue;
      bool done = contains(a, n);
      rec(k + 1);
      if (done) break;
    }
    a[k] = 0;
  };
  rec(0);

  MonomialIdeal polyhedral = MonomialIdeal::from_generators(found);
  check_consistency(polyhedral == *meet, "symbolic power routes disagree");
  return powers_.emplace(n, std::move(polyhedral)).first->second;
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int n, const Budget& budget) {
  SymbolicPowerCache cache(ideal, budget);
  return cache.power(n);
}

bool is_simis(const MonomialIdeal& ideal, const Budget& budget) {
  require(ideal.is_squarefree(), "Simis test needs a squarefree ideal");
  if (!covering_polyhedron(ideal).is_integral()) return false;
  return is_normal(ideal, NormalityMethod::hilbert, budget).normal;
}

MfmcSpotCheck mfmc_spot_check(const MonomialIdeal& ideal, int max_entry) {
  require(ideal.is_squarefree(), "max-flow min-cut needs a squarefree ideal");
  const std::size_t s = ideal.num_vars();
  require(s <= 6, "spot-check limited to 6 variables");
  const IntMatrix a = ideal.incidence_matrix();
  std::vector<VertexSet> edges;
  for (const auto& g : ideal.generators()) {
    VertexSet e = 0;
    for (auto i : g.support()) e |= VertexSet{1} << i;
    edges.push_back(e);
  }
  const auto covers = Clutter::from_ideal(ideal).minimal_vertex_covers();

  std::vector<IntVector> weights;
  IntVector alpha(s, 0);
  while (true) {
    weights.push_back(alpha);
    std::size_t k = 0;
    while (k < s && ++alpha[k] > max_entry) alpha[k++] = 0;
    if (k == s) break;
  }
  std::stable_sort(weights.begin(), weights.end(), [](const IntVector& x, const IntVector& y) {
    Integer sx = 0, sy = 0;
    for (const auto& v : x) sx += v;
    for (const auto& v : y) sy += v;
    if (sx != sy) return sx < sy;
    return x < y;
  });

  MfmcSpotCheck out;
  for (const auto& w : weights) {
    ++out.weights_checked;
    Rational lp = lp_optimize(a, w, LpSense::max).value;
    // Integer packing: edges with multiplicity, vertex i used at most w_i times.
    IntVector cap = w;
    Integer best = 0;
    std::function<void(std::size_t, Integer)> pack = [&](std::size_t k, Integer count) {
      if (count > best) best = count;
      for (std::size_t e = k; e < edges.size(); ++e) {
        auto vs = members(edges[e]);
        if (!std::all_of(vs.begin(), vs.end(), [&](std::size_t i) { return cap[i] > 0; })) continue;
        for (auto i : vs) cap[i] -= 1;
        pack(e, count + 1);
        for (auto i : vs) cap[i] += 1;
      }
    };
    pack(0, 0);
    Integer cover = sum_over(w, covers.front());
    for (auto c : covers) cover = std::min(cover, sum_over(w, c));
    check_consistency(Rational(best) <= lp && lp <= Rational(cover), "weak duality violated");
    if (best != cover) {
      out.passed = false;
      out.gap_weight = w;
      out.lp_value = lp;
      out.packing_value = best;
      out.cover_value = cover;
      break;
    }
  }
  return out;
}

bool has_mfmc(const MonomialIdeal& ideal, const Budget& budget) {
  bool simis = is_simis(ideal, budget);
  if (ideal.num_vars() <= 6 && simis)
    check_consistency(mfmc_spot_check(ideal).passed, "Simis ideal with a max-flow min-cut gap");
  return simis;
}

std::vector<SymbolicReesGenerator> symbolic_rees_generators(const MonomialIdeal& ideal,
                                                            const Budget& budget) {
  SymbolicPowerCache cache(ideal, budget);
  const std::size_t s = ideal.num_vars();
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i <= s; ++i) {
    IntVector e(s + 1, 0);
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  for (auto c : cache.covers()) {
    IntVector l(s + 1, 0);
    for (auto i : members(c)) l[i] = 1;
    l[s] = -1;
    rows.push_back(std::move(l));
  }
  RationalCone cone(extreme_rays(rows, s + 1), s + 1);
  std::vector<SymbolicReesGenerator> out;
  for (const auto& h : cone.hilbert_basis(LatticeKind::ambient, budget.max_points)) {
    SymbolicReesGenerator g;
    g.monomial = ExponentVector(s);
    for (std::size_t i = 0; i < s; ++i) g.monomial[i] = to_int64(h[i]);
    g.z_degree = to_int64(h[s]);
    if (g.z_degree > 0)
      check_consistency(cache.contains(g.monomial, static_cast<int>(g.z_degree)),
                        "Simis cone element outside the symbolic power");
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int big_height(const MonomialIdeal& squarefree_ideal) {
  int h = 0;
  for (auto c : Clutter::from_ideal(squarefree_ideal).minimal_vertex_covers()) h = std::max(h, popcount(c));
  return h;
}

ResurgenceReport ic_resurgence(const MonomialIdeal& ideal) {
  require(ideal.is_squarefree(), "ic-resurgence needs a squarefree ideal");
  MonomialIdeal dual = alexander_dual(ideal);
  RationalPolyhedron q = covering_polyhedron(ideal);
  RationalPolyhedron qd = covering_polyhedron(dual);
  ResurgenceReport out;
  out.q_integral = q.is_integral();
  out.dual_q_integral = qd.is_integral();

  std::optional<Rational> best;
  for (const auto& u : q.vertices())
    for (const auto& v : qd.vertices()) {
      Rational p = dot(u, v);
      if (!best || p < *best) {
        best = p;
        out.u = u;
        out.v = v;
      }
    }
  // Second route: minimize <v, x> over Q(I) by linear programming.
  const IntMatrix a = ideal.incidence_matrix();
  std::optional<Rational> lp_best;
  for (const auto& [gamma, d] : qd.scaled_vertices()) {
    Rational val = lp_optimize(a, gamma, LpSense::min).value / Rational(d);
    if (!lp_best || val < *lp_best) lp_best = val;
  }
  check_consistency(best && lp_best && *best == *lp_best, "ic-resurgence routes disagree");

  out.rho_ic = 1 / *best;
  out.ceiling = ceil(out.rho_ic);
  check_consistency(out.rho_ic >= 1, "ic-resurgence below one");
  check_consistency((out.rho_ic == 1) == out.q_integral, "rho_ic = 1 must match integrality of Q(I)");
  check_consistency(out.q_integral == out.dual_q_integral, "Q(I) and Q(I^vee) integrality differ");
  const Rational s = static_cast<long>(ideal.num_vars());
  const int h = big_height(ideal);
  int h_dual = 0;
  for (const auto& g : ideal.generators()) h_dual = std::max<int>(h_dual, static_cast<int>(g.degree()));
  if (h >= 2) check_consistency(out.rho_ic <= h - 1 / s, "rho_ic exceeds bight(I) - 1/s");
  if (h_dual >= 2) check_consistency(out.rho_ic <= h_dual - 1 / s, "rho_ic exceeds bight(I^vee) - 1/s");
  return out;
}

int containment_function(const MonomialIdeal& ideal, int r, const Budget& budget) {
  require(r >= 1, "containment function needs r >= 1");
  SymbolicPowerCache cache(ideal, budget);
  const int h = big_height(ideal);
  for (int n = 1; n <= r * h; ++n) {
    const auto& gens = cache.power(n).generators();
    if (std::all_of(gens.begin(), gens.end(), [&](const ExponentVector& g) { return in_power(ideal, g, r); })) {
      check_consistency(n >= r, "I^(n) inside I^r with n < r");
      return n;
    }
  }
  throw InternalConsistencyError("I^(hr) not inside I^r");
}

bool symbolic_escapes_power(const MonomialIdeal& ideal, int n, int r, const Budget& budget) {
  auto p = symbolic_power(ideal, n, budget);
  return std::any_of(p.generators().begin(), p.generators().end(),
                     [&](const ExponentVector& g) { return !in_power(ideal, g, r); });
}

bool symbolic_escapes_closure(const MonomialIdeal& ideal, int n, int r, const Budget& budget) {
  auto p = symbolic_power(ideal, n, budget);
  NewtonPolyhedron np(ideal);
  return std::any_of(p.generators().begin(), p.generators().end(),
                     [&](const ExponentVector& g) { return !np.contains_scaled(g, r); });
}

bool resurgence_one_test(const MonomialIdeal& ideal, const Budget& budget) {
  if (!covering_polyhedron(ideal).is_integral()) return false;
  SymbolicPowerCache cache(ideal, budget);
  const int s = static_cast<int>(ideal.num_vars());
  for (int r = 1; r <= s - 1; ++r) {
    const auto& gens = cache.power(r + 1).generators();
    if (!std::all_of(gens.begin(), gens.end(), [&](const ExponentVector& g) { return in_power(ideal, g, r); }))
      return false;
  }
  return true;
}

Integer uniform_containment_ceiling(const MonomialIdeal& ideal, int check_up_to, const Budget& budget) {
  Integer h = ic_resurgence(ideal).ceiling;
  SymbolicPowerCache cache(ideal, budget);
  NewtonPolyhedron np(ideal);
  for (int n = 1; n <= check_up_to; ++n) {
    const auto& gens = cache.power(static_cast<int>(h.get_si()) * n).generators();
    for (const auto& g : gens)
      check_consistency(np.contains_scaled(g, n), "I^(hn) not inside the closure of I^n");
  }
  return h;
}

}  // namespace monalg
