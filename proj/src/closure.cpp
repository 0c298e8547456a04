#include "monalg/closure.hpp"

#include <algorithm>
#include <set>

#include "monalg/clutter.hpp"
#include "monalg/errors.hpp"
#include "monalg/lp.hpp"

namespace monalg {

MembershipResult membership(const ExponentVector& a, const MonomialIdeal& ideal, int n) {
  require(a.size() == ideal.num_vars(), "membership: exponent vector has the wrong length");
  require(n >= 1, "membership: the power must be positive");
  LpResult lp = lp_maximize(to_rational(ideal.incidence_matrix()), RatVector(a.begin(), a.end()),
                            RatVector(ideal.num_generators(), 1));
  check_consistency(lp.status == LpStatus::optimal, "membership LP is not bounded and feasible");
  MembershipResult out;
  out.lp_value = lp.value;
  out.member = lp.value >= n;
  if (out.member) out.witness = lp.primal;
  return out;
}

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& ideal) : s_(ideal.num_vars()) {
  bool every_variable = true;
  for (std::size_t i = 0; i < s_; ++i) {
    max_exp_.push_back(ideal.max_exponent(i));
    every_variable = every_variable && max_exp_.back() > 0;
  }
  if (every_variable && s_ >= 2) {
    rep_ = rees_cone_representation(ideal);  // cross-checked against Q(I)
  } else {
    RationalCone rc = rees_cone(ideal);
    for (const auto& f : rc.facets()) {
      if (f[s_] < 0) {
        rep_.normals.push_back(f);
        if (f[s_] == -1) ++rep_.integral_count;
        continue;
      }
      std::size_t nonzero = 0, where = 0;
      for (std::size_t i = 0; i <= s_; ++i)
        if (f[i] != 0) {
          ++nonzero;
          where = i;
        }
      check_consistency(nonzero == 1 && f[where] == 1, "unexpected Rees cone facet");
      rep_.unit_facets.push_back(where);
    }
    rep_.vertex_count = rep_.normals.size();
  }
  for (const auto& l : rep_.normals) {
    std::vector<std::int64_t> g;
    for (std::size_t i = 0; i < s_; ++i) g.push_back(to_int64(l[i]));
    gamma_.push_back(std::move(g));
    d_.push_back(to_int64(-l[s_]));
  }
}

bool NewtonPolyhedron::contains_scaled(const ExponentVector& a, std::int64_t n) const {
  require(a.size() == s_, "exponent vector has the wrong length");
  for (std::size_t f = 0; f < gamma_.size(); ++f) {
    __int128 v = 0;
    for (std::size_t i = 0; i < s_; ++i) v += static_cast<__int128>(gamma_[f][i]) * a[i];
    if (v < static_cast<__int128>(d_[f]) * n) return false;
  }
  return true;
}

MonomialIdeal NewtonPolyhedron::closure_generators(std::int64_t n, std::size_t max_points) const {
  require(n >= 1, "closure power must be positive");
  const std::size_t s = s_;
  std::vector<std::int64_t> hi(s);
  for (std::size_t i = 0; i < s; ++i) hi[i] = n * max_exp_[i];
  // Running values <gamma_f, a> over the assigned prefix.
  std::vector<__int128> partial(gamma_.size(), 0);
  // Largest possible contribution of coordinates k..s-1.
  std::vector<std::vector<__int128>> suffix(gamma_.size(), std::vector<__int128>(s + 1, 0));
  for (std::size_t f = 0; f < gamma_.size(); ++f)
    for (std::size_t k = s; k-- > 0;) suffix[f][k] = suffix[f][k + 1] + static_cast<__int128>(gamma_[f][k]) * hi[k];

  ExponentVector a(s);
  std::vector<ExponentVector> gens;
  std::size_t visited = 0;

  auto member = [&](const ExponentVector& x) { return contains_scaled(x, n); };
  auto minimal = [&](ExponentVector& x) {
    for (std::size_t j = 0; j < s; ++j) {
      if (x[j] == 0) continue;
      x[j] -= 1;
      bool m = member(x);
      x[j] += 1;
      if (m) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (++visited > max_points) throw BudgetExceeded("closure generators: candidate budget exceeded");
    for (std::size_t f = 0; f < gamma_.size(); ++f)
      if (partial[f] + suffix[f][k] < static_cast<__int128>(d_[f]) * n) return;
    if (k + 1 == s) {
      // Least feasible value of the last coordinate.
      __int128 need = 0;
      for (std::size_t f = 0; f < gamma_.size(); ++f) {
        __int128 gap = static_cast<__int128>(d_[f]) * n - partial[f];
        if (gap <= 0) continue;
        const std::int64_t g = gamma_[f][k];
        if (g == 0) return;
        need = std::max(need, (gap + g - 1) / g);
      }
      if (need > hi[k]) return;
      a[k] = static_cast<std::int64_t>(need);
      if (!a.is_zero() && minimal(a)) gens.push_back(a);
      a[k] = 0;
      return;
    }
    for (std::int64_t v = 0; v <= hi[k]; ++v) {
      a[k] = v;
      if (v > 0) {
        // If lowering a_k by one already lands in nNP with zeros after k, every
        // extension is non-minimal, and so is every larger a_k.
        a[k] = v - 1;
        bool stop = member(a);
        a[k] = v;
        if (stop) break;
      }
      for (std::size_t f = 0; f < gamma_.size(); ++f) partial[f] += static_cast<__int128>(gamma_[f][k]) * v;
      self(self, k + 1);
      for (std::size_t f = 0; f < gamma_.size(); ++f) partial[f] -= static_cast<__int128>(gamma_[f][k]) * v;
    }
    a[k] = 0;
  };
  rec(rec, 0);
  return MonomialIdeal::from_generators(std::move(gens));
}

MonomialIdeal closure_of_power(const MonomialIdeal& ideal, int n, const Budget& budget) {
  return NewtonPolyhedron(ideal).closure_generators(n, budget.max_points);
}

bool in_power(const MonomialIdeal& ideal, const ExponentVector& a, int n) {
  require(n >= 0, "power must be non-negative");
  const auto& g = ideal.generators();
  ExponentVector rest = a;
  auto rec = [&](auto&& self, std::size_t from, int left) -> bool {
    if (left == 0) return true;
    for (std::size_t i = from; i < g.size(); ++i) {
      if (!g[i].divides(rest)) continue;
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= g[i][j];
      bool ok = self(self, i, left - 1);
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] += g[i][j];
      if (ok) return true;
    }
    return false;
  };
  return rec(rec, 0, n);
}

namespace {

std::vector<IntVector> sorted_generators(const RationalCone& c) {
  std::vector<IntVector> g = c.generators();
  std::sort(g.begin(), g.end());
  return g;
}

}  // namespace

NormalityVerdict is_normal(const MonomialIdeal& ideal, NormalityMethod method, const Budget& budget) {
  NormalityVerdict out;
  std::vector<std::string> notes;
  if (method != NormalityMethod::powers) {
    try {
      RationalCone rc = rees_cone(ideal);
      auto hb = rc.hilbert_basis(LatticeKind::ambient, budget.max_points);
      auto gens = sorted_generators(rc);
      for (const auto& h : hb)
        if (!std::binary_search(gens.begin(), gens.end(), h)) out.hilbert_extra.push_back(h);
      out.hilbert_verdict = out.hilbert_extra.empty();
    } catch (const BudgetExceeded& e) {
      notes.push_back(std::string("hilbert: ") + e.what());
    }
  }
  if (method != NormalityMethod::hilbert) {
    try {
      NewtonPolyhedron np(ideal);
      const int s = static_cast<int>(ideal.num_vars());
      bool ok = true;
      for (int n = 1; n <= s - 1 && ok; ++n) {
        MonomialIdeal cl = np.closure_generators(n, budget.max_points);
        out.checked_powers.push_back(n);
        for (const auto& g : cl.generators())
          if (!in_power(ideal, g, n)) {
            ok = false;
            out.failing_power = n;
            out.witness = g;
            break;
          }
      }
      out.powers_verdict = ok;
    } catch (const BudgetExceeded& e) {
      notes.push_back(std::string("powers: ") + e.what());
      out.checked_powers.clear();
    }
  }
  for (const auto& n : notes) out.budget_note += (out.budget_note.empty() ? "" : "; ") + n;
  if (out.hilbert_verdict && out.powers_verdict) {
    check_consistency(*out.hilbert_verdict == *out.powers_verdict,
                      "normality: Hilbert basis and power checks disagree");
    out.normal = *out.hilbert_verdict;
    out.method = "both";
  } else if (out.hilbert_verdict) {
    out.normal = *out.hilbert_verdict;
    out.method = "hilbert";
  } else if (out.powers_verdict) {
    out.normal = *out.powers_verdict;
    out.method = "powers";
  } else {
    throw BudgetExceeded("normality: no method finished within budget (" + out.budget_note + ")");
  }
  out.partial = method == NormalityMethod::both && out.method != "both";
  return out;
}

NormalizationIndex normalization_index(const MonomialIdeal& ideal, const Budget& budget) {
  const int s = static_cast<int>(ideal.num_vars());
  NewtonPolyhedron np(ideal);
  NormalizationIndex out;
  out.general_bound = s - 1;
  HyperplaneData hd = hyperplane_data(ideal);
  if (hd.on_affine_hyperplane) out.hyperplane_bound = static_cast<int>(hd.rank) - 1;

  // closures[n] = closure of I^n for n = 1..s.
  std::vector<MonomialIdeal> closures;
  for (int n = 1; n <= s; ++n) closures.push_back(np.closure_generators(n, budget.max_points));
  for (int n = 0; n <= s - 1; ++n) {
    const MonomialIdeal& next = closures[static_cast<std::size_t>(n)];
    MonomialIdeal prod = n == 0 ? ideal : product(ideal, closures[static_cast<std::size_t>(n - 1)]);
    out.stable.push_back(prod == next);
  }
  out.index = 0;
  for (int n = 0; n <= s - 1; ++n)
    if (!out.stable[static_cast<std::size_t>(n)]) out.index = n + 1;
  check_consistency(out.index <= out.general_bound || s == 1,
                    "normalization index exceeds the dimension bound");
  if (out.hyperplane_bound)
    check_consistency(out.index <= std::max(*out.hyperplane_bound, 0),
                      "normalization index exceeds the hyperplane bound");
  return out;
}

HyperplaneData hyperplane_data(const MonomialIdeal& ideal) {
  HyperplaneData out;
  std::vector<IntVector> rows;
  for (const auto& g : ideal.generators()) rows.push_back(g.to_integers());
  out.rank = rank(rows);
  auto sol = solve(to_rational(rows), RatVector(rows.size(), 1));
  out.on_affine_hyperplane = sol.has_value();
  return out;
}

bool is_gr_reduced(const MonomialIdeal& ideal, const Budget& budget) {
  require(ideal.is_squarefree(), "gr-reducedness test needs a squarefree ideal");
  require(covering_number(Clutter::from_ideal(ideal)) >= 2, "gr-reducedness test needs height at least two");
  if (!covering_polyhedron(ideal).is_integral()) return false;
  return is_normal(ideal, NormalityMethod::hilbert, budget).normal;
}

}  // namespace monalg
