#include <doctest.h>

#include <random>

#include "monalg/closure.hpp"
#include "monalg/errors.hpp"
#include "monalg/graphs.hpp"
#include "monalg/polyhedron.hpp"
#include "monalg/symbolic.hpp"
#include "oracles.hpp"

using namespace monalg;
using oracle::ideal;

namespace {

MonomialIdeal c3() { return oracle::from_edges(3, {{1, 2}, {2, 3}, {1, 3}}); }
MonomialIdeal c4() { return oracle::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

std::vector<std::uint64_t> edge_masks(const MonomialIdeal& I) {
  std::vector<std::uint64_t> out;
  for (const auto& g : I.generators()) {
    std::uint64_t e = 0;
    for (auto i : g.support()) e |= std::uint64_t{1} << i;
    out.push_back(e);
  }
  return out;
}

// I^(n) from the minimal covers by scanning [0, n]^s.
std::set<std::vector<std::int64_t>> symbolic_oracle(const MonomialIdeal& I, int n) {
  auto covers = oracle::minimal_covers(I.num_vars(), edge_masks(I));
  return oracle::box_minimal(I.num_vars(), n, [&](const ExponentVector& a) {
    for (auto c : covers) {
      std::int64_t sum = 0;
      for (auto i : members(c)) sum += a[i];
      if (sum < n) return false;
    }
    return true;
  });
}

bool contained(const MonomialIdeal& small, const MonomialIdeal& big) {
  for (const auto& g : small.generators())
    if (!oracle::in_ideal(big, g)) return false;
  return true;
}

MonomialIdeal random_graph_ideal(std::mt19937& rng, std::size_t s) {
  while (true) {
    Graph g = oracle::random_graph(rng, s);
    if (!g.has_isolated_vertices()) return g.edge_ideal();
  }
}

}  // namespace

TEST_CASE("symbolic power examples") {
  auto t = ideal_sum(ideal_power(c3(), 2), ideal({{1, 1, 1}}));
  CHECK(symbolic_power(c3(), 2) == t);
  CHECK(symbolic_power(c4(), 2) == ideal_power(c4(), 2));
  auto q2 = symbolic_power(oracle::q6(), 2);
  auto i2 = ideal_power(oracle::q6(), 2);
  CHECK(contained(i2, q2));
  CHECK_FALSE(contained(q2, i2));
  CHECK(symbolic_power(c4(), 1) == c4());
  CHECK_THROWS_AS(symbolic_power(ideal({{2, 0}, {0, 1}}), 2), PreconditionError);
}

TEST_CASE("symbolic powers match the cover scan and the power laws") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    MonomialIdeal I = oracle::random_clutter(rng, 3 + trial % 3);
    SymbolicPowerCache cache(I);
    for (int n = 1; n <= 3; ++n) {
      CHECK(oracle::as_set(cache.power(n)) == symbolic_oracle(I, n));
      CHECK(contained(ideal_power(I, n), cache.power(n)));
      // Symbolic powers are integrally closed.
      NewtonPolyhedron np(cache.power(n));
      CHECK(np.closure_generators(1, 1'000'000) == cache.power(n));
    }
    CHECK(contained(product(cache.power(1), cache.power(2)), cache.power(3)));
  }
}

TEST_CASE("Simis ideals and max-flow min-cut") {
  CHECK(is_simis(c4()));
  CHECK(has_mfmc(c4()));
  CHECK_FALSE(is_simis(c3()));
  CHECK_FALSE(has_mfmc(c3()));
  auto gap = mfmc_spot_check(c3());
  CHECK_FALSE(gap.passed);
  REQUIRE(gap.gap_weight.has_value());
  CHECK(*gap.gap_weight == IntVector{1, 1, 1});
  CHECK(gap.lp_value == Rational(3, 2));
  CHECK(gap.packing_value == 1);
  CHECK(gap.cover_value == 2);
  CHECK(mfmc_spot_check(oracle::cycle(6).edge_ideal()).passed);
  // Q6: Q(I) integral, yet I^(2) is not I^2, so the Rees algebra is not normal.
  CHECK(covering_polyhedron(oracle::q6()).is_integral());
  CHECK_FALSE(is_simis(oracle::q6()));
  CHECK_FALSE(is_normal(oracle::q6(), NormalityMethod::hilbert).normal);
}

TEST_CASE("graph law: Simis iff bipartite; MFMC implies packing") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t s = 3 + trial % 6;
    Graph g = oracle::random_graph(rng, s);
    if (g.has_isolated_vertices()) continue;
    CHECK(is_simis(g.edge_ideal()) == g.is_bipartite());
  }
  for (int trial = 0; trial < 30; ++trial) {
    MonomialIdeal I = oracle::random_clutter(rng, 3 + trial % 4);
    if (has_mfmc(I)) CHECK(has_packing_property(I));
    if (I.num_vars() <= 5) {
      bool simis = true;
      for (int n = 2; n <= 3; ++n) simis = simis && symbolic_power(I, n) == ideal_power(I, n);
      if (!simis) CHECK_FALSE(is_simis(I));
    }
  }
}

TEST_CASE("symbolic Rees algebra generators") {
  auto c4g = symbolic_rees_generators(c4());
  CHECK(c4g.size() == 8);
  for (const auto& g : c4g) CHECK(g.z_degree <= 1);
  auto c3g = symbolic_rees_generators(c3());
  CHECK(c3g.size() == 7);
  CHECK(std::count(c3g.begin(), c3g.end(), SymbolicReesGenerator{ExponentVector{1, 1, 1}, 2}) == 1);
  auto prime = symbolic_rees_generators(ideal({{1, 0}, {0, 1}}));
  std::vector<SymbolicReesGenerator> expected{
      {ExponentVector{0, 1}, 0}, {ExponentVector{0, 1}, 1}, {ExponentVector{1, 0}, 0}, {ExponentVector{1, 0}, 1}};
  CHECK(prime == expected);

  // Against the irreducible points of the Simis cone in a box.
  std::mt19937 rng(19);
  for (int trial = 0; trial < 12; ++trial) {
    MonomialIdeal I = oracle::random_clutter(rng, 3 + trial % 2);
    const std::size_t s = I.num_vars();
    std::vector<IntVector> facets;
    for (std::size_t i = 0; i <= s; ++i) {
      IntVector e(s + 1, 0);
      e[i] = 1;
      facets.push_back(e);
    }
    for (auto c : oracle::minimal_covers(s, edge_masks(I))) {
      IntVector l(s + 1, 0);
      for (auto i : members(c)) l[i] = 1;
      l[s] = -1;
      facets.push_back(l);
    }
    std::set<IntVector> got;
    std::int64_t top = 0;
    for (const auto& g : symbolic_rees_generators(I)) {
      IntVector v = g.monomial.to_integers();
      v.push_back(g.z_degree);
      got.insert(v);
      for (auto x : g.monomial) top = std::max(top, x);
      top = std::max(top, g.z_degree);
    }
    CHECK(got == oracle::irreducible_points(facets, {}, s + 1, 0, top + 1));
  }
}

TEST_CASE("ic-resurgence") {
  auto r4 = ic_resurgence(c4());
  CHECK(r4.rho_ic == 1);
  CHECK(r4.q_integral);
  auto r3 = ic_resurgence(c3());
  CHECK(r3.rho_ic == Rational(4, 3));
  CHECK(r3.u == RatVector{Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  CHECK(r3.v == RatVector{Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  CHECK(r3.ceiling == 2);
  CHECK(ic_resurgence(oracle::q6()).rho_ic == 1);

  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    MonomialIdeal I = oracle::random_clutter(rng, 3 + trial % 5);
    auto r = ic_resurgence(I);
    auto rd = ic_resurgence(alexander_dual(I));
    CHECK(r.rho_ic == rd.rho_ic);
    CHECK(r.q_integral == covering_polyhedron(alexander_dual(I)).is_integral());
    // n/r >= rho_ic forces I^(n) into the closure of I^r.
    if (I.num_vars() <= 5)
      for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k)
          if (symbolic_escapes_closure(I, n, k)) CHECK(Rational(n, k) < r.rho_ic);
  }
}

TEST_CASE("containment function") {
  auto q6 = oracle::q6();
  CHECK(containment_function(q6, 1) == 1);
  for (int r = 2; r <= 6; ++r) CHECK(containment_function(q6, r) == r + 1);
  CHECK(resurgence_one_test(q6));
  CHECK(symbolic_escapes_power(q6, 2, 2));
  CHECK_FALSE(symbolic_escapes_closure(q6, 2, 2));
  for (int r = 1; r <= 4; ++r) CHECK(containment_function(c4(), r) == r);
  CHECK(resurgence_one_test(c4()));
  CHECK_FALSE(resurgence_one_test(c3()));

  // C3, r = 2, by ascending scan with the cover oracle.
  auto i2 = ideal_power(c3(), 2);
  int f2 = 0;
  for (int n = 1; n <= 6 && f2 == 0; ++n) {
    bool inside = true;
    for (const auto& g : symbolic_oracle(c3(), n)) inside = inside && oracle::in_ideal(i2, ExponentVector(g));
    if (inside) f2 = n;
  }
  CHECK(containment_function(c3(), 2) == f2);
  CHECK(f2 == 3);
}

TEST_CASE("uniform containment ceiling") {
  CHECK(uniform_containment_ceiling(c3()) == 2);
  CHECK(uniform_containment_ceiling(c4()) == 1);
  CHECK(uniform_containment_ceiling(oracle::cycle(5).edge_ideal(), 3) == 2);
}

TEST_CASE("first symbolic failure of graphs is half the odd girth") {
  std::mt19937 rng(29);
  for (std::size_t n : {3, 5, 7}) {
    auto I = oracle::cycle(n).edge_ideal();
    int first = 0;
    for (int k = 1; k <= 5 && first == 0; ++k)
      if (!(symbolic_power(I, k) == ideal_power(I, k))) first = k;
    CHECK(first == *simis_failure_degree(oracle::cycle(n)));
  }
  int checked = 0;
  while (checked < 8) {
    Graph g = oracle::random_graph(rng, 4 + checked % 3);
    if (g.edges().empty() || g.is_bipartite()) continue;
    ++checked;
    auto r0 = *simis_failure_degree(g);
    for (int k = 1; k < r0; ++k) CHECK(symbolic_power(g.edge_ideal(), k) == ideal_power(g.edge_ideal(), k));
    CHECK_FALSE(symbolic_power(g.edge_ideal(), r0) == ideal_power(g.edge_ideal(), r0));
  }
}
