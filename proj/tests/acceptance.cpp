// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "monalg/closure.hpp"
#include "monalg/codes.hpp"
#include "monalg/errors.hpp"
#include "monalg/graphs.hpp"
#include "monalg/invariants.hpp"
#include "monalg/polyhedron.hpp"
#include "monalg/symbolic.hpp"
#include "oracles.hpp"

using namespace monalg;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << "failed: " << what << "; ";
    ok = ok && cond;
  }
};

using Criterion = std::function<void(Outcome&)>;

// ---- graph corpora ----

// Connected graphs on s vertices, one per isomorphism class (minimum edge mask
// over all vertex relabelings).
std::vector<Graph> connected_graphs_up_to_iso(std::size_t s) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) {
      index[{i, j}] = pairs.size();
      pairs.emplace_back(i, j);
    }
  std::vector<std::size_t> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> relabel;  // edge k goes to relabel[p][k]
  do {
    std::vector<std::size_t> m;
    for (auto [i, j] : pairs) m.push_back(index[{std::min(perm[i], perm[j]), std::max(perm[i], perm[j])}]);
    relabel.push_back(m);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g = oracle::graph_from_mask(s, mask);
    if (!g.is_connected()) continue;
    std::uint64_t best = mask;
    for (const auto& m : relabel) {
      std::uint64_t image = 0;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if ((mask >> k) & 1U) image |= std::uint64_t{1} << m[k];
      best = std::min(best, image);
    }
    if (seen.insert(best).second) out.push_back(g);
  }
  return out;
}

Graph random_connected(std::mt19937& rng, std::size_t s, int num, int den) {
  while (true) {
    Graph g = oracle::random_graph(rng, s, num, den);
    if (g.is_connected()) return g;
  }
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.num_vertices(), v + a.num_vertices());
  return Graph(a.num_vertices() + b.num_vertices(), e);
}

Graph two_triangles() { return oracle::graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}}); }

// Fixed corpus of graphs with at most eight vertices and no isolated vertices.
std::vector<Graph> graph_corpus() {
  std::vector<Graph> c;
  for (std::size_t n = 3; n <= 8; ++n) c.push_back(oracle::cycle(n));
  c.push_back(two_triangles());
  c.push_back(disjoint_union(oracle::cycle(3), oracle::cycle(5)));
  c.push_back(disjoint_union(oracle::cycle(4), oracle::cycle(4)));
  c.push_back(oracle::graph(7, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}}));
  c.push_back(oracle::graph(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {5, 6}, {6, 7}, {7, 8}, {8, 6}}));
  c.push_back(oracle::graph(7, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {4, 5}, {5, 6}, {4, 6}, {6, 7}}));
  c.push_back(oracle::graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}));
  std::mt19937 rng(2024);
  while (c.size() < 60) {
    const std::size_t s = 4 + c.size() % 5;
    Graph g = oracle::random_graph(rng, s, 2, 5);
    if (g.edges().empty() || g.has_isolated_vertices()) continue;
    c.push_back(g);
  }
  return c;
}

int nonbipartite_components_by_coloring(const Graph& g) {
  const std::size_t s = g.num_vertices();
  std::vector<int> colour(s, -1);
  int count = 0;
  for (std::size_t root = 0; root < s; ++root) {
    if (colour[root] != -1) continue;
    bool odd = false;
    std::vector<std::size_t> stack{root};
    colour[root] = 0;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto v : members(g.neighbors(u))) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          stack.push_back(v);
        } else if (colour[v] == colour[u]) {
          odd = true;
        }
      }
    }
    if (odd) ++count;
  }
  return count;
}

// ---- criteria ----

void multiplicity_regression(Outcome& o) {
  auto I = oracle::ideal({{6, 0}, {0, 5}, {2, 2}, {3, 1}});
  auto region = multiplicity_region(I);
  auto e = multiplicity(I);
  o.detail << "e = " << e << ", vol = " << region.region_volume;
  o.expect(e == 20, "e(I) = 20");
  o.expect(region.region_volume == 10, "vol = 10");
}

void q6_suite(Outcome& o) {
  auto I = oracle::q6();
  auto c = Clutter::from_ideal(I);
  const int alpha0 = covering_number(c), beta1 = matching_number(c);
  o.expect(alpha0 == 2, "alpha_0 = 2");
  o.expect(beta1 == 1, "beta_1 = 1");
  o.expect(!is_konig(c), "not Konig");
  o.expect(covering_polyhedron(I).is_integral(), "Q(I) integral");
  std::vector<int> f;
  for (int r = 1; r <= 6; ++r) f.push_back(containment_function(I, r));
  o.expect(f == std::vector<int>{1, 3, 4, 5, 6, 7}, "f(1) = 1, f(r) = r + 1");
  o.expect(resurgence_one_test(I), "resurgence_one_test");
  auto sym2 = symbolic_power(I, 2), pow2 = ideal_power(I, 2);
  o.expect(sym2.contains(pow2) && !(sym2 == pow2), "I^(2) strictly contains I^2");
  o.detail << "f = 1";
  for (std::size_t r = 1; r < f.size(); ++r) o.detail << "," << f[r];
}

void six_way_equivalence(Outcome& o) {
  std::vector<Graph> graphs;
  for (std::size_t s = 2; s <= 6; ++s)
    for (auto& g : connected_graphs_up_to_iso(s)) graphs.push_back(g);
  const std::size_t exhaustive = graphs.size();
  std::mt19937 rng(7);
  for (int k = 0; k < 25; ++k) graphs.push_back(random_connected(rng, 7, 1, 3));
  std::size_t gr_checked = 0;
  for (const auto& g : graphs) {
    auto I = g.edge_ideal();
    const bool bip = g.is_bipartite();
    const bool simis = is_simis(I);
    const bool packing = has_packing_property(I);
    const bool q_integral = covering_polyhedron(I).is_integral();
    const bool dual_simis = is_simis(alexander_dual(I));
    bool agree = simis == bip && packing == bip && q_integral == bip && dual_simis == bip;
    // gr_I(S) reducedness is decided for height >= 2; stars have height one.
    if (covering_number(g.clutter()) >= 2) {
      agree = agree && is_gr_reduced(I) == bip;
      ++gr_checked;
    }
    if (!agree) {
      o.expect(false, "equivalence on a graph with " + std::to_string(g.num_vertices()) + " vertices");
      return;
    }
  }
  o.detail << exhaustive << " classes s <= 6, 25 random s = 7, gr tested on " << gr_checked;
}

void normality_cross_method(Outcome& o) {
  std::mt19937 rng(99);
  int normal = 0;
  for (int k = 0; k < 100; ++k) {
    auto I = oracle::random_ideal(rng, 2 + k % 3, 3, 4);
    auto v = is_normal(I, NormalityMethod::both);
    if (!v.hilbert_verdict || !v.powers_verdict) {
      o.expect(false, "both methods finished");
      return;
    }
    o.expect(*v.hilbert_verdict == *v.powers_verdict, "Hilbert verdict equals power verdict");
    normal += v.normal;
  }
  o.detail << "100 ideals, " << normal << " normal";
}

void hochster_bowtie(Outcome& o) {
  auto corpus = graph_corpus();
  for (const auto& g : corpus) {
    o.expect(edge_ideal_normal(g) == is_normal(g.edge_ideal(), NormalityMethod::hilbert).normal,
             "edge_ideal_normal agrees with the Hilbert basis test");
    o.expect(check_edge_subring_closure(g).matches, "bowtie closure equals the edge-cone Hilbert basis");
  }
  auto tt = two_triangles();
  auto check = check_edge_subring_closure(tt);
  o.expect(check.hilbert_basis.size() == tt.edges().size(), "K[G] normal for two triangles");
  o.expect(!edge_ideal_normal(tt), "S[Iz] not normal for two triangles");
  o.expect(!is_normal(tt.edge_ideal(), NormalityMethod::hilbert).normal, "closure module agrees");
  o.detail << corpus.size() << " graphs";
}

void odd_girth_law(Outcome& o) {
  std::vector<Graph> graphs{oracle::cycle(3), oracle::cycle(5), oracle::cycle(7)};
  std::mt19937 rng(31);
  while (graphs.size() < 23) {
    Graph g = oracle::random_graph(rng, 4 + graphs.size() % 4, 1, 2);
    if (!g.edges().empty() && !g.is_bipartite()) graphs.push_back(g);
  }
  for (const auto& g : graphs) {
    auto I = g.edge_ideal();
    int r0 = 0;
    for (int n = 1; n <= 5 && r0 == 0; ++n)
      if (!(symbolic_power(I, n) == ideal_power(I, n))) r0 = n;
    std::size_t girth = g.num_vertices() + 1;
    for (const auto& c : induced_odd_cycles(g)) girth = std::min(girth, c.length());
    o.expect(r0 > 0, "a failure degree was found");
    o.expect(2 * r0 - 1 == static_cast<int>(girth), "2 r0 - 1 equals the odd girth");
    o.expect(odd_girth(g) == static_cast<int>(girth), "odd_girth agrees with the cycle list");
  }
  o.detail << graphs.size() << " graphs";
}

void resurgence_duality(Outcome& o) {
  std::mt19937 rng(41);
  for (int k = 0; k < 50; ++k) {
    auto I = oracle::random_clutter(rng, 3 + k % 5);
    o.expect(ic_resurgence(I).rho_ic == ic_resurgence(alexander_dual(I)).rho_ic, "rho_ic(I) = rho_ic(dual)");
  }
  auto tri = ic_resurgence(oracle::cycle(3).edge_ideal()).rho_ic;
  o.expect(tri == Rational(4, 3), "rho_ic(C3) = 4/3");
  o.detail << "50 clutters, triangle " << tri;
}

void veronese_formulas(Outcome& o) {
  int cases = 0;
  for (std::size_t s = 4; s <= 8; ++s)
    for (std::size_t k = 2; 2 * k <= s; ++k) {
      std::vector<IntVector> pts;
      const auto sq = squarefree_veronese_ideal(s, k);
      for (const auto& g : sq.generators()) pts.push_back(g.to_integers());
      auto e = ehrhart(LatticePolytope(pts));
      const auto reg = static_cast<std::int64_t>(e.h_degree());
      const auto ceil = static_cast<std::int64_t>((s + k - 1) / k);
      o.expect(reg == static_cast<std::int64_t>(s) - ceil, "reg = s - ceil(s/k)");
      o.expect(reg - static_cast<std::int64_t>(s) == -ceil, "a = -ceil(s/k)");
      ++cases;
    }
  o.detail << cases << " pairs (s, k)";
}

void monotonicity(Outcome& o) {
  std::mt19937 rng(53);
  std::bernoulli_distribution coin(0.5);
  int bipartite = 0, odd = 0, attempts = 0;
  while (bipartite + odd < 50 && attempts < 5000) {
    ++attempts;
    const std::size_t s = 4 + attempts % 3;
    const bool want_odd = (bipartite + odd) % 2 == 1;
    Graph big = oracle::random_graph(rng, s, 1, 2);
    if (big.edges().size() < 2 || big.is_bipartite() == want_odd) continue;
    std::vector<std::pair<std::size_t, std::size_t>> kept;
    for (auto e : big.edges())
      if (coin(rng)) kept.push_back(e);
    if (kept.empty() || kept.size() == big.edges().size()) continue;
    Graph small(s, kept);
    if (want_odd && small.is_bipartite()) continue;
    if (!edge_ideal_normal(small) || !edge_ideal_normal(big)) continue;
    auto m = regularity_monotonicity_check(small.edge_ideal(), big.edge_ideal());
    o.expect(m.reg_small <= m.reg_large, "reg K[I] <= reg K[J]");
    (want_odd ? odd : bipartite)++;
  }
  o.expect(bipartite + odd == 50, "50 pairs generated");
  o.detail << bipartite << " bipartite pairs, " << odd << " non-bipartite pairs";
}

void ehrhart_criterion(Outcome& o) {
  auto corpus = graph_corpus();
  for (const auto& g : corpus) {
    auto d = ehrhart_normality_criterion(g);
    o.expect(d.ehrhart_ring_equal == d.component_condition && d.component_condition == d.ideal_normal,
             "three checks agree");
    const int c1 = nonbipartite_components_by_coloring(g);
    o.expect(d.nonbipartite_components == c1, "non-bipartite component count");
    const Integer expected = c1 == 0 ? Integer(1) : Integer(1) << (c1 - 1);
    o.expect(d.delta_r == expected, "Delta_r = 2^(c1 - 1)");
  }
  o.detail << corpus.size() << " graphs";
}

void codes(Outcome& o) {
  std::mt19937 rng(61);
  int three_way = 0, full = 0;
  for (int k = 0; k < 30; ++k) {
    const int q = k % 2 == 0 ? 2 : 3;
    const std::size_t s = 2 + k % 2;
    auto space = projective_space(q, s).points();
    std::shuffle(space.begin(), space.end(), rng);
    space.resize(std::min<std::size_t>(space.size(), 2 + k % 9));
    PointSet x(q, s, space);
    const auto reg = regularity_threshold(x);
    std::size_t prev = x.size() + 1, first_one = 0;
    for (std::size_t d = 1; d <= reg; ++d) {
      auto code = build_code(x, d);
      const auto delta = minimum_distance(code);
      if (prev > 1) o.expect(delta < prev, "delta strictly decreases");
      if (delta == 1 && first_one == 0) first_one = d;
      prev = delta;
      if (x.size() <= 6) {
        auto g = gmd_and_vasconcelos(x, d, 1);
        o.expect(g.gmd == delta && g.vasconcelos == delta, "delta = delta_I = theta_I");
        ++three_way;
      }
    }
    o.expect(prev == 1, "delta reaches 1");
    o.expect(first_one == v_number_points(x), "first d with delta = 1 is the v-number");
    if (x.size() <= 6) {
      auto code = build_code(x, reg);
      for (std::size_t r = 1; r <= code.dimension(); ++r)
        o.expect(generalized_weight(code, r) == r, "delta(d, r) = r past stabilization");
      ++full;
    }
  }
  o.detail << "30 point sets, " << three_way << " three-way checks, " << full << " full-code checks";
}

MonomialIdeal staircase_ideal(const std::vector<std::int64_t>& h) {
  std::vector<ExponentVector> gens;
  for (std::size_t x = 0; x < h.size(); ++x)
    if (x == 0 || h[x] < h[x - 1]) gens.push_back(ExponentVector{static_cast<std::int64_t>(x), h[x]});
  return MonomialIdeal::from_generators(gens);
}

void m_fullness(Outcome& o) {
  o.expect(is_m_full_2var(oracle::ideal({{11, 0}, {8, 1}, {6, 2}, {5, 3}, {1, 4}, {0, 10}})), "six-generator example");
  std::mt19937 rng(71);
  int complete = 0, sweeps = 0, attempts = 0;
  while (complete < 50 && attempts < 20000) {
    ++attempts;
    const int a = 1 + static_cast<int>(rng() % 6);
    std::vector<std::int64_t> h(static_cast<std::size_t>(a) + 1, 0);
    std::int64_t top = 1 + static_cast<std::int64_t>(rng() % 6);
    for (int x = 0; x < a; ++x) {
      h[static_cast<std::size_t>(x)] = top;
      top = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(top));
    }
    auto I = staircase_ideal(h);
    if (!(closure_of_power(I, 1) == I)) continue;
    ++complete;
    o.expect(is_m_full_2var(I), "integrally closed implies m-full");
    // Every monomial J containing I: mu(J) <= mu(I).
    std::vector<std::int64_t> hj(h.size());
    std::function<void(std::size_t, std::int64_t)> sub = [&](std::size_t y, std::int64_t bound) {
      if (y == h.size()) {
        if (hj[0] > 0) {
          o.expect(staircase_ideal(hj).num_generators() <= I.num_generators(), "mu(J) <= mu(I)");
          ++sweeps;
        }
        return;
      }
      for (std::int64_t v = 0; v <= std::min(bound, h[y]); ++v) {
        hj[y] = v;
        sub(y + 1, v);
      }
    };
    sub(0, h[0]);
  }
  o.expect(complete == 50, "50 integrally closed ideals");
  o.detail << complete << " ideals, " << sweeps << " overideals";
}

}  // namespace

int main() {
  const std::vector<std::tuple<const char*, double, Criterion>> criteria = {
      {"multiplicity regression", 1, multiplicity_regression},
      {"Q6 suite", 60, q6_suite},
      {"graph six-way equivalence", 600, six_way_equivalence},
      {"normality cross-method", 300, normality_cross_method},
      {"Hochster/bowtie correctness", 600, hochster_bowtie},
      {"odd-girth law", 300, odd_girth_law},
      {"resurgence duality", 300, resurgence_duality},
      {"Veronese formulas", 300, veronese_formulas},
      {"regularity monotonicity", 600, monotonicity},
      {"Ehrhart normality criterion", 600, ehrhart_criterion},
      {"codes", 600, codes},
      {"m-fullness", 120, m_fullness},
  };
  int failed = 0, number = 0;
  for (const auto& [name, limit, run] : criteria) {
    ++number;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > limit) {
      o.ok = false;
      o.detail << " over the " << limit << " s limit";
    }
    failed += !o.ok;
    std::printf("%s %2d %s (%s; %.2f s)\n", o.ok ? "PASS" : "FAIL", number, name, o.detail.str().c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
