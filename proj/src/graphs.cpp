#include "monalg/graphs.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "monalg/closure.hpp"
#include "monalg/cone.hpp"
#include "monalg/errors.hpp"
#include "monalg/matrix.hpp"

namespace monalg {

namespace {

constexpr VertexSet bit(std::size_t v) { return VertexSet{1} << v; }

VertexSet set_of(const std::vector<std::size_t>& vs) {
  VertexSet s = 0;
  for (auto v : vs) s |= bit(v);
  return s;
}

// Consecutive vertices adjacent and no other pair adjacent.
bool is_chordless(const Graph& g, const std::vector<std::size_t>& c) {
  const std::size_t n = c.size();
  if (n == 1) return g.adjacent(c[0], c[0]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
      if (g.adjacent(c[i], c[j]) != consecutive) return false;
    }
  return true;
}

CycleRecord make_record(const Graph& g, std::vector<std::size_t> vs) {
  CycleRecord r;
  r.set = set_of(vs);
  r.odd = vs.size() % 2 == 1;
  r.induced = is_chordless(g, vs);
  r.vertices = std::move(vs);
  return r;
}

ExponentVector cycle_product(std::size_t s, const CycleRecord& a, const CycleRecord& b) {
  ExponentVector m(s);
  for (auto v : a.vertices) m[v] += 1;
  for (auto v : b.vertices) m[v] += 1;
  return m;
}

Graph restrict_to(const Graph& g, VertexSet comp) {
  std::vector<std::pair<std::size_t, std::size_t>> kept;
  for (const auto& e : g.edges())
    if (((comp >> e.first) & 1U) && ((comp >> e.second) & 1U)) kept.push_back(e);
  return Graph(g.num_vertices(), kept, true);
}

VertexSet component_of(const std::vector<VertexSet>& comps, std::size_t v) {
  for (auto c : comps)
    if ((c >> v) & 1U) return c;
  return 0;
}

// Shortest path from one vertex set to another; its interior avoids both.
std::vector<std::size_t> joining_path(const Graph& g, VertexSet from, VertexSet to) {
  const std::size_t s = g.num_vertices();
  std::vector<int> parent(s, -2);
  std::deque<std::size_t> queue;
  for (auto v : members(from)) {
    parent[v] = -1;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    if ((to >> u) & 1U) {
      std::vector<std::size_t> path;
      for (int w = static_cast<int>(u); w != -1; w = parent[w]) path.push_back(static_cast<std::size_t>(w));
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (auto w : members(g.neighbors(u)))
      if (parent[w] == -2) {
        parent[w] = static_cast<int>(u);
        queue.push_back(w);
      }
  }
  return {};
}

std::vector<ExponentVector> edge_vectors(const Graph& g) {
  std::vector<ExponentVector> out;
  for (auto [u, v] : g.edges()) {
    ExponentVector e(g.num_vertices());
    e[u] += 1;
    e[v] += 1;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<CycleRecord> induced_cycles(const Graph& g, const Budget& budget) {
  const std::size_t s = g.num_vertices();
  if (s > budget.max_cycle_vertices)
    throw BudgetExceeded("cycle search limited to " + std::to_string(budget.max_cycle_vertices) +
                         " vertices");
  std::vector<CycleRecord> out;
  auto record = [&](std::vector<std::size_t> vs) {
    if (out.size() >= budget.max_cycles)
      throw BudgetExceeded("more than " + std::to_string(budget.max_cycles) + " induced cycles");
    out.push_back(make_record(g, std::move(vs)));
  };

  for (std::size_t v = 0; v < s; ++v) {
    if (g.adjacent(v, v)) record({v});
    // Paths v = p0, p1, ..., all above v, with no chords; closing at a vertex adjacent to v.
    std::vector<std::size_t> path{v};
    std::function<void(VertexSet)> extend = [&](VertexSet on_path) {
      const std::size_t last = path.back();
      const VertexSet interior = on_path & ~bit(v) & ~bit(last);
      for (auto w : members(g.neighbors(last))) {
        if (w <= v || ((on_path >> w) & 1U)) continue;
        if (g.neighbors(w) & interior) continue;
        if (path.size() >= 2 && g.adjacent(w, v)) {
          if (path[1] < w) {
            auto cycle = path;
            cycle.push_back(w);
            record(std::move(cycle));
          }
          continue;
        }
        path.push_back(w);
        extend(on_path | bit(w));
        path.pop_back();
      }
    };
    extend(bit(v));
  }
  for (const auto& c : out) check_consistency(c.induced, "enumerated cycle has a chord");
  std::sort(out.begin(), out.end(), [](const CycleRecord& a, const CycleRecord& b) {
    return std::pair(a.length(), a.vertices) < std::pair(b.length(), b.vertices);
  });
  return out;
}

std::vector<CycleRecord> induced_odd_cycles(const Graph& g, const Budget& budget) {
  auto all = induced_cycles(g, budget);
  std::vector<CycleRecord> odd;
  for (auto& c : all)
    if (c.odd) odd.push_back(std::move(c));
  return odd;
}

ExponentVector HochsterConfiguration::monomial(std::size_t s) const {
  return cycle_product(s, first, second);
}

std::vector<HochsterConfiguration> hochster_configurations(const Graph& g, const Budget& budget) {
  auto odd = induced_odd_cycles(g, budget);
  std::vector<HochsterConfiguration> out;
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = i + 1; j < odd.size(); ++j)
      if ((odd[i].set & g.neighborhood(odd[j].set)) == 0) out.push_back({odd[i], odd[j]});
  return out;
}

bool edge_ideal_normal(const Graph& g, const Budget& budget) {
  return hochster_configurations(g, budget).empty();
}

std::vector<ReesClosureGenerator> rees_closure_generators(const Graph& g, const Budget& budget) {
  std::vector<ReesClosureGenerator> out;
  for (const auto& h : hochster_configurations(g, budget))
    out.push_back({h.monomial(g.num_vertices()), h.z_degree()});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExponentVector Bowtie::monomial(std::size_t s) const { return cycle_product(s, first, second); }

std::vector<Bowtie> bowties(const Graph& g, const Budget& budget) {
  auto odd = induced_odd_cycles(g, budget);
  auto comps = g.connected_components();
  std::vector<Bowtie> out;
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = i + 1; j < odd.size(); ++j) {
      VertexSet common = odd[i].set & odd[j].set;
      if (popcount(common) > 1) continue;
      if (common) {
        out.push_back({odd[i], odd[j], {}});
        continue;
      }
      if (component_of(comps, odd[i].vertices[0]) != component_of(comps, odd[j].vertices[0])) continue;
      auto path = joining_path(g, odd[i].set, odd[j].set);
      check_consistency(!path.empty(), "no path inside a connected component");
      out.push_back({odd[i], odd[j], std::move(path)});
    }
  return out;
}

std::vector<ExponentVector> edge_subring_closure(const Graph& g, const Budget& budget) {
  require(!g.edges().empty(), "the edge subring of an edgeless graph is trivial");
  auto out = edge_vectors(g);
  for (const auto& w : bowties(g, budget)) out.push_back(w.monomial(g.num_vertices()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EdgeSubringCheck check_edge_subring_closure(const Graph& g, const Budget& budget) {
  auto closure = edge_subring_closure(g, budget);
  std::vector<IntVector> gens;
  for (const auto& e : edge_vectors(g)) gens.push_back(e.to_integers());
  RationalCone cone(gens, g.num_vertices());
  EdgeSubringCheck out;
  out.hilbert_basis = cone.hilbert_basis(LatticeKind::generated, budget.max_points);
  std::set<IntVector> closure_set;
  for (const auto& c : closure) closure_set.insert(c.to_integers());
  for (const auto& h : out.hilbert_basis)
    if (!closure_set.count(h)) out.missing.push_back(h);
  for (const auto& c : closure_set)
    if (!cone.contains(c) || !cone.in_generated_lattice(c)) out.outside.push_back(c);
  out.matches = out.missing.empty() && out.outside.empty();
  return out;
}

bool in_edge_subring(const Graph& g, const ExponentVector& a) {
  require(a.size() == g.num_vertices(), "exponent vector has the wrong length");
  if (a.degree() % 2 != 0) return false;
  std::set<ExponentVector> failed;
  std::function<bool(ExponentVector&)> search = [&](ExponentVector& x) -> bool {
    std::size_t i = 0;
    while (i < x.size() && x[i] == 0) ++i;
    if (i == x.size()) return true;
    if (failed.count(x)) return false;
    for (auto j : members(g.neighbors(i))) {
      if (j == i ? x[i] < 2 : x[j] == 0) continue;
      x[i] -= 1;
      x[j] -= 1;
      bool ok = search(x);
      x[i] += 1;
      x[j] += 1;
      if (ok) return true;
    }
    failed.insert(x);
    return false;
  };
  ExponentVector x = a;
  return search(x);
}

bool odd_cycle_condition(const Graph& g, const Budget& budget) {
  // Two disjoint odd cycles with no joining edge contain induced ones with the same property.
  auto odd = induced_odd_cycles(g, budget);
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = i + 1; j < odd.size(); ++j) {
      if (odd[i].set & odd[j].set) continue;
      bool joined = false;
      for (auto u : members(odd[i].set))
        if (g.neighbors(u) & odd[j].set) joined = true;
      if (!joined) return false;
    }
  return true;
}

bool edge_subring_normal(const Graph& g, const Budget& budget) {
  require(g.is_connected(), "the normality criterion needs a connected graph");
  const std::size_t s = g.num_vertices();
  bool normal = true;
  for (const auto& w : bowties(g, budget))
    if (!in_edge_subring(g, w.monomial(s))) {
      normal = false;
      break;
    }
  check_consistency(normal == odd_cycle_condition(g, budget),
                    "bowtie closure and odd cycle condition disagree");
  return normal;
}

std::optional<int> odd_girth(const Graph& g) {
  if (g.has_loops()) return 1;
  const std::size_t s = g.num_vertices();
  std::optional<int> best;
  for (std::size_t root = 0; root < s; ++root) {
    std::vector<int> dist(s, -1);
    dist[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto w : members(g.neighbors(u)))
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
    }
    // An edge between two vertices at equal distance closes an odd walk of length 2d+1.
    for (auto [u, w] : g.edges())
      if (dist[u] >= 0 && dist[u] == dist[w]) {
        int len = 2 * dist[u] + 1;
        if (!best || len < *best) best = len;
      }
  }
  return best;
}

std::optional<int> simis_failure_degree(const Graph& g) {
  require(!g.has_loops(), "symbolic powers need a squarefree edge ideal");
  auto girth = odd_girth(g);
  if (!girth) return std::nullopt;
  return (*girth + 1) / 2;
}

EhrhartNormalityDiagnosis ehrhart_normality_criterion(const Graph& g, const Budget& budget) {
  require(!g.edges().empty(), "the edge ideal of an edgeless graph is zero");
  const std::size_t s = g.num_vertices();
  EhrhartNormalityDiagnosis out;

  // (i) Hilbert basis of the cone over the edge polytope.
  std::vector<IntVector> lifted;
  for (const auto& e : edge_vectors(g)) {
    IntVector v = e.to_integers();
    v.push_back(1);
    lifted.push_back(std::move(v));
  }
  RationalCone cone(lifted, s + 1);
  std::set<IntVector> gens(lifted.begin(), lifted.end());
  for (const auto& h : cone.hilbert_basis(LatticeKind::ambient, budget.max_points))
    if (!gens.count(h)) out.ehrhart_extra.push_back(h);
  out.ehrhart_ring_equal = out.ehrhart_extra.empty();

  // (ii) Component analysis, with Delta_r from the Smith form.
  std::vector<VertexSet> nonbipartite;
  for (auto c : g.connected_components())
    if (!g.is_bipartite_on(c)) nonbipartite.push_back(c);
  out.nonbipartite_components = static_cast<int>(nonbipartite.size());
  out.delta_r = smith_invariant(lifted).value;
  out.delta_r_formula = 1;
  for (int i = 1; i < out.nonbipartite_components; ++i) out.delta_r_formula *= 2;
  check_consistency(out.delta_r == out.delta_r_formula, "Delta_r differs from 2^(c1-1)");
  out.component_condition = out.delta_r == 1;
  if (out.component_condition && !nonbipartite.empty())
    out.component_condition = hochster_configurations(restrict_to(g, nonbipartite[0]), budget).empty();

  // (iii) Normality of I(G) by the Hilbert basis of the Rees cone.
  out.ideal_normal = is_normal(g.edge_ideal(), NormalityMethod::hilbert, budget).normal;

  check_consistency(out.ehrhart_ring_equal == out.component_condition &&
                        out.component_condition == out.ideal_normal,
                    "Ehrhart normality conditions disagree");
  out.normal = out.ideal_normal;
  return out;
}

std::size_t edge_subring_dimension(const Graph& g) {
  std::size_t c0 = 0;
  for (auto c : g.connected_components())
    if (g.is_bipartite_on(c)) ++c0;
  const std::size_t dim = g.num_vertices() - c0;
  std::size_t r = 0;
  if (!g.edges().empty()) {
    IntMatrix rows;
    for (const auto& e : edge_vectors(g)) rows.push_back(e.to_integers());
    r = rank(rows);
  }
  check_consistency(dim == r, "s - c0 differs from the rank of the incidence matrix");
  return dim;
}

bool is_unmixed(const Clutter& c) {
  auto covers = c.minimal_vertex_covers();
  return std::all_of(covers.begin(), covers.end(),
                     [&](VertexSet v) { return popcount(v) == popcount(covers.front()); });
}

namespace {

// arcs[i] has bit j when {x_i, y_j} is an edge, i != j.
using Relation = std::vector<std::uint32_t>;

// Calls visit(relation) for every bipartition into equal sides and every
// perfect matching x_i y_i; stops when visit returns true.
bool for_each_matched_bipartition(const Graph& g, const std::function<bool(const Relation&)>& visit) {
  require(!g.has_loops() && g.is_bipartite(), "graph must be bipartite");
  require(!g.has_isolated_vertices(), "graph must have no isolated vertices");
  const std::size_t s = g.num_vertices();
  auto comps = g.connected_components();

  std::vector<int> color(s, -1);
  for (auto c : comps) {
    auto start = members(c).front();
    color[start] = 0;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto w : members(g.neighbors(u)))
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        }
    }
  }

  for (std::uint64_t flips = 0; flips < (std::uint64_t{1} << comps.size()); ++flips) {
    std::vector<std::size_t> xs, ys;
    for (std::size_t k = 0; k < comps.size(); ++k)
      for (auto v : members(comps[k])) (color[v] ^ static_cast<int>((flips >> k) & 1U) ? ys : xs).push_back(v);
    if (xs.size() != ys.size()) continue;
    const std::size_t n = xs.size();
    std::vector<std::size_t> match(n);  // match[i] = index into ys
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
      if (i == n) {
        Relation arcs(n, 0);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (a != b && g.adjacent(xs[a], ys[match[b]])) arcs[a] |= std::uint32_t{1} << b;
        return visit(arcs);
      }
      for (std::size_t j = 0; j < n; ++j)
        if (!used[j] && g.adjacent(xs[i], ys[j])) {
          used[j] = true;
          match[i] = j;
          bool done = assign(i + 1);
          used[j] = false;
          if (done) return true;
        }
      return false;
    };
    if (assign(0)) return true;
  }
  return false;
}

}  // namespace

bool unmixed_bipartite_check(const Graph& g) {
  return for_each_matched_bipartition(g, [](const Relation& arcs) {
    const std::size_t n = arcs.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!((arcs[i] >> j) & 1U)) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (k != i && ((arcs[j] >> k) & 1U) && !((arcs[i] >> k) & 1U)) return false;
      }
    return true;
  });
}

bool cm_bipartite(const Graph& g) {
  require(g.num_vertices() <= 16, "ordering search limited to 8 matched pairs");
  return for_each_matched_bipartition(g, [](const Relation& arcs) {
    const std::size_t n = arcs.size();
    std::vector<std::uint32_t> into(n, 0);  // into[k] has bit i for arcs i -> k
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if ((arcs[i] >> k) & 1U) into[k] |= std::uint32_t{1} << i;
    // Build the order position by position; whether a placed set can be
    // completed does not depend on the order inside it.
    std::set<std::uint32_t> dead;
    std::function<bool(std::uint32_t)> place = [&](std::uint32_t placed) -> bool {
      if (placed == (std::uint32_t{1} << n) - 1) return true;
      if (dead.count(placed)) return false;
      for (std::size_t k = 0; k < n; ++k) {
        if ((placed >> k) & 1U) continue;
        if ((into[k] & ~placed) != 0) continue;  // (ii): every i -> k comes first
        bool transitive = true;                   // (iii): i -> j -> k forces i -> k
        for (std::size_t j = 0; j < n && transitive; ++j)
          if ((into[k] >> j) & 1U)
            if ((into[j] & ~into[k]) != 0) transitive = false;
        if (transitive && place(placed | (std::uint32_t{1} << k))) return true;
      }
      dead.insert(placed);
      return false;
    };
    return place(0);
  });
}

bool cm_tree(const Graph& g) {
  require(g.is_tree(), "graph must be a tree");
  const std::size_t s = g.num_vertices();
  require(s >= 2, "a single vertex has the zero edge ideal");
  if (s == 2) return true;
  VertexSet leaves = 0;
  for (std::size_t v = 0; v < s; ++v)
    if (g.degree(v) == 1) leaves |= bit(v);
  if (2 * static_cast<std::size_t>(popcount(leaves)) != s) return false;
  for (std::size_t v = 0; v < s; ++v)
    if (!((leaves >> v) & 1U) && popcount(g.neighbors(v) & leaves) != 1) return false;
  return true;
}

}  // namespace monalg
