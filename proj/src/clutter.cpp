#include "monalg/clutter.hpp"

#include <algorithm>
#include <set>

#include "monalg/errors.hpp"

namespace monalg {

std::vector<std::size_t> members(VertexSet v) {
  std::vector<std::size_t> out;
  while (v) {
    out.push_back(static_cast<std::size_t>(__builtin_ctzll(v)));
    v &= v - 1;
  }
  return out;
}

namespace {

// Drops supersets and duplicates, then sorts numerically.
std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet x : sets) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [x](VertexSet k) { return (k & x) == k; });
    if (!redundant) kept.push_back(x);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

Clutter::Clutter(std::size_t s, std::vector<VertexSet> edges) : s_(s) {
  require(s >= 1 && s <= max_vertices, "clutter vertex count out of range");
  require(!edges.empty(), "a clutter needs at least one edge");
  const VertexSet all = s == 64 ? ~VertexSet{0} : ((VertexSet{1} << s) - 1);
  for (VertexSet e : edges) {
    require(e != 0, "clutter edges must be non-empty");
    require((e & ~all) == 0, "clutter edge uses a vertex out of range");
  }
  edges_ = minimal_sets(std::move(edges));
}

Clutter Clutter::from_ideal(const MonomialIdeal& ideal) {
  require(ideal.is_squarefree(), "clutters correspond to squarefree ideals");
  require(ideal.num_vars() <= max_vertices, "too many variables for a clutter");
  std::vector<VertexSet> edges;
  for (const auto& g : ideal.generators()) {
    VertexSet e = 0;
    for (auto i : g.support()) e |= VertexSet{1} << i;
    edges.push_back(e);
  }
  return Clutter(ideal.num_vars(), std::move(edges));
}

MonomialIdeal Clutter::edge_ideal() const {
  std::vector<ExponentVector> gens;
  for (VertexSet e : edges_) {
    ExponentVector v(s_);
    for (auto i : members(e)) v[i] = 1;
    gens.push_back(std::move(v));
  }
  return MonomialIdeal::from_generators(std::move(gens));
}

bool Clutter::covers_all_vertices() const {
  VertexSet u = 0;
  for (VertexSet e : edges_) u |= e;
  return static_cast<std::size_t>(popcount(u)) == s_;
}

bool Clutter::is_uniform() const {
  const int k = popcount(edges_.front());
  return std::all_of(edges_.begin(), edges_.end(), [k](VertexSet e) { return popcount(e) == k; });
}

std::vector<VertexSet> Clutter::minimal_vertex_covers() const {
  return minimal_transversals(edges_);
}

std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& sets) {
  std::vector<VertexSet> current{0};
  for (VertexSet e : sets) {
    require(e != 0, "cannot cover an empty set");
    std::vector<VertexSet> next;
    for (VertexSet t : current) {
      if (t & e) {
        next.push_back(t);
        continue;
      }
      for (auto v : members(e)) next.push_back(t | (VertexSet{1} << v));
    }
    current = minimal_sets(std::move(next));
  }
  return current;
}

namespace {

void cover_search(const std::vector<VertexSet>& edges, VertexSet chosen, int size, int& best) {
  if (size >= best) return;
  auto it = std::find_if(edges.begin(), edges.end(), [chosen](VertexSet e) { return (e & chosen) == 0; });
  if (it == edges.end()) {
    best = size;
    return;
  }
  for (auto v : members(*it)) cover_search(edges, chosen | (VertexSet{1} << v), size + 1, best);
}

void matching_search(const std::vector<VertexSet>& edges, std::size_t from, VertexSet used, int size,
                     int& best) {
  best = std::max(best, size);
  if (size + static_cast<int>(edges.size() - from) <= best) return;
  for (std::size_t i = from; i < edges.size(); ++i) {
    if (edges[i] & used) continue;
    matching_search(edges, i + 1, used | edges[i], size + 1, best);
  }
}

}  // namespace

int covering_number(const Clutter& c, const ExhaustiveLimits& limits) {
  require(c.num_vertices() <= limits.max_vertices_cover, "covering number: vertex limit exceeded");
  int best = static_cast<int>(c.num_vertices()) + 1;
  cover_search(c.edges(), 0, 0, best);
  return best;
}

int matching_number(const Clutter& c, const ExhaustiveLimits& limits) {
  require(c.num_vertices() <= limits.max_vertices_cover, "matching number: vertex limit exceeded");
  int best = 0;
  matching_search(c.edges(), 0, 0, 0, best);
  return best;
}

bool is_konig(const Clutter& c, const ExhaustiveLimits& limits) {
  return covering_number(c, limits) == matching_number(c, limits);
}

bool has_packing_property(const MonomialIdeal& ideal, const ExhaustiveLimits& limits) {
  require(ideal.is_squarefree(), "packing property is defined for squarefree ideals");
  const std::size_t s = ideal.num_vars();
  require(s <= limits.max_vertices_packing, "packing property: vertex limit exceeded");
  std::vector<Substitution> assign(s);
  std::set<std::vector<VertexSet>> seen;
  std::size_t total = 1;
  for (std::size_t i = 0; i < s; ++i) total *= 3;
  // Lexicographic over {keep, zero, one}^s, first variable most significant.
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = s; i-- > 0; c /= 3) assign[i] = static_cast<Substitution>(c % 3);
    MinorResult m = minor(ideal, assign);
    if (auto* mi = std::get_if<MonomialIdeal>(&m)) {
      Clutter cl = Clutter::from_ideal(*mi);
      if (seen.insert(cl.edges()).second && !is_konig(cl, limits)) return false;
    }
  }
  return true;
}

Graph::Graph(std::size_t s, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
             bool allow_loops)
    : s_(s), adj_(s, 0) {
  require(s >= 1 && s <= Clutter::max_vertices, "graph vertex count out of range");
  for (auto [u, v] : edges) {
    require(u < s && v < s, "graph edge uses a vertex out of range");
    require(u != v || allow_loops, "loops need multigraph mode");
    if (u > v) std::swap(u, v);
    require(!adjacent(u, v), "duplicate edge");
    adj_[u] |= VertexSet{1} << v;
    adj_[v] |= VertexSet{1} << u;
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

bool Graph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.first == e.second; });
}

VertexSet Graph::neighborhood(VertexSet set) const {
  VertexSet n = 0;
  for (auto v : members(set)) n |= adj_[v];
  return n;
}

std::size_t Graph::degree(std::size_t v) const { return static_cast<std::size_t>(popcount(adj_[v])); }

MonomialIdeal Graph::edge_ideal() const {
  require(!edges_.empty(), "the edge ideal of an edgeless graph is zero");
  std::vector<ExponentVector> gens;
  for (auto [u, v] : edges_) {
    ExponentVector e(s_);
    e[u] += 1;
    e[v] += 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal::from_generators(std::move(gens));
}

Clutter Graph::clutter() const {
  require(!has_loops(), "a graph with loops has no clutter");
  std::vector<VertexSet> edges;
  for (auto [u, v] : edges_) edges.push_back((VertexSet{1} << u) | (VertexSet{1} << v));
  return Clutter(s_, std::move(edges));
}

std::vector<VertexSet> Graph::connected_components() const {
  std::vector<VertexSet> comps;
  VertexSet seen = 0;
  for (std::size_t v = 0; v < s_; ++v) {
    if ((seen >> v) & 1U) continue;
    VertexSet comp = VertexSet{1} << v, frontier = comp;
    while (frontier) {
      VertexSet next = neighborhood(frontier) & ~comp;
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

bool Graph::is_connected() const { return connected_components().size() == 1; }

bool Graph::is_bipartite_on(VertexSet component) const {
  std::vector<int> color(s_, -1);
  for (auto start : members(component)) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto w : members(adj_[u] & component)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool Graph::is_bipartite() const {
  const VertexSet all = s_ == 64 ? ~VertexSet{0} : ((VertexSet{1} << s_) - 1);
  return is_bipartite_on(all);
}

bool Graph::has_isolated_vertices() const {
  return std::any_of(adj_.begin(), adj_.end(), [](VertexSet n) { return n == 0; });
}

bool Graph::is_tree() const { return !has_loops() && edges_.size() + 1 == s_ && is_connected(); }

Graph Graph::induced_subgraph_without(std::size_t v) const {
  std::vector<std::pair<std::size_t, std::size_t>> kept;
  for (const auto& e : edges_)
    if (e.first != v && e.second != v) kept.push_back(e);
  return Graph(s_, kept, true);
}

}  // namespace monalg
