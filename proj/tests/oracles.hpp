#pragma once
// Brute-force reference implementations. Deliberately naive and independent
// of the library algorithms they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "monalg/clutter.hpp"
#include "monalg/matrix.hpp"
#include "monalg/monomial.hpp"

namespace oracle {

using monalg::ExponentVector;
using monalg::Integer;
using monalg::IntVector;
using monalg::MonomialIdeal;
using monalg::Rational;
using monalg::RatVector;

inline MonomialIdeal ideal(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<ExponentVector> g;
  for (auto r : rows) g.emplace_back(r);
  return MonomialIdeal::from_generators(g);
}

inline MonomialIdeal from_edges(std::size_t s, std::vector<std::pair<int, int>> edges_1based) {
  std::vector<std::vector<std::size_t>> sup;
  for (auto [a, b] : edges_1based) sup.push_back({std::size_t(a - 1), std::size_t(b - 1)});
  return MonomialIdeal::from_supports(s, sup);
}

inline monalg::Graph graph(std::size_t s, std::vector<std::pair<int, int>> edges_1based) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (auto [a, b] : edges_1based) e.emplace_back(a - 1, b - 1);
  return monalg::Graph(s, e);
}

inline monalg::Graph cycle(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 1; i <= n; ++i) e.emplace_back(int(i), int(i % n + 1));
  return graph(n, e);
}

inline MonomialIdeal q6() {
  return ideal({{1, 1, 0, 0, 1, 0}, {1, 0, 1, 1, 0, 0}, {0, 1, 1, 0, 0, 1}, {0, 0, 0, 1, 1, 1}});
}

inline bool divides(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Is t^a in I: scan generators.
inline bool in_ideal(const MonomialIdeal& I, const ExponentVector& a) {
  for (const auto& g : I.generators()) {
    bool d = true;
    for (std::size_t i = 0; i < a.size(); ++i) d = d && g[i] <= a[i];
    if (d) return true;
  }
  return false;
}

/// Minimal generators of the ideal of all monomials in a box satisfying pred.
inline std::set<std::vector<std::int64_t>> box_minimal(std::size_t s, std::int64_t bound,
                                                       const std::function<bool(const ExponentVector&)>& pred) {
  std::vector<std::vector<std::int64_t>> members;
  std::vector<std::int64_t> a(s, 0);
  while (true) {
    ExponentVector e(a);
    if (pred(e)) members.push_back(a);
    std::size_t k = 0;
    while (k < s && ++a[k] > bound) a[k++] = 0;
    if (k == s) break;
  }
  std::set<std::vector<std::int64_t>> out;
  for (const auto& x : members) {
    bool minimal = true;
    for (const auto& y : members)
      if (y != x && divides(y, x)) {
        minimal = false;
        break;
      }
    if (minimal) out.insert(x);
  }
  return out;
}

inline std::set<std::vector<std::int64_t>> as_set(const MonomialIdeal& I) {
  std::set<std::vector<std::int64_t>> out;
  for (const auto& g : I.generators()) out.insert(std::vector<std::int64_t>(g.begin(), g.end()));
  return out;
}

/// Minimal vertex covers by subset enumeration.
inline std::vector<std::uint64_t> minimal_covers(std::size_t s, const std::vector<std::uint64_t>& edges) {
  std::vector<std::uint64_t> covers;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << s); ++c) {
    bool ok = std::all_of(edges.begin(), edges.end(), [c](std::uint64_t e) { return (e & c) != 0; });
    if (ok) covers.push_back(c);
  }
  std::vector<std::uint64_t> out;
  for (auto c : covers) {
    bool minimal = std::none_of(covers.begin(), covers.end(),
                                [c](std::uint64_t d) { return d != c && (d & c) == d; });
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int min_cover_size(std::size_t s, const std::vector<std::uint64_t>& edges) {
  int best = 99;
  for (auto c : minimal_covers(s, edges)) best = std::min(best, __builtin_popcountll(c));
  return best;
}

inline int max_matching(const std::vector<std::uint64_t>& edges) {
  int best = 0;
  const std::size_t m = edges.size();
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << m); ++sub) {
    std::uint64_t used = 0;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      if ((sub >> i) & 1U) {
        if (used & edges[i]) ok = false;
        used |= edges[i];
      }
    if (ok) best = std::max(best, __builtin_popcountll(sub));
  }
  return best;
}

/// Solves the square system M x = b exactly (Cramer via rational elimination).
inline bool solve_square(std::vector<RatVector> m, RatVector b, RatVector& x) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(m[p], m[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
      b[i] -= f * b[c];
    }
  }
  x.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
  return true;
}

/// Vertices of {x : rows . x >= rhs} by solving every n x n subsystem.
inline std::set<RatVector> bfs_vertices(const std::vector<RatVector>& rows, const RatVector& rhs, std::size_t n) {
  std::set<RatVector> out;
  const std::size_t k = rows.size();
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == n) {
      std::vector<RatVector> m;
      RatVector b;
      for (auto i : pick) {
        m.push_back(rows[i]);
        b.push_back(rhs[i]);
      }
      RatVector x;
      if (!solve_square(m, b, x)) return;
      for (std::size_t i = 0; i < k; ++i) {
        Rational v = 0;
        for (std::size_t j = 0; j < n; ++j) v += rows[i][j] * x[j];
        if (v < rhs[i]) return;
      }
      out.insert(x);
      return;
    }
    for (std::size_t i = start; i < k; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

/// Vertices of Q(I) = {x >= 0, x . v_i >= 1}.
inline std::set<RatVector> covering_vertices(const MonomialIdeal& I) {
  const std::size_t s = I.num_vars();
  std::vector<RatVector> rows;
  RatVector rhs;
  for (std::size_t i = 0; i < s; ++i) {
    RatVector e(s, 0);
    e[i] = 1;
    rows.push_back(e);
    rhs.push_back(0);
  }
  for (const auto& g : I.generators()) {
    rows.push_back(RatVector(g.begin(), g.end()));
    rhs.push_back(1);
  }
  return bfs_vertices(rows, rhs, s);
}

/// Lattice points of the cone {x : f.x >= 0, e.x = 0} inside a coordinate box,
/// and the irreducible ones among them (not a sum of two non-zero such points).
inline std::set<IntVector> irreducible_points(const std::vector<IntVector>& facets,
                                              const std::vector<IntVector>& equations, std::size_t d,
                                              long lo, long hi) {
  std::vector<IntVector> pts;
  IntVector x(d, lo);
  auto inside = [&](const IntVector& y) {
    for (const auto& f : facets)
      if (monalg::dot(f, y) < 0) return false;
    for (const auto& e : equations)
      if (monalg::dot(e, y) != 0) return false;
    return true;
  };
  while (true) {
    bool zero = std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; });
    if (!zero && inside(x)) pts.push_back(x);
    std::size_t k = 0;
    while (k < d && ++x[k] > hi) x[k++] = lo;
    if (k == d) break;
  }
  std::set<IntVector> all(pts.begin(), pts.end()), out;
  for (const auto& p : pts) {
    bool red = false;
    for (const auto& q : pts) {
      if (q == p) continue;
      IntVector diff(d);
      for (std::size_t i = 0; i < d; ++i) diff[i] = p[i] - q[i];
      if (all.count(diff)) {
        red = true;
        break;
      }
    }
    if (!red) out.insert(p);
  }
  return out;
}

inline MonomialIdeal random_ideal(std::mt19937& rng, std::size_t s, int max_exp, std::size_t max_gens) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::uniform_int_distribution<std::size_t> ng(1, max_gens);
  while (true) {
    std::vector<ExponentVector> g;
    const std::size_t n = ng(rng);
    for (std::size_t k = 0; k < n; ++k) {
      ExponentVector v(s);
      for (std::size_t i = 0; i < s; ++i) v[i] = e(rng);
      if (!v.is_zero()) g.push_back(v);
    }
    if (!g.empty()) return MonomialIdeal::from_generators(g);
  }
}

/// Random squarefree ideal whose generators cover every variable and have size >= 2.
inline MonomialIdeal random_clutter(std::mt19937& rng, std::size_t s) {
  std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << s) - 1);
  std::uniform_int_distribution<int> count(2, 6);
  while (true) {
    std::vector<std::vector<std::size_t>> sup;
    const int n = count(rng);
    std::uint64_t covered = 0;
    for (int k = 0; k < n; ++k) {
      std::uint64_t e = pick(rng);
      if (__builtin_popcountll(e) < 2) continue;
      covered |= e;
      sup.push_back(monalg::members(e));
    }
    if (sup.empty() || covered != (std::uint64_t{1} << s) - 1) continue;
    MonomialIdeal I = MonomialIdeal::from_supports(s, sup);
    std::uint64_t c2 = 0;
    for (const auto& g : I.generators())
      for (auto i : g.support()) c2 |= std::uint64_t{1} << i;
    if (c2 == covered) return I;
  }
}

/// Random simple graph with edge probability num/den.
inline monalg::Graph random_graph(std::mt19937& rng, std::size_t s, int num = 1, int den = 2) {
  std::uniform_int_distribution<int> coin(0, den - 1);
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (coin(rng) < num) e.emplace_back(i, j);
  return monalg::Graph(s, e);
}

/// Vertex sets inducing a cycle (connected and 2-regular), or a looped vertex.
inline std::set<std::uint64_t> induced_cycle_sets(const monalg::Graph& g) {
  std::set<std::uint64_t> out;
  const std::size_t s = g.num_vertices();
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << s); ++sub) {
    auto vs = monalg::members(sub);
    if (vs.size() == 1) {
      if (g.adjacent(vs[0], vs[0])) out.insert(sub);
      continue;
    }
    if (vs.size() < 3) continue;
    bool regular = true;
    for (auto v : vs)
      if (__builtin_popcountll(g.neighbors(v) & sub & ~(std::uint64_t{1} << v)) != 2) regular = false;
    if (!regular) continue;
    std::uint64_t reach = std::uint64_t{1} << vs[0], frontier = reach;
    while (frontier) {
      std::uint64_t next = 0;
      for (auto v : monalg::members(frontier)) next |= g.neighbors(v) & sub;
      next &= ~reach;
      reach |= next;
      frontier = next;
    }
    if (reach == sub) out.insert(sub);
  }
  return out;
}

/// Simple graph on s vertices whose edges are the set bits of mask, pairs in lex order.
inline monalg::Graph graph_from_mask(std::size_t s, std::uint64_t mask) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  std::size_t k = 0;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j, ++k)
      if ((mask >> k) & 1U) e.emplace_back(i, j);
  return monalg::Graph(s, e);
}

}  // namespace oracle
