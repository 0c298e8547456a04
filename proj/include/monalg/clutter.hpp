#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monalg/monomial.hpp"

namespace monalg {

using VertexSet = std::uint64_t;  // bit i set <=> vertex t_{i+1} present

inline int popcount(VertexSet v) { return __builtin_popcountll(v); }
std::vector<std::size_t> members(VertexSet v);

/// Vertex set {t_1..t_s} plus an inclusion-minimal family of non-empty edges.
class Clutter {
public:
  static constexpr std::size_t max_vertices = 64;

  Clutter(std::size_t s, std::vector<VertexSet> edges);
  static Clutter from_ideal(const MonomialIdeal& squarefree_ideal);

  std::size_t num_vertices() const noexcept { return s_; }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }

  MonomialIdeal edge_ideal() const;
  /// Every vertex lies in some edge.
  bool covers_all_vertices() const;
  bool is_uniform() const;

  /// Minimal vertex covers (the edges of the blocker), canonically sorted.
  std::vector<VertexSet> minimal_vertex_covers() const;

private:
  std::size_t s_;
  std::vector<VertexSet> edges_;
};

/// Minimal transversals of a family of non-empty sets.
std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& sets);

struct ExhaustiveLimits {
  std::size_t max_vertices_cover = 20;
  std::size_t max_vertices_packing = 12;
};

/// Minimum vertex cover size alpha_0 (exact branch and bound).
int covering_number(const Clutter& c, const ExhaustiveLimits& limits = {});
/// Maximum number of pairwise disjoint edges beta_1.
int matching_number(const Clutter& c, const ExhaustiveLimits& limits = {});
bool is_konig(const Clutter& c, const ExhaustiveLimits& limits = {});

/// Every minor (including the clutter itself) is Konig. Enumerates 3^s minors.
bool has_packing_property(const MonomialIdeal& squarefree_ideal,
                          const ExhaustiveLimits& limits = {});

/// Simple graph (or multigraph with loops when allow_loops is set).
class Graph {
public:
  Graph(std::size_t s, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
        bool allow_loops = false);

  std::size_t num_vertices() const noexcept { return s_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept {
    return edges_;
  }
  bool has_loops() const;
  bool adjacent(std::size_t u, std::size_t v) const { return (adj_[u] >> v) & 1U; }
  VertexSet neighbors(std::size_t v) const { return adj_[v]; }
  /// N_G(set): union of the neighborhoods.
  VertexSet neighborhood(VertexSet set) const;
  std::size_t degree(std::size_t v) const;

  /// Edge ideal; a loop at t_i contributes t_i^2.
  MonomialIdeal edge_ideal() const;
  Clutter clutter() const;  // loop-free graphs only

  std::vector<VertexSet> connected_components() const;
  bool is_connected() const;
  bool is_bipartite() const;
  /// Bipartite check restricted to one vertex set.
  bool is_bipartite_on(VertexSet component) const;
  bool has_isolated_vertices() const;
  bool is_tree() const;

  Graph induced_subgraph_without(std::size_t v) const;  // keeps vertex count, drops edges at v

private:
  std::size_t s_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<VertexSet> adj_;
};

}  // namespace monalg
