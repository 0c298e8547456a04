#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monalg/budget.hpp"
#include "monalg/clutter.hpp"

namespace monalg {

/// A cycle given by its vertex sequence. Loops are cycles of length one.
struct CycleRecord {
  std::vector<std::size_t> vertices;  // starts at the smallest vertex
  VertexSet set = 0;
  bool induced = false;
  bool odd = false;

  std::size_t length() const noexcept { return vertices.size(); }
  friend bool operator==(const CycleRecord&, const CycleRecord&) = default;
};

/// Every cycle of the graph without chords, each listed once up to rotation
/// and reflection. Throws BudgetExceeded past budget.max_cycles records or
/// when the graph has more than max_cycle_vertices vertices.
std::vector<CycleRecord> induced_cycles(const Graph& g, const Budget& budget = {});
std::vector<CycleRecord> induced_odd_cycles(const Graph& g, const Budget& budget = {});

/// Two induced odd cycles with C1 disjoint from N_G(C2).
struct HochsterConfiguration {
  CycleRecord first;
  CycleRecord second;

  ExponentVector monomial(std::size_t s) const;  // product of the cycle vertices
  std::int64_t z_degree() const { return static_cast<std::int64_t>(first.length() + second.length()) / 2; }
};

std::vector<HochsterConfiguration> hochster_configurations(const Graph& g, const Budget& budget = {});
bool edge_ideal_normal(const Graph& g, const Budget& budget = {});

struct ReesClosureGenerator {
  ExponentVector monomial;
  std::int64_t z_degree = 0;
  friend bool operator==(const ReesClosureGenerator&, const ReesClosureGenerator&) = default;
  friend auto operator<=>(const ReesClosureGenerator&, const ReesClosureGenerator&) = default;
};

/// Monomials M_{C1,C2} over the Hochster configurations, sorted and deduplicated.
std::vector<ReesClosureGenerator> rees_closure_generators(const Graph& g, const Budget& budget = {});

/// Two induced odd cycles meeting in at most one vertex and lying in one
/// component (so a path meeting each cycle once joins them when disjoint).
struct Bowtie {
  CycleRecord first;
  CycleRecord second;
  std::vector<std::size_t> path;  // joining path, empty when the cycles meet

  ExponentVector monomial(std::size_t s) const;  // M_w, a shared vertex counted twice
};

std::vector<Bowtie> bowties(const Graph& g, const Budget& budget = {});

/// Edge vectors together with every M_w, sorted and deduplicated.
std::vector<ExponentVector> edge_subring_closure(const Graph& g, const Budget& budget = {});

/// Compares edge_subring_closure with the Hilbert basis of R_+A in the lattice ZA.
struct EdgeSubringCheck {
  bool matches = false;
  std::vector<IntVector> hilbert_basis;
  std::vector<IntVector> missing;      // Hilbert basis elements absent from the bowtie set
  std::vector<IntVector> outside;      // bowtie monomials outside R_+A or ZA
};
EdgeSubringCheck check_edge_subring_closure(const Graph& g, const Budget& budget = {});

/// t^a is a product of edge monomials.
bool in_edge_subring(const Graph& g, const ExponentVector& a);

/// Any two vertex-disjoint odd cycles are joined by an edge.
bool odd_cycle_condition(const Graph& g, const Budget& budget = {});
/// Normality of K[G] for connected G: every M_w lies in K[G]. Checked
/// against the odd cycle condition.
bool edge_subring_normal(const Graph& g, const Budget& budget = {});

/// Length of a shortest odd cycle (1 for a loop); nullopt for bipartite graphs.
std::optional<int> odd_girth(const Graph& g);
/// First n with I^n != I^(n), namely (odd girth + 1) / 2; nullopt when I(G) is Simis.
std::optional<int> simis_failure_degree(const Graph& g);

struct EhrhartNormalityDiagnosis {
  bool normal = false;
  bool ehrhart_ring_equal = false;     // K[Iz] = A(P_G) via the Hilbert basis of the cone over (v_i, 1)
  bool component_condition = false;    // at most one non-bipartite component, and it has no Hochster configuration
  bool ideal_normal = false;           // closure route
  int nonbipartite_components = 0;
  Integer delta_r;                     // gcd of the maximal non-zero minors of B
  Integer delta_r_formula;             // 2^{c1-1}, or 1
  std::vector<IntVector> ehrhart_extra;
};
/// Evaluates the three equivalent conditions independently; a disagreement is
/// an InternalConsistencyError.
EhrhartNormalityDiagnosis ehrhart_normality_criterion(const Graph& g, const Budget& budget = {});

/// dim K[G] = s - c0(G), compared with the rank of the incidence matrix.
std::size_t edge_subring_dimension(const Graph& g);

/// All minimal vertex covers have the same size.
bool is_unmixed(const Clutter& c);
/// Bipartite graph without isolated vertices: some bipartition and perfect
/// matching x_i y_i satisfy the transitivity condition for distinct i, j, k.
bool unmixed_bipartite_check(const Graph& g);
/// Bipartite graph without isolated vertices: some bipartition, perfect
/// matching and ordering satisfy the Herzog-Hibi conditions. At most 8 pairs.
bool cm_bipartite(const Graph& g);
/// A tree is Cohen-Macaulay iff it is a whisker graph over a tree.
bool cm_tree(const Graph& g);

}  // namespace monalg
