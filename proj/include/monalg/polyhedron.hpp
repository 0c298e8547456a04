#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "monalg/cone.hpp"
#include "monalg/monomial.hpp"

namespace monalg {

/// {x in Q^n : a_i . x >= b_i}. Must be pointed. Vertices and recession rays
/// are computed eagerly by double description on the homogenization.
class RationalPolyhedron {
public:
  RationalPolyhedron(std::size_t dim, std::vector<IntVector> normals, IntVector offsets);

  std::size_t dimension() const noexcept { return n_; }
  const std::vector<IntVector>& normals() const noexcept { return normals_; }
  const IntVector& offsets() const noexcept { return offsets_; }

  /// Vertex gamma/d stored as the primitive pair (gamma, d), sorted by gamma/d.
  const std::vector<std::pair<IntVector, Integer>>& scaled_vertices() const noexcept { return scaled_; }
  std::vector<RatVector> vertices() const;
  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  bool is_bounded() const noexcept { return rays_.empty(); }
  bool is_integral() const;
  bool contains(const RatVector& x) const;

private:
  std::size_t n_;
  std::vector<IntVector> normals_;
  IntVector offsets_;
  std::vector<std::pair<IntVector, Integer>> scaled_;
  std::vector<IntVector> rays_;
};

/// Q(I) = {x >= 0 : x . v_i >= 1}. Requires every variable to occur in a generator.
RationalPolyhedron covering_polyhedron(const MonomialIdeal& ideal);

/// RC(I) = cone(e_1, ..., e_s, (v_1, 1), ..., (v_m, 1)) in Z^{s+1}.
RationalCone rees_cone(const MonomialIdeal& ideal);

/// Irreducible representation of the Rees cone: unit facet normals e_i and the
/// normals (gamma_i, -d_i), one per vertex gamma_i / d_i of Q(I).
struct ReesRepresentation {
  std::vector<std::size_t> unit_facets;  // i with e_i a facet normal (0-based, i <= s)
  std::vector<IntVector> normals;        // (gamma, -d), sorted
  std::size_t integral_count = 0;        // r: normals with d = 1
  std::size_t vertex_count = 0;          // p: vertices of Q(I)
  bool q_integral() const { return integral_count == vertex_count; }
};

/// Facets of the Rees cone, cross-checked against the vertices of Q(I).
/// Rejects ideals of height one in one variable, where Q(I) is a single point.
ReesRepresentation rees_cone_representation(const MonomialIdeal& ideal);

/// Lattice polytope conv(points) in Z^n.
class LatticePolytope {
public:
  explicit LatticePolytope(std::vector<IntVector> points);

  std::size_t ambient_dimension() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return cone_.dimension() - 1; }
  const std::vector<IntVector>& points() const noexcept { return points_; }
  std::vector<IntVector> vertices() const;
  /// f . (x, 1) >= 0 and e . (x, 1) = 0 describe the polytope.
  const std::vector<IntVector>& facets() const noexcept { return cone_.facets(); }
  const std::vector<IntVector>& equations() const noexcept { return cone_.equations(); }
  /// Normalized volume dim! * vol inside the affine lattice of the polytope.
  Integer normalized_volume() const { return cone_.normalized_volume(); }
  const RationalCone& cone() const noexcept { return cone_; }

  /// |nP cap Z^n|. Enumeration visits at most max_nodes partial assignments.
  Integer count_lattice_points(std::size_t n, std::size_t max_nodes = 200'000'000) const;
  std::vector<IntVector> lattice_points(std::size_t n, std::size_t max_nodes = 200'000'000) const;

private:
  std::size_t n_;
  std::vector<IntVector> points_;
  RationalCone cone_;
};

struct EhrhartData {
  std::size_t dimension = 0;
  std::vector<Integer> counts;  // E(0), ..., E(d + 1)
  RatVector coefficients;       // E(n) = sum_k coefficients[k] n^k
  IntVector h_vector;           // h_0, ..., h_deg, trailing zeros removed
  Integer normalized_volume;    // d! times the leading coefficient

  std::size_t h_degree() const { return h_vector.size() - 1; }
  Rational evaluate(const Integer& n) const;
};

/// Counts n = 0..d+1, interpolates on 0..d, verifies the extra count, and
/// cross-checks the leading coefficient against the triangulation volume.
EhrhartData ehrhart(const LatticePolytope& polytope, std::size_t max_nodes = 200'000'000);

/// h_j = sum_{i <= j} (-1)^i C(d+1, i) E(j - i), trailing zeros removed.
IntVector h_vector_from_counts(const std::vector<Integer>& counts, std::size_t dimension);

/// Newton interpolation through (0, E(0)), ..., (d, E(d)).
RatVector interpolate(const std::vector<Integer>& values, std::size_t degree);

}  // namespace monalg
