#pragma once

#include <cstddef>
#include <vector>

#include "monalg/matrix.hpp"

namespace monalg {

/// Extreme rays (primitive, sorted) of the pointed cone {x in R^dim : h.x >= 0 for all rows h}.
/// The rows must span R^dim. Double description with a combinatorial adjacency test.
std::vector<IntVector> extreme_rays(const std::vector<IntVector>& inequalities, std::size_t dim);

/// Lattice in which Hilbert bases are taken: Z^d intersected with the span of the
/// generators, or the group generated by the generators themselves.
enum class LatticeKind { ambient, generated };

/// Cone R_+ G spanned by integer generators in Z^d.
class RationalCone {
public:
  RationalCone(std::vector<IntVector> generators, std::size_t ambient_dim);

  std::size_t ambient_dimension() const noexcept { return d_; }
  std::size_t dimension() const noexcept { return r_; }
  const std::vector<IntVector>& generators() const noexcept { return gens_; }

  bool is_pointed() const noexcept { return pointed_; }
  /// Primitive normals f with f.x >= 0 on the cone, one per facet, sorted.
  const std::vector<IntVector>& facets() const noexcept { return facets_; }
  /// e.x = 0 cuts out the linear span.
  const std::vector<IntVector>& equations() const noexcept { return equations_; }
  bool contains(const IntVector& x) const;
  /// x is an integer combination of the generators.
  bool in_generated_lattice(const IntVector& x) const;

  /// Primitive extreme rays, sorted. Requires a pointed cone.
  std::vector<IntVector> extreme_rays() const;

  /// Placing triangulation: greedy independent generators first, the rest in index order.
  const std::vector<std::vector<std::size_t>>& triangulation() const;
  /// Sum of |det| over the triangulation, measured in the saturated lattice of the span.
  Integer normalized_volume() const;
  /// Index of the generated lattice in the saturated one.
  Integer lattice_index() const;

  /// Minimal Hilbert basis, sorted. Throws BudgetExceeded when more than
  /// max_candidates parallelepiped points would be enumerated.
  std::vector<IntVector> hilbert_basis(LatticeKind kind = LatticeKind::ambient,
                                       std::size_t max_candidates = 2'000'000) const;

private:
  IntVector lattice_coords(const IntVector& x) const;  // first r entries of P x

  std::size_t d_;
  std::size_t r_ = 0;
  std::vector<IntVector> gens_;
  SmithForm smith_;  // of the d x n matrix with the generators as columns
  std::vector<IntVector> coords_;        // generators in lattice coordinates
  std::vector<IntVector> facets_local_;  // facet normals in lattice coordinates
  std::vector<IntVector> facets_;
  std::vector<IntVector> equations_;
  bool pointed_ = false;
  mutable std::vector<std::vector<std::size_t>> triangulation_;
  mutable bool triangulated_ = false;
};

/// Integer matrix N and positive D with D * W^{-1} = N for a non-singular square W.
struct ScaledInverse {
  IntMatrix numerators;
  Integer denominator;
};
ScaledInverse scaled_inverse(const IntMatrix& w);

}  // namespace monalg
