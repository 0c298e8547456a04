#pragma once

#include <cstdint>
#include <vector>

#include "monalg/budget.hpp"
#include "monalg/monomial.hpp"

namespace monalg {

/// Delta = conv(0, a_1 e_1, ..., a_s e_s) and P0 = conv of the pure powers and
/// the generators v with <v, alpha0> < 1, alpha0 = (1/a_1, ..., 1/a_s).
/// The region is Delta minus P0.
struct MultiplicityRegion {
  IntVector pure_powers;            // a_1, ..., a_s
  std::vector<IntVector> p0_points;
  Rational delta_volume;
  Rational p0_volume;               // Euclidean, by pulling triangulation
  Rational region_volume;
};

/// Requires s >= 2 and a pure power of every variable among the generators.
MultiplicityRegion multiplicity_region(const MonomialIdeal& ideal);

/// Euclidean volume of conv(points) in R^n; zero when the hull is not full dimensional.
/// Pulling triangulation from the lexicographically smallest vertex of each face.
Rational pulling_volume(const std::vector<IntVector>& points);

/// e(I) = a_1 ... a_s - s! vol(P0), checked against the Ehrhart leading coefficient of P0.
Integer multiplicity(const MonomialIdeal& ideal, const Budget& budget = {});

/// f(n) = length of S / closure(I^n) = |N^s \ nQ|, counted directly in the box
/// [0, n a_i) and checked against E_Delta(n) - E_P0(n).
Integer normalization_hilbert_function(const MonomialIdeal& ideal, int n, const Budget& budget = {});

/// f as a polynomial of degree s, interpolated from E_Delta - E_P0 on n = 0..s and
/// checked at n = s + 1.
RatVector normalization_hilbert_polynomial(const MonomialIdeal& ideal, const Budget& budget = {});

/// a-invariants and regularities of the squarefree Veronese S_{s,k} and the
/// Veronese S^(k), both of dimension s. Requires 1 <= k <= s - 1.
struct VeroneseInvariants {
  std::int64_t a_squarefree = 0;
  std::int64_t reg_squarefree = 0;
  std::int64_t a_veronese = 0;
  std::int64_t reg_veronese = 0;
};
VeroneseInvariants veronese_invariants(std::size_t s, std::size_t k);

/// All squarefree (or all) monomials of degree k in s variables.
MonomialIdeal squarefree_veronese_ideal(std::size_t s, std::size_t k);
MonomialIdeal veronese_ideal(std::size_t s, std::size_t k);

/// Exponents a with a_i >= 1, (k-1) a_i <= -1 + sum_{j != i} a_j, sum a = 0 mod k,
/// at most k-1 entries >= 2, and sum a <= degree_cap. Requires s >= 2k >= 4.
std::vector<ExponentVector> veronese_canonical_generators(std::size_t s, std::size_t k,
                                                          std::int64_t degree_cap,
                                                          const Budget& budget = {});

struct SubringRegularityReport {
  IntVector h_vector;           // of the Newton polytope conv(v_1, ..., v_m)
  std::int64_t regularity = 0;  // deg h
  std::size_t rank = 0;         // rank of the incidence matrix = dim K[I]
  std::int64_t a_invariant = 0;
};

/// reg K[I] for a normal ideal generated in one degree. Refuses other input.
SubringRegularityReport subring_regularity(const MonomialIdeal& ideal, const Budget& budget = {});

struct MonotonicityReport {
  std::int64_t reg_small = 0;
  std::int64_t reg_large = 0;
  bool holds = false;
};

/// reg K[I] <= reg K[J] for normal k-uniform I, J with G(I) in G(J).
/// A violation throws InternalConsistencyError.
MonotonicityReport regularity_monotonicity_check(const MonomialIdeal& small, const MonomialIdeal& large,
                                                 const Budget& budget = {});

/// m-fullness of a zero-dimensional ideal of K[t1, t2] by the gap criterion on
/// the lex-sorted generators. Powers of the maximal ideal, which the criterion
/// excludes, are m-full because mu = ord + 1.
bool is_m_full_2var(const MonomialIdeal& ideal);

/// min total degree of a generator.
std::int64_t ideal_order(const MonomialIdeal& ideal);

/// s monomials of degree d in s variables define a Cremona map iff |det A| = d.
/// Requires no common factor, every variable present and det A != 0.
bool is_cremona_monomial(const std::vector<ExponentVector>& monomials);

}  // namespace monalg
