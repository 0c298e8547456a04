#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monalg/budget.hpp"
#include "monalg/clutter.hpp"
#include "monalg/monomial.hpp"

namespace monalg {

/// F_q for q in {2, 3, 4, 5, 7, 8, 9}. Elements are 0..q-1, read as base-p
/// digit strings of polynomials modulo a fixed irreducible; multiplication
/// goes through log and antilog tables of a primitive element.
class FiniteField {
public:
  explicit FiniteField(int q);

  int order() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  int add(int a, int b) const { return add_[a][b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add_[a][neg_[b]]; }
  int mul(int a, int b) const;
  int inv(int a) const;
  int pow(int a, std::int64_t e) const;
  int primitive_element() const noexcept { return exp_[1]; }

private:
  int q_, p_;
  std::vector<std::vector<int>> add_;
  std::vector<int> neg_;
  std::vector<int> log_, exp_;  // exp_ has length 2(q-1)
};

using FqVector = std::vector<int>;

/// Points of P^{s-1}(F_q), each scaled so its first non-zero entry is 1.
class PointSet {
public:
  PointSet(int q, std::size_t s, std::vector<FqVector> points);

  const FiniteField& field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return s_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<FqVector>& points() const noexcept { return points_; }
  /// Input points that had to be rescaled.
  std::size_t rescaled() const noexcept { return rescaled_; }

private:
  FiniteField field_;
  std::size_t s_;
  std::vector<FqVector> points_;
  std::size_t rescaled_ = 0;
};

/// All points of P^{s-1}(F_q).
PointSet projective_space(int q, std::size_t s);
/// [F_q^{dim} x {1}] in P^{dim}.
PointSet affine_space(int q, std::size_t dim);

/// Monomials of degree d in s variables, lex descending.
std::vector<ExponentVector> monomials_of_degree(std::size_t s, std::size_t d);

/// C_X(d) = ev_d(S_d).
struct EvaluationCode {
  int q = 2;
  std::size_t degree = 0;
  std::size_t length = 0;
  std::vector<FqVector> generator;  // one row per monomial of S_d
  std::vector<FqVector> basis;      // reduced row echelon form, dimension rows
  std::vector<std::size_t> basis_monomials;  // rows of the generator spanning the code
  std::size_t dimension() const { return basis.size(); }
};

EvaluationCode build_code(const PointSet& x, std::size_t d);

/// Row reduction over F_q; returns the non-zero rows of the reduced echelon form.
std::vector<FqVector> row_reduce(const FiniteField& f, std::vector<FqVector> rows,
                                 std::vector<std::size_t>* pivot_rows = nullptr);

/// H_X(d) = dim C_X(d).
std::size_t hilbert_function(const PointSet& x, std::size_t d);
/// First d >= 1 with H_X(d) = |X|.
std::size_t regularity_threshold(const PointSet& x);

/// delta_r(C): the smallest support of an r-dimensional subcode, by exhaustive
/// enumeration of subcodes in reduced echelon form. r = 1 is the minimum distance.
std::size_t minimum_distance(const EvaluationCode& c, const Budget& budget = {});
std::size_t generalized_weight(const EvaluationCode& c, std::size_t r, const Budget& budget = {});

/// delta_I(d, r) = |X| - max |V_X(F)| and theta_I(d, r) = min |X \ V_X(F)|, both
/// over r forms F with independent classes and a common zero on X. Forms are
/// polynomials in the monomials spanning C_X(d), evaluated point by point.
struct GmdReport {
  std::size_t gmd = 0;          // delta_I(d, r)
  std::size_t vasconcelos = 0;  // theta_I(d, r)
  bool family_empty = false;
};
GmdReport gmd_and_vasconcelos(const PointSet& x, std::size_t d, std::size_t r, const Budget& budget = {});

/// v(I(X)): least d such that some f in S_d vanishes on X \ {P} and not at P.
std::size_t v_number_points(const PointSet& x);

/// Least-degree monomial f with (I : f) prime. Throws BudgetExceeded when no
/// witness exists up to degree_cap.
struct VNumberWitness {
  std::size_t degree = 0;
  ExponentVector monomial;
  MonomialIdeal prime;
};
VNumberWitness v_number_monomial(const MonomialIdeal& ideal, std::size_t degree_cap);

/// All maximal independent sets of the graph restricted to `vertices` share one size.
bool is_well_covered(const Graph& g, VertexSet vertices);

/// G in W_2: well-covered, and G minus v well-covered for every v. Checked
/// against v(I(G)) = dim S/I(G); disagreement throws InternalConsistencyError.
struct W2Report {
  bool w2 = false;
  std::size_t dimension = 0;            // s - alpha_0(G)
  std::optional<std::size_t> v_number;  // empty when v > dimension
};
W2Report w2_test(const Graph& g);

}  // namespace monalg
