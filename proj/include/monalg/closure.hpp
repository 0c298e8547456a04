#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monalg/budget.hpp"
#include "monalg/monomial.hpp"
#include "monalg/polyhedron.hpp"

namespace monalg {

/// LP route: t^a lies in the closure of I^n iff max{|lambda| : A lambda <= a, lambda >= 0} >= n.
struct MembershipResult {
  bool member = false;
  Rational lp_value;
  RatVector witness;  // lambda
};

MembershipResult membership(const ExponentVector& a, const MonomialIdeal& ideal, int n);

/// NP(I) through the irreducible Rees cone representation: x in NP(I) iff
/// x >= 0 and <x, gamma> >= d for every normal (gamma, -d).
class NewtonPolyhedron {
public:
  explicit NewtonPolyhedron(const MonomialIdeal& ideal);

  std::size_t num_vars() const noexcept { return s_; }
  /// a / n in NP(I).
  bool contains_scaled(const ExponentVector& a, std::int64_t n) const;
  const ReesRepresentation& representation() const noexcept { return rep_; }

  /// Minimal generators of the closure of I^n; the candidate scan is bounded by max_points.
  MonomialIdeal closure_generators(std::int64_t n, std::size_t max_points) const;

private:
  std::size_t s_;
  ReesRepresentation rep_;
  std::vector<std::vector<std::int64_t>> gamma_;
  std::vector<std::int64_t> d_;
  std::vector<std::int64_t> max_exp_;
};

MonomialIdeal closure_of_power(const MonomialIdeal& ideal, int n, const Budget& budget = {});

/// t^a in I^n, by a search over sums of n generators.
bool in_power(const MonomialIdeal& ideal, const ExponentVector& a, int n);

enum class NormalityMethod { hilbert, powers, both };

struct NormalityVerdict {
  bool normal = false;
  std::string method;  // the method(s) the verdict rests on
  std::optional<bool> hilbert_verdict;
  std::optional<bool> powers_verdict;
  std::vector<IntVector> hilbert_extra;     // Hilbert basis elements outside A'
  std::optional<int> failing_power;         // smallest n with closure(I^n) != I^n
  std::optional<ExponentVector> witness;    // in closure(I^n) but not in I^n
  std::vector<int> checked_powers;
  bool partial = false;                     // one requested method ran out of budget
  std::string budget_note;
};

/// Hilbert route: HB(RC(I)) = A'. Powers route: closure(I^n) = I^n for n = 1..s-1.
/// When both run they must agree. Throws BudgetExceeded only when no requested
/// method finished.
NormalityVerdict is_normal(const MonomialIdeal& ideal, NormalityMethod method = NormalityMethod::both,
                           const Budget& budget = {});

struct NormalizationIndex {
  int index = 0;
  int general_bound = 0;                 // s - 1
  std::optional<int> hyperplane_bound;   // rank(A) - 1 when the generators lie on an affine hyperplane
  std::vector<bool> stable;              // stable[n]: closure(I^{n+1}) = I closure(I^n), n = 0..s-1
};

NormalizationIndex normalization_index(const MonomialIdeal& ideal, const Budget& budget = {});

/// Normal and Q(I) integral. Requires a squarefree ideal of height at least two.
bool is_gr_reduced(const MonomialIdeal& ideal, const Budget& budget = {});

/// Rank of the incidence matrix and whether the generators lie on an affine
/// hyperplane missing the origin.
struct HyperplaneData {
  std::size_t rank = 0;
  bool on_affine_hyperplane = false;
};
HyperplaneData hyperplane_data(const MonomialIdeal& ideal);

}  // namespace monalg
