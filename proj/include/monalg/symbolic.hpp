#pragma once

#include <map>
#include <optional>
#include <vector>

#include "monalg/budget.hpp"
#include "monalg/clutter.hpp"
#include "monalg/monomial.hpp"

namespace monalg {

/// Symbolic powers I^(n) of a squarefree ideal, computed once per n. Each
/// power is found as the intersection of the prime powers p^n and again as
/// the minimal lattice points a with a/n in Q(I^vee); the two must agree.
class SymbolicPowerCache {
public:
  explicit SymbolicPowerCache(const MonomialIdeal& ideal, const Budget& budget = {});

  const MonomialIdeal& ideal() const noexcept { return ideal_; }
  /// Minimal vertex covers, i.e. the minimal primes.
  const std::vector<VertexSet>& covers() const noexcept { return covers_; }
  const MonomialIdeal& power(int n);
  /// t^a in I^(n): every minimal prime p has a(p) >= n.
  bool contains(const ExponentVector& a, int n) const;

private:
  MonomialIdeal ideal_;
  Budget budget_;
  std::vector<VertexSet> covers_;
  std::map<int, MonomialIdeal> powers_;
};

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int n, const Budget& budget = {});

/// I^n = I^(n) for all n, decided as: I normal and Q(I) integral.
bool is_simis(const MonomialIdeal& ideal, const Budget& budget = {});

/// Max-flow min-cut, decided through is_simis. When s <= 6 every weight
/// alpha in {0..max_entry}^s is also checked directly: the LP optimum must
/// equal both the integer packing and the cheapest cover.
bool has_mfmc(const MonomialIdeal& ideal, const Budget& budget = {});

struct MfmcSpotCheck {
  bool passed = true;
  std::size_t weights_checked = 0;
  std::optional<IntVector> gap_weight;  // first alpha (by total, then lex) with a gap
  Rational lp_value;
  Integer packing_value;
  Integer cover_value;
};
MfmcSpotCheck mfmc_spot_check(const MonomialIdeal& ideal, int max_entry = 3);

/// Hilbert basis of the Simis cone {x >= 0 : <x, (u, -1)> >= 0 for each
/// minimal cover u}, as monomials t^a z^n. Each element satisfies t^a in I^(n).
struct SymbolicReesGenerator {
  ExponentVector monomial;
  std::int64_t z_degree = 0;
  friend bool operator==(const SymbolicReesGenerator&, const SymbolicReesGenerator&) = default;
  friend auto operator<=>(const SymbolicReesGenerator&, const SymbolicReesGenerator&) = default;
};
std::vector<SymbolicReesGenerator> symbolic_rees_generators(const MonomialIdeal& ideal,
                                                            const Budget& budget = {});

struct ResurgenceReport {
  Rational rho_ic;
  RatVector u;  // vertex of Q(I)
  RatVector v;  // vertex of Q(I^vee), <u, v> = 1 / rho_ic
  Integer ceiling;
  bool q_integral = false;
  bool dual_q_integral = false;
};

/// 1 / rho_ic(I) = min <u, v> over vertices of Q(I) and Q(I^vee), checked
/// against a linear program over Q(I) for each vertex of Q(I^vee).
ResurgenceReport ic_resurgence(const MonomialIdeal& ideal);

/// f(r) = min{n >= 1 : I^(n) in I^r}, searched over r <= n <= r * bight(I).
int containment_function(const MonomialIdeal& ideal, int r, const Budget& budget = {});

/// I^(n) is not contained in I^r, or not in the closure of I^r.
bool symbolic_escapes_power(const MonomialIdeal& ideal, int n, int r, const Budget& budget = {});
bool symbolic_escapes_closure(const MonomialIdeal& ideal, int n, int r, const Budget& budget = {});

/// rho(I) = 1 iff Q(I) is integral and I^(r+1) lies in I^r for r = 1..s-1.
bool resurgence_one_test(const MonomialIdeal& ideal, const Budget& budget = {});

/// ceil(rho_ic), with I^(hn) in the closure of I^n verified for n <= check_up_to.
Integer uniform_containment_ceiling(const MonomialIdeal& ideal, int check_up_to = 4,
                                    const Budget& budget = {});

/// Largest size of a minimal vertex cover.
int big_height(const MonomialIdeal& squarefree_ideal);

}  // namespace monalg
