#pragma once

#include "monalg/matrix.hpp"

namespace monalg {

enum class LpStatus { optimal, infeasible, unbounded };

/// maximize c.y subject to A y <= b, y >= 0. The dual solution u satisfies
/// u >= 0, u A >= c and u.b equals the optimum.
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  RatVector primal;
  RatVector dual;
};

LpResult lp_maximize(const RatMatrix& a, const RatVector& b, const RatVector& c);

enum class LpSense { max, min };

/// The membership pair for a non-negative s x m matrix A:
///   max: maximize 1.y subject to A y <= alpha, y >= 0 (witness y)
///   min: minimize alpha.x subject to x A >= 1, x >= 0 (witness x)
/// Throws PreconditionError when the program is infeasible or unbounded.
struct LpOptimum {
  Rational value;
  RatVector witness;
};

LpOptimum lp_optimize(const IntMatrix& a, const IntVector& alpha, LpSense sense);

}  // namespace monalg
