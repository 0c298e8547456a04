#pragma once

#include <optional>
#include <vector>

#include "monalg/arith.hpp"

namespace monalg {

using IntMatrix = std::vector<IntVector>;  // row major
using RatMatrix = std::vector<RatVector>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix transpose(const IntMatrix& a);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, const IntVector& x);
RatMatrix to_rational(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);
std::size_t rank(const RatMatrix& a);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& a);

/// Reduced row echelon form; pivot columns are reported when requested.
RatMatrix rref(RatMatrix a, std::vector<std::size_t>* pivots = nullptr);

/// Basis of {x : a x = 0} made of primitive integer vectors.
std::vector<IntVector> nullspace(const IntMatrix& a, std::size_t columns);

/// Some solution of a x = b, if one exists.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Inverse of a non-singular square matrix.
RatMatrix inverse(const RatMatrix& a);

/// P * A * Q = diag(d_1, ..., d_r, 0, ...) with d_i | d_{i+1}, P and Q unimodular.
struct SmithForm {
  IntMatrix p;
  IntMatrix p_inverse;
  IntMatrix q;
  IntVector diagonal;  // the r non-zero invariant factors
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

struct SmithInvariant {
  Integer value;  // gcd of the non-zero r x r minors
  std::size_t rank = 0;
};

/// Delta_r(B) for r = rank(B) when r is omitted. Throws when r exceeds the rank.
SmithInvariant smith_invariant(const IntMatrix& b, std::optional<std::size_t> r = std::nullopt);

}  // namespace monalg
