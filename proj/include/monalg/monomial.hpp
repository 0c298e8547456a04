#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "monalg/arith.hpp"

namespace monalg {

/// Exponent vector a of the monomial t^a = t_1^{a_1} ... t_s^{a_s}.
class ExponentVector {
public:
  using value_type = std::int64_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t s) : e_(s, 0) {}
  ExponentVector(std::initializer_list<value_type> init);
  explicit ExponentVector(std::vector<value_type> entries);

  static ExponentVector unit(std::size_t s, std::size_t i);

  std::size_t size() const noexcept { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  std::span<const value_type> entries() const noexcept { return e_; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  value_type degree() const;
  bool is_zero() const;
  bool is_squarefree() const;
  std::vector<std::size_t> support() const;

  /// Componentwise a <= b, i.e. t^a divides t^b.
  bool divides(const ExponentVector& other) const;

  ExponentVector operator+(const ExponentVector& other) const;
  ExponentVector operator*(value_type k) const;
  /// Componentwise max(a - b, 0): the exponent of t^a : t^b.
  ExponentVector saturating_sub(const ExponentVector& other) const;
  ExponentVector lcm(const ExponentVector& other) const;

  IntVector to_integers() const;
  std::string to_string() const;  // space separated

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

private:
  std::vector<value_type> e_;
};

/// Unit and zero ideals are never MonomialIdeal values.
enum class IdealSentinel { unit, zero };

/// A proper non-zero monomial ideal, stored by its minimal generating set.
class MonomialIdeal {
public:
  /// Minimalizes and canonically sorts. Throws PreconditionError on empty input,
  /// mismatched lengths, s = 0, or a zero exponent vector (the unit ideal).
  static MonomialIdeal from_generators(std::vector<ExponentVector> gens);

  /// Squarefree ideal from supports given as 0-based index lists.
  static MonomialIdeal from_supports(std::size_t s,
                                     const std::vector<std::vector<std::size_t>>& supports);

  std::size_t num_vars() const noexcept { return s_; }
  std::size_t num_generators() const noexcept { return gens_.size(); }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }

  bool is_squarefree() const;
  /// All generators share one total degree.
  std::optional<std::int64_t> uniform_degree() const;
  ExponentVector::value_type max_exponent(std::size_t i) const;

  /// t^a lies in the ideal.
  bool contains(const ExponentVector& a) const;
  /// other is contained in this ideal.
  bool contains(const MonomialIdeal& other) const;

  /// Incidence matrix: s x m, columns are the generator exponent vectors.
  std::vector<IntVector> incidence_matrix() const;

  /// One generator per line, exponents space separated.
  std::string to_text() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  MonomialIdeal(std::size_t s, std::vector<ExponentVector> gens)
      : s_(s), gens_(std::move(gens)) {}

  std::size_t s_ = 0;
  std::vector<ExponentVector> gens_;
};

/// Divisibility-minimal subset of gens, canonically sorted.
MonomialIdeal minimal_generating_set(std::vector<ExponentVector> gens);

/// Keeps divisibility-minimal elements, deduplicated and sorted. No validation.
std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_power(const MonomialIdeal& ideal, int n);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon_monomial(const MonomialIdeal& ideal, const ExponentVector& a);

/// Ideal generated by the characteristic vectors of the minimal vertex
/// covers of the clutter of a squarefree ideal.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

using MinorResult = std::variant<MonomialIdeal, IdealSentinel>;

/// Value substituted for a variable when forming a minor.
enum class Substitution { keep, zero, one };

/// Substitutes 0 or 1 for variables in the generators and regenerates.
MinorResult minor(const MonomialIdeal& ideal, const std::map<std::size_t, int>& assignment);
MinorResult minor(const MonomialIdeal& ideal, std::span<const Substitution> assignment);

/// Prime ideal generated by the listed variables.
MonomialIdeal prime_of_variables(std::size_t s, const std::vector<std::size_t>& vars);

/// Generated by single variables only.
bool is_prime_monomial_ideal(const MonomialIdeal& ideal);

}  // namespace monalg
