#include "monalg/monomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "monalg/clutter.hpp"
#include "monalg/errors.hpp"

namespace monalg {

ExponentVector::ExponentVector(std::initializer_list<value_type> init) : e_(init) {
  for (auto x : e_) require(x >= 0, "exponents must be non-negative");
}

ExponentVector::ExponentVector(std::vector<value_type> entries) : e_(std::move(entries)) {
  for (auto x : e_) require(x >= 0, "exponents must be non-negative");
}

ExponentVector ExponentVector::unit(std::size_t s, std::size_t i) {
  ExponentVector e(s);
  e[i] = 1;
  return e;
}

ExponentVector::value_type ExponentVector::degree() const {
  value_type d = 0;
  for (auto x : e_) d += x;
  return d;
}

bool ExponentVector::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](value_type x) { return x == 0; });
}

bool ExponentVector::is_squarefree() const {
  return std::all_of(e_.begin(), e_.end(), [](value_type x) { return x <= 1; });
}

std::vector<std::size_t> ExponentVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != 0) out.push_back(i);
  return out;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  ExponentVector r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
  return r;
}

ExponentVector ExponentVector::operator*(value_type k) const {
  ExponentVector r(*this);
  for (auto& x : r.e_) x *= k;
  return r;
}

ExponentVector ExponentVector::saturating_sub(const ExponentVector& other) const {
  ExponentVector r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max<value_type>(e_[i] - other.e_[i], 0);
  return r;
}

ExponentVector ExponentVector::lcm(const ExponentVector& other) const {
  ExponentVector r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
  return r;
}

IntVector ExponentVector::to_integers() const {
  IntVector v;
  v.reserve(e_.size());
  for (auto x : e_) v.emplace_back(static_cast<long>(x));
  return v;
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) os << ' ';
    os << e_[i];
  }
  return os.str();
}

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a > b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const ExponentVector& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), std::greater<>());
  return kept;
}

MonomialIdeal MonomialIdeal::from_generators(std::vector<ExponentVector> gens) {
  require(!gens.empty(), "a monomial ideal needs at least one generator");
  const std::size_t s = gens.front().size();
  require(s >= 1, "the ambient variable count must be positive");
  for (const auto& g : gens) {
    require(g.size() == s, "generators have mismatched lengths");
    require(!g.is_zero(), "the monomial 1 generates the unit ideal, which is not a proper ideal");
  }
  return MonomialIdeal(s, minimalize(std::move(gens)));
}

MonomialIdeal MonomialIdeal::from_supports(std::size_t s,
                                           const std::vector<std::vector<std::size_t>>& supports) {
  std::vector<ExponentVector> gens;
  for (const auto& sup : supports) {
    ExponentVector e(s);
    for (auto i : sup) {
      require(i < s, "support index out of range");
      e[i] = 1;
    }
    gens.push_back(std::move(e));
  }
  return from_generators(std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const ExponentVector& g) { return g.is_squarefree(); });
}

std::optional<std::int64_t> MonomialIdeal::uniform_degree() const {
  const auto d = gens_.front().degree();
  for (const auto& g : gens_)
    if (g.degree() != d) return std::nullopt;
  return d;
}

ExponentVector::value_type MonomialIdeal::max_exponent(std::size_t i) const {
  ExponentVector::value_type m = 0;
  for (const auto& g : gens_) m = std::max(m, g[i]);
  return m;
}

bool MonomialIdeal::contains(const ExponentVector& a) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const ExponentVector& g) { return g.divides(a); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const ExponentVector& g) { return contains(g); });
}

std::vector<IntVector> MonomialIdeal::incidence_matrix() const {
  std::vector<IntVector> a(s_, IntVector(gens_.size()));
  for (std::size_t j = 0; j < gens_.size(); ++j)
    for (std::size_t i = 0; i < s_; ++i) a[i][j] = static_cast<long>(gens_[j][i]);
  return a;
}

std::string MonomialIdeal::to_text() const {
  std::string out;
  for (const auto& g : gens_) out += g.to_string() + "\n";
  return out;
}

MonomialIdeal minimal_generating_set(std::vector<ExponentVector> gens) {
  return MonomialIdeal::from_generators(std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require(a.num_vars() == b.num_vars(), "ideals live in different rings");
  std::vector<ExponentVector> gens;
  gens.reserve(a.num_generators() * b.num_generators());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(x + y);
  return MonomialIdeal::from_generators(std::move(gens));
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, int n) {
  require(n >= 1, "ideal_power needs n >= 1 (the unit ideal is not represented)");
  MonomialIdeal result = ideal;
  for (int k = 1; k < n; ++k) result = product(result, ideal);
  return result;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require(a.num_vars() == b.num_vars(), "ideals live in different rings");
  std::vector<ExponentVector> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::from_generators(std::move(gens));
}

MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  require(a.num_vars() == b.num_vars(), "ideals live in different rings");
  std::vector<ExponentVector> gens;
  gens.reserve(a.num_generators() * b.num_generators());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(x.lcm(y));
  return MonomialIdeal::from_generators(std::move(gens));
}

MonomialIdeal colon_monomial(const MonomialIdeal& ideal, const ExponentVector& a) {
  require(a.size() == ideal.num_vars(), "colon monomial has the wrong length");
  std::vector<ExponentVector> gens;
  for (const auto& g : ideal.generators()) {
    auto q = g.saturating_sub(a);
    require(!q.is_zero(), "colon ideal is the unit ideal: the monomial lies in the ideal");
    gens.push_back(std::move(q));
  }
  return MonomialIdeal::from_generators(std::move(gens));
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  require(ideal.is_squarefree(), "the Alexander dual is defined here for squarefree ideals");
  Clutter c = Clutter::from_ideal(ideal);
  std::vector<ExponentVector> gens;
  for (VertexSet cover : c.minimal_vertex_covers()) {
    ExponentVector e(ideal.num_vars());
    for (auto i : members(cover)) e[i] = 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal::from_generators(std::move(gens));
}

MinorResult minor(const MonomialIdeal& ideal, std::span<const Substitution> assignment) {
  require(assignment.size() == ideal.num_vars(), "minor assignment has the wrong length");
  std::vector<ExponentVector> gens;
  for (const auto& g : ideal.generators()) {
    ExponentVector h = g;
    bool vanished = false;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      if (g[i] == 0) continue;
      if (assignment[i] == Substitution::zero) {
        vanished = true;
        break;
      }
      if (assignment[i] == Substitution::one) h[i] = 0;
    }
    if (vanished) continue;
    if (h.is_zero()) return IdealSentinel::unit;
    gens.push_back(std::move(h));
  }
  if (gens.empty()) return IdealSentinel::zero;
  return MonomialIdeal::from_generators(std::move(gens));
}

MinorResult minor(const MonomialIdeal& ideal, const std::map<std::size_t, int>& assignment) {
  std::vector<Substitution> subs(ideal.num_vars(), Substitution::keep);
  for (const auto& [var, value] : assignment) {
    require(var < ideal.num_vars(), "minor assignment names a variable out of range");
    require(value == 0 || value == 1, "minor assignment values must be 0 or 1");
    subs[var] = value == 0 ? Substitution::zero : Substitution::one;
  }
  return minor(ideal, subs);
}

MonomialIdeal prime_of_variables(std::size_t s, const std::vector<std::size_t>& vars) {
  std::vector<ExponentVector> gens;
  for (auto v : vars) gens.push_back(ExponentVector::unit(s, v));
  return MonomialIdeal::from_generators(std::move(gens));
}

bool is_prime_monomial_ideal(const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const ExponentVector& g) { return g.degree() == 1; });
}

}  // namespace monalg
