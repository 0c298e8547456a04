#include "monalg/polyhedron.hpp"

#include <algorithm>
#include <limits>

#include "monalg/errors.hpp"

namespace monalg {

RationalPolyhedron::RationalPolyhedron(std::size_t dim, std::vector<IntVector> normals, IntVector offsets)
    : n_(dim), normals_(std::move(normals)), offsets_(std::move(offsets)) {
  require(normals_.size() == offsets_.size(), "each inequality needs an offset");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    require(normals_[i].size() == n_, "inequality has the wrong length");
    IntVector row = normals_[i];
    row.push_back(-offsets_[i]);
    rows.push_back(std::move(row));
  }
  IntVector x0(n_ + 1, 0);
  x0[n_] = 1;
  rows.push_back(x0);
  for (auto& ray : extreme_rays(rows, n_ + 1)) {
    Integer d = ray[n_];
    ray.pop_back();
    if (d == 0) {
      rays_.push_back(std::move(ray));
    } else {
      scaled_.emplace_back(std::move(ray), d);
    }
  }
  require(!scaled_.empty(), "polyhedron is empty");
  std::sort(scaled_.begin(), scaled_.end(), [](const auto& a, const auto& b) {
    for (std::size_t i = 0; i < a.first.size(); ++i) {
      Rational x(a.first[i], a.second), y(b.first[i], b.second);
      x.canonicalize();
      y.canonicalize();
      if (x != y) return x < y;
    }
    return false;
  });
}

std::vector<RatVector> RationalPolyhedron::vertices() const {
  std::vector<RatVector> out;
  for (const auto& [g, d] : scaled_) {
    RatVector v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      v[i] = Rational(g[i], d);
      v[i].canonicalize();
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool RationalPolyhedron::is_integral() const {
  return std::all_of(scaled_.begin(), scaled_.end(), [](const auto& v) { return v.second == 1; });
}

bool RationalPolyhedron::contains(const RatVector& x) const {
  require(x.size() == n_, "point has the wrong length");
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    Rational v = 0;
    for (std::size_t j = 0; j < n_; ++j) v += normals_[i][j] * x[j];
    if (v < offsets_[i]) return false;
  }
  return true;
}

RationalPolyhedron covering_polyhedron(const MonomialIdeal& ideal) {
  const std::size_t s = ideal.num_vars();
  for (std::size_t i = 0; i < s; ++i)
    require(ideal.max_exponent(i) > 0, "covering polyhedron: the incidence matrix has a zero row");
  std::vector<IntVector> normals;
  IntVector offsets;
  for (std::size_t i = 0; i < s; ++i) {
    IntVector e(s, 0);
    e[i] = 1;
    normals.push_back(std::move(e));
    offsets.emplace_back(0);
  }
  for (const auto& g : ideal.generators()) {
    normals.push_back(g.to_integers());
    offsets.emplace_back(1);
  }
  return RationalPolyhedron(s, std::move(normals), std::move(offsets));
}

RationalCone rees_cone(const MonomialIdeal& ideal) {
  const std::size_t s = ideal.num_vars();
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < s; ++i) {
    IntVector e(s + 1, 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  for (const auto& g : ideal.generators()) {
    IntVector v = g.to_integers();
    v.emplace_back(1);
    gens.push_back(std::move(v));
  }
  return RationalCone(std::move(gens), s + 1);
}

ReesRepresentation rees_cone_representation(const MonomialIdeal& ideal) {
  const std::size_t s = ideal.num_vars();
  require(s >= 2, "Rees cone representation: one-variable ideals are excluded");
  RationalCone rc = rees_cone(ideal);
  check_consistency(rc.dimension() == s + 1, "Rees cone is not full dimensional");
  ReesRepresentation out;
  for (const auto& f : rc.facets()) {
    std::size_t nonzero = 0, where = 0;
    for (std::size_t i = 0; i <= s; ++i)
      if (f[i] != 0) {
        ++nonzero;
        where = i;
      }
    if (nonzero == 1 && f[where] == 1) {
      out.unit_facets.push_back(where);
      continue;
    }
    check_consistency(f[s] < 0, "Rees cone facet outside the irreducible representation");
    out.normals.push_back(f);
  }
  std::sort(out.unit_facets.begin(), out.unit_facets.end());
  std::sort(out.normals.begin(), out.normals.end());

  // Second route: vertices of Q(I), homogenized.
  RationalPolyhedron q = covering_polyhedron(ideal);
  std::vector<IntVector> from_vertices;
  for (const auto& [g, d] : q.scaled_vertices()) {
    IntVector l = g;
    l.push_back(-d);
    from_vertices.push_back(std::move(l));
    if (d == 1) ++out.integral_count;
  }
  std::sort(from_vertices.begin(), from_vertices.end());
  check_consistency(from_vertices == out.normals, "Rees cone facets disagree with the vertices of Q(I)");
  out.vertex_count = from_vertices.size();
  return out;
}

namespace {

RationalCone homogenized_cone(const std::vector<IntVector>& points) {
  require(!points.empty(), "a polytope needs at least one point");
  std::vector<IntVector> gens;
  for (const auto& p : points) {
    require(p.size() == points.front().size(), "polytope points have mismatched lengths");
    IntVector v = p;
    v.emplace_back(1);
    gens.push_back(std::move(v));
  }
  return RationalCone(std::move(gens), points.front().size() + 1);
}

// Depth-first enumeration of integer points satisfying a.x + c >= 0 (inequalities)
// and a.x + c = 0 (equations) inside a box, in 128-bit arithmetic.
class PointCounter {
public:
  using i128 = __int128;

  PointCounter(const std::vector<IntVector>& ineq, const std::vector<IntVector>& eq, std::size_t dil,
               std::vector<std::int64_t> lo, std::vector<std::int64_t> hi, std::size_t max_nodes)
      : n_(lo.size()), lo_(std::move(lo)), hi_(std::move(hi)), max_nodes_(max_nodes) {
    auto load = [&](const std::vector<IntVector>& rows, std::vector<Row>& out) {
      for (const auto& r : rows) {
        Row row;
        for (std::size_t j = 0; j < n_; ++j) row.a.push_back(to_int64(r[j]));
        row.c = static_cast<i128>(to_int64(r[n_])) * static_cast<i128>(dil);
        // suffix[k]: min and max of sum_{j >= k} a_j x_j over the box.
        row.smin.assign(n_ + 1, 0);
        row.smax.assign(n_ + 1, 0);
        for (std::size_t k = n_; k-- > 0;) {
          i128 u = static_cast<i128>(row.a[k]) * lo_[k], v = static_cast<i128>(row.a[k]) * hi_[k];
          row.smin[k] = row.smin[k + 1] + std::min(u, v);
          row.smax[k] = row.smax[k + 1] + std::max(u, v);
        }
        out.push_back(std::move(row));
      }
    };
    load(ineq, ineq_);
    load(eq, eq_);
    partial_ineq_.assign(ineq_.size(), 0);
    partial_eq_.assign(eq_.size(), 0);
    x_.assign(n_, 0);
  }

  Integer count() {
    if (n_ == 0) return feasible_here() ? 1 : 0;
    rec(0, nullptr);
    return total_;
  }

  std::vector<IntVector> list() {
    std::vector<IntVector> out;
    if (n_ == 0) {
      if (feasible_here()) out.emplace_back();
      return out;
    }
    rec(0, &out);
    return out;
  }

private:
  struct Row {
    std::vector<std::int64_t> a;
    i128 c = 0;
    std::vector<i128> smin, smax;
  };

  bool feasible_here() const {
    for (const auto& r : ineq_)
      if (r.c < 0) return false;
    for (const auto& r : eq_)
      if (r.c != 0) return false;
    return true;
  }

  void rec(std::size_t k, std::vector<IntVector>* out) {
    if (++nodes_ > max_nodes_) throw BudgetExceeded("lattice point enumeration exceeds the node budget");
    // Feasible interval for x_k given x_0..x_{k-1} and the box for the rest.
    i128 lo = lo_[k], hi = hi_[k];
    auto tighten = [&](std::int64_t a, i128 rest_min, i128 rest_max, bool equation) {
      // Need a x + rest in [0, inf) (or {0} for equations) with rest in [rest_min, rest_max].
      if (a == 0) {
        if (rest_max < 0 || (equation && rest_min > 0)) hi = lo - 1;
        return;
      }
      // a x >= -rest_max
      i128 bound = -rest_max;
      if (a > 0) {
        lo = std::max(lo, ceil_div(bound, a));
      } else {
        hi = std::min(hi, floor_div(bound, a));
      }
      if (equation) {  // a x <= -rest_min
        i128 ub = -rest_min;
        if (a > 0) {
          hi = std::min(hi, floor_div(ub, a));
        } else {
          lo = std::max(lo, ceil_div(ub, a));
        }
      }
    };
    for (std::size_t i = 0; i < ineq_.size(); ++i) {
      const Row& r = ineq_[i];
      tighten(r.a[k], partial_ineq_[i] + r.c + r.smin[k + 1], partial_ineq_[i] + r.c + r.smax[k + 1], false);
    }
    for (std::size_t i = 0; i < eq_.size(); ++i) {
      const Row& r = eq_[i];
      tighten(r.a[k], partial_eq_[i] + r.c + r.smin[k + 1], partial_eq_[i] + r.c + r.smax[k + 1], true);
    }
    if (lo > hi) return;
    if (k + 1 == n_) {
      // The bounds are exact at the last coordinate.
      if (out == nullptr) {
        total_ += static_cast<unsigned long>(hi - lo + 1);
        return;
      }
      for (i128 v = lo; v <= hi; ++v) {
        x_[k] = static_cast<std::int64_t>(v);
        IntVector p(n_);
        for (std::size_t j = 0; j < n_; ++j) p[j] = static_cast<long>(x_[j]);
        out->push_back(std::move(p));
      }
      return;
    }
    for (i128 v = lo; v <= hi; ++v) {
      x_[k] = static_cast<std::int64_t>(v);
      for (std::size_t i = 0; i < ineq_.size(); ++i) partial_ineq_[i] += ineq_[i].a[k] * v;
      for (std::size_t i = 0; i < eq_.size(); ++i) partial_eq_[i] += eq_[i].a[k] * v;
      rec(k + 1, out);
      for (std::size_t i = 0; i < ineq_.size(); ++i) partial_ineq_[i] -= ineq_[i].a[k] * v;
      for (std::size_t i = 0; i < eq_.size(); ++i) partial_eq_[i] -= eq_[i].a[k] * v;
    }
  }

  static i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }
  static i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

  std::size_t n_;
  std::vector<std::int64_t> lo_, hi_;
  std::size_t max_nodes_;
  std::size_t nodes_ = 0;
  std::vector<Row> ineq_, eq_;
  std::vector<i128> partial_ineq_, partial_eq_;
  std::vector<std::int64_t> x_;
  Integer total_ = 0;
};

}  // namespace

LatticePolytope::LatticePolytope(std::vector<IntVector> points)
    : n_(points.empty() ? 0 : points.front().size()), points_(std::move(points)),
      cone_(homogenized_cone(points_)) {}

std::vector<IntVector> LatticePolytope::vertices() const {
  std::vector<IntVector> out;
  for (auto r : cone_.extreme_rays()) {
    check_consistency(r[n_] == 1, "polytope vertex is not a lattice point");
    r.pop_back();
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

PointCounter make_counter(const LatticePolytope& p, std::size_t n, std::size_t max_nodes) {
  const std::size_t d = p.ambient_dimension();
  std::vector<std::int64_t> lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    Integer mn = p.points().front()[i], mx = mn;
    for (const auto& q : p.points()) {
      mn = std::min(mn, q[i]);
      mx = std::max(mx, q[i]);
    }
    lo[i] = to_int64(mn * static_cast<unsigned long>(n));
    hi[i] = to_int64(mx * static_cast<unsigned long>(n));
  }
  return PointCounter(p.facets(), p.equations(), n, lo, hi, max_nodes);
}

}  // namespace

Integer LatticePolytope::count_lattice_points(std::size_t n, std::size_t max_nodes) const {
  return make_counter(*this, n, max_nodes).count();
}

std::vector<IntVector> LatticePolytope::lattice_points(std::size_t n, std::size_t max_nodes) const {
  return make_counter(*this, n, max_nodes).list();
}

Rational EhrhartData::evaluate(const Integer& n) const {
  Rational v = 0, p = 1;
  for (const auto& c : coefficients) {
    v += c * p;
    p *= n;
  }
  return v;
}

RatVector interpolate(const std::vector<Integer>& values, std::size_t degree) {
  require(values.size() >= degree + 1, "interpolation needs degree + 1 values");
  // Forward differences, then expand sum_k D^k E(0) C(n, k) in the monomial basis.
  std::vector<Integer> diff(values.begin(), values.begin() + static_cast<long>(degree + 1));
  std::vector<Integer> delta;
  for (std::size_t k = 0; k <= degree; ++k) {
    delta.push_back(diff[0]);
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  RatVector coeff(degree + 1, 0);
  RatVector binom{1};  // coefficients of C(n, k) as a polynomial in n
  for (std::size_t k = 0; k <= degree; ++k) {
    if (k > 0) {
      // C(n, k) = C(n, k-1) * (n - k + 1) / k
      RatVector next(binom.size() + 1, 0);
      for (std::size_t i = 0; i < binom.size(); ++i) {
        next[i + 1] += binom[i];
        next[i] -= binom[i] * static_cast<long>(k - 1);
      }
      for (auto& x : next) x /= static_cast<long>(k);
      binom = std::move(next);
    }
    for (std::size_t i = 0; i < binom.size(); ++i) coeff[i] += delta[k] * binom[i];
  }
  return coeff;
}

IntVector h_vector_from_counts(const std::vector<Integer>& counts, std::size_t dimension) {
  require(counts.size() >= dimension + 1, "h-vector needs counts E(0..d)");
  IntVector h(dimension + 1, 0);
  for (std::size_t j = 0; j <= dimension; ++j)
    for (std::size_t i = 0; i <= j; ++i) {
      Integer term = binomial(static_cast<unsigned>(dimension + 1), static_cast<unsigned>(i)) * counts[j - i];
      h[j] += (i % 2 == 0) ? term : Integer(-term);
    }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

EhrhartData ehrhart(const LatticePolytope& polytope, std::size_t max_nodes) {
  EhrhartData out;
  const std::size_t d = polytope.dimension();
  out.dimension = d;
  for (std::size_t n = 0; n <= d + 1; ++n) out.counts.push_back(polytope.count_lattice_points(n, max_nodes));
  out.coefficients = interpolate(out.counts, d);
  check_consistency(out.evaluate(static_cast<unsigned long>(d + 1)) == out.counts[d + 1],
                    "Ehrhart interpolation does not reproduce the extra count");
  out.h_vector = h_vector_from_counts(out.counts, d);
  Rational vol = out.coefficients[d] * factorial(static_cast<unsigned>(d));
  check_consistency(vol.get_den() == 1, "normalized volume is not an integer");
  out.normalized_volume = vol.get_num();
  check_consistency(out.normalized_volume == polytope.normalized_volume(),
                    "Ehrhart leading coefficient disagrees with the triangulation volume");
  for (const auto& h : out.h_vector) check_consistency(h >= 0, "negative h-vector entry");
  return out;
}

}  // namespace monalg
