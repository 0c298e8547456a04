#include "monalg/cone.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <set>

#include "monalg/errors.hpp"

namespace monalg {

namespace {

using Bits = boost::dynamic_bitset<>;

IntVector combine(const Integer& a, const IntVector& x, const Integer& b, const IntVector& y) {
  IntVector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = a * x[i] + b * y[i];
  make_primitive(z);
  return z;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

ScaledInverse scaled_inverse(const IntMatrix& w) {
  RatMatrix inv = inverse(to_rational(w));
  Integer den = 1;
  for (const auto& row : inv)
    for (const auto& q : row) den = lcm(den, q.get_den());
  ScaledInverse out{IntMatrix(w.size(), IntVector(w.size())), den};
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) {
      Rational q = inv[i][j] * den;
      out.numerators[i][j] = q.get_num();
    }
  return out;
}

std::vector<IntVector> extreme_rays(const std::vector<IntVector>& h, std::size_t d) {
  if (d == 0) return {};
  const std::size_t n = h.size();
  for (const auto& row : h) require(row.size() == d, "inequality has the wrong length");

  // Greedy basis of rows.
  std::vector<std::size_t> basis;
  IntMatrix chosen;
  for (std::size_t i = 0; i < n && basis.size() < d; ++i) {
    if (is_zero(h[i])) continue;
    chosen.push_back(h[i]);
    if (rank(chosen) == chosen.size()) {
      basis.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  require(basis.size() == d, "inequalities do not define a pointed cone");

  // Initial simplicial cone: columns of B^{-1}.
  ScaledInverse si = scaled_inverse(chosen);
  std::vector<IntVector> rays;
  std::vector<Bits> tight;
  Bits processed(n);
  for (auto i : basis) processed.set(i);
  for (std::size_t j = 0; j < d; ++j) {
    IntVector ray(d);
    for (std::size_t k = 0; k < d; ++k) ray[k] = si.numerators[k][j];
    make_primitive(ray);
    Bits z(n);
    for (std::size_t k = 0; k < d; ++k)
      if (k != j) z.set(basis[k]);
    rays.push_back(std::move(ray));
    tight.push_back(std::move(z));
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (processed.test(i) || is_zero(h[i])) continue;
    processed.set(i);
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(h[i], rays[k]);
      if (val[k] > 0) pos.push_back(k);
      if (val[k] < 0) neg.push_back(k);
    }
    if (neg.empty()) {
      for (std::size_t k = 0; k < rays.size(); ++k)
        if (val[k] == 0) tight[k].set(i);
      continue;
    }
    std::vector<IntVector> next_rays;
    std::vector<Bits> next_tight;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (val[k] < 0) continue;
      Bits z = tight[k];
      if (val[k] == 0) z.set(i);
      next_rays.push_back(rays[k]);
      next_tight.push_back(std::move(z));
    }
    for (auto p : pos)
      for (auto q : neg) {
        Bits common = tight[p] & tight[q];
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k)
          if (k != p && k != q && common.is_subset_of(tight[k])) adjacent = false;
        if (!adjacent) continue;
        next_rays.push_back(combine(val[p], rays[q], -val[q], rays[p]));
        common.set(i);
        next_tight.push_back(std::move(common));
      }
    rays = std::move(next_rays);
    tight = std::move(next_tight);
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

RationalCone::RationalCone(std::vector<IntVector> generators, std::size_t ambient_dim)
    : d_(ambient_dim), gens_(std::move(generators)) {
  require(d_ >= 1, "cone ambient dimension must be positive");
  require(!gens_.empty(), "a cone needs at least one generator");
  for (const auto& g : gens_) {
    require(g.size() == d_, "cone generator has the wrong length");
    require(!is_zero(g), "cone generators must be non-zero");
  }
  smith_ = smith_normal_form(transpose(gens_));
  r_ = smith_.rank;
  for (std::size_t i = r_; i < d_; ++i) equations_.push_back(smith_.p[i]);
  for (const auto& g : gens_) coords_.push_back(lattice_coords(g));

  // Facets are the extreme rays of the dual cone, which is pointed in lattice coordinates.
  facets_local_ = monalg::extreme_rays(coords_, r_);
  for (const auto& f : facets_local_) {
    IntVector amb(d_, 0);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < d_; ++j) amb[j] += f[i] * smith_.p[i][j];
    make_primitive(amb);
    facets_.push_back(std::move(amb));
  }
  std::sort(facets_.begin(), facets_.end());
  pointed_ = rank(facets_local_) == r_;
}

IntVector RationalCone::lattice_coords(const IntVector& x) const {
  IntVector y(r_);
  for (std::size_t i = 0; i < r_; ++i) y[i] = dot(smith_.p[i], x);
  return y;
}

bool RationalCone::in_generated_lattice(const IntVector& x) const {
  require(x.size() == d_, "point has the wrong length");
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  IntVector y = lattice_coords(x);
  for (std::size_t i = 0; i < r_; ++i)
    if (!mpz_divisible_p(y[i].get_mpz_t(), smith_.diagonal[i].get_mpz_t())) return false;
  return true;
}

bool RationalCone::contains(const IntVector& x) const {
  require(x.size() == d_, "point has the wrong length");
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  IntVector y = lattice_coords(x);
  return std::all_of(facets_local_.begin(), facets_local_.end(),
                     [&](const IntVector& f) { return dot(f, y) >= 0; });
}

std::vector<IntVector> RationalCone::extreme_rays() const {
  require(pointed_, "extreme rays need a pointed cone");
  std::vector<IntVector> out;
  for (const auto& y : monalg::extreme_rays(facets_local_, r_)) {
    IntVector x(d_, 0);
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t k = 0; k < r_; ++k) x[i] += smith_.p_inverse[i][k] * y[k];
    make_primitive(x);
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Simplex {
  std::vector<std::size_t> idx;
  std::vector<IntVector> normals;  // normals[k] vanishes on the facet opposite idx[k]
};

Simplex make_simplex(std::vector<std::size_t> idx, const std::vector<IntVector>& coords) {
  std::sort(idx.begin(), idx.end());
  const std::size_t r = idx.size();
  IntMatrix w(r, IntVector(r));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < r; ++j) w[k][j] = coords[idx[j]][k];
  ScaledInverse si = scaled_inverse(w);
  Simplex s{std::move(idx), {}};
  for (auto& row : si.numerators) {
    make_primitive(row);
    s.normals.push_back(row);
  }
  return s;
}

}  // namespace

const std::vector<std::vector<std::size_t>>& RationalCone::triangulation() const {
  if (triangulated_) return triangulation_;
  std::vector<std::size_t> base;
  IntMatrix chosen;
  for (std::size_t i = 0; i < coords_.size() && base.size() < r_; ++i) {
    chosen.push_back(coords_[i]);
    if (rank(chosen) == chosen.size()) {
      base.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  std::vector<bool> placed(coords_.size(), false);
  for (auto i : base) placed[i] = true;
  std::vector<Simplex> simplices{make_simplex(base, coords_)};
  std::vector<std::size_t> current = base;

  for (std::size_t g = 0; g < coords_.size(); ++g) {
    if (placed[g]) continue;
    std::vector<Simplex> added;
    for (const auto& sx : simplices)
      for (std::size_t k = 0; k < sx.idx.size(); ++k) {
        const IntVector& nrm = sx.normals[k];
        if (dot(nrm, coords_[g]) >= 0) continue;
        bool boundary = std::all_of(current.begin(), current.end(), [&](std::size_t c) {
          return dot(nrm, coords_[c]) >= 0;
        });
        if (!boundary) continue;
        std::vector<std::size_t> idx = sx.idx;
        idx[k] = g;
        added.push_back(make_simplex(std::move(idx), coords_));
      }
    for (auto& a : added) simplices.push_back(std::move(a));
    current.push_back(g);
    placed[g] = true;
  }
  for (const auto& sx : simplices) triangulation_.push_back(sx.idx);
  triangulated_ = true;
  return triangulation_;
}

Integer RationalCone::normalized_volume() const {
  Integer total = 0;
  for (const auto& idx : triangulation()) {
    IntMatrix w(r_, IntVector(r_));
    for (std::size_t k = 0; k < r_; ++k)
      for (std::size_t j = 0; j < r_; ++j) w[k][j] = coords_[idx[j]][k];
    total += abs(determinant(w));
  }
  return total;
}

Integer RationalCone::lattice_index() const {
  Integer idx = 1;
  for (const auto& d : smith_.diagonal) idx *= d;
  return idx;
}

std::vector<IntVector> RationalCone::hilbert_basis(LatticeKind kind, std::size_t max_candidates) const {
  require(pointed_, "Hilbert bases need a pointed cone");
  const std::size_t r = r_;
  // Working coordinates u: y itself, or y_i / d_i for the generated lattice.
  IntVector scale(r, 1);
  if (kind == LatticeKind::generated) scale = smith_.diagonal;
  std::vector<IntVector> u(coords_.size(), IntVector(r));
  for (std::size_t g = 0; g < coords_.size(); ++g)
    for (std::size_t i = 0; i < r; ++i) {
      check_consistency(coords_[g][i] % scale[i] == 0, "generator outside its own lattice");
      u[g][i] = coords_[g][i] / scale[i];
    }
  std::vector<IntVector> facets(facets_local_.size(), IntVector(r));
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (std::size_t i = 0; i < r; ++i) facets[f][i] = facets_local_[f][i] * scale[i];

  std::set<IntVector> candidates;
  for (const auto& g : u) candidates.insert(g);
  std::size_t enumerated = 0;
  for (const auto& idx : triangulation()) {
    IntMatrix w(r, IntVector(r));
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < r; ++j) w[k][j] = u[idx[j]][k];
    ScaledInverse si = scaled_inverse(w);
    const Integer& den = si.denominator;
    SmithForm sw = smith_normal_form(w);
    Integer count = 1;
    for (const auto& dd : sw.diagonal) count *= dd;
    enumerated += count.get_ui();
    if (!count.fits_ulong_p() || enumerated > max_candidates)
      throw BudgetExceeded("Hilbert basis: parallelepiped enumeration exceeds the point budget");
    // Coset representatives P^{-1} c with 0 <= c_i < d_i.
    IntVector c(r, 0);
    while (true) {
      IntVector x(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) x[i] += sw.p_inverse[i][k] * c[k];
      IntVector frac(r);
      for (std::size_t i = 0; i < r; ++i) {
        Integer num = dot(si.numerators[i], x);
        mpz_fdiv_r(frac[i].get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      }
      IntVector p(r, 0);
      bool nonzero = false;
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < r; ++k) p[i] += w[i][k] * frac[k];
        mpz_divexact(p[i].get_mpz_t(), p[i].get_mpz_t(), den.get_mpz_t());
        nonzero = nonzero || p[i] != 0;
      }
      if (nonzero) candidates.insert(std::move(p));
      std::size_t k = 0;
      while (k < r) {
        if (++c[k] < sw.diagonal[k]) break;
        c[k] = 0;
        ++k;
      }
      if (k == r) break;
    }
  }

  IntVector grading(r, 0);
  for (const auto& f : facets)
    for (std::size_t i = 0; i < r; ++i) grading[i] += f[i];
  std::vector<std::pair<Integer, IntVector>> sorted;
  for (const auto& x : candidates) sorted.emplace_back(dot(grading, x), x);
  std::sort(sorted.begin(), sorted.end());

  std::vector<std::pair<Integer, IntVector>> basis;
  for (const auto& [deg, x] : sorted) {
    bool reducible = false;
    for (const auto& [hd, h] : basis) {
      if (hd >= deg) break;
      bool inside = true;
      for (const auto& f : facets) {
        Integer v = 0;
        for (std::size_t i = 0; i < r; ++i) v += f[i] * (x[i] - h[i]);
        if (v < 0) {
          inside = false;
          break;
        }
      }
      if (inside) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.emplace_back(deg, x);
  }

  std::vector<IntVector> out;
  for (const auto& [deg, z] : basis) {
    IntVector x(d_, 0);
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t k = 0; k < r; ++k) x[i] += smith_.p_inverse[i][k] * z[k] * scale[k];
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace monalg
