#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "monalg/codes.hpp"
#include "monalg/errors.hpp"
#include "oracles.hpp"

using namespace monalg;

namespace {

// Every codeword of C_X(d), as the image of every coefficient vector on S_d.
std::set<FqVector> all_codewords(const PointSet& x, std::size_t d) {
  const auto& f = x.field();
  const auto mons = monomials_of_degree(x.num_vars(), d);
  std::vector<FqVector> ev;
  for (const auto& a : mons) {
    FqVector row;
    for (const auto& p : x.points()) {
      int v = 1;
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::int64_t e = 0; e < a[i]; ++e) v = f.mul(v, p[i]);
      row.push_back(v);
    }
    ev.push_back(row);
  }
  std::set<FqVector> out;
  std::vector<int> c(mons.size(), 0);
  while (true) {
    FqVector w(x.size(), 0);
    for (std::size_t b = 0; b < mons.size(); ++b)
      for (std::size_t j = 0; j < x.size(); ++j) w[j] = f.add(w[j], f.mul(c[b], ev[b][j]));
    out.insert(w);
    std::size_t t = 0;
    while (t < c.size() && ++c[t] == f.order()) c[t++] = 0;
    if (t == c.size()) break;
  }
  return out;
}

std::size_t weight(const FqVector& w) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](int v) { return v != 0; }));
}

// r-th generalized weight from r-tuples of codewords of full rank.
std::size_t tuple_weight(const PointSet& x, const std::set<FqVector>& words, std::size_t r) {
  std::vector<FqVector> list(words.begin(), words.end());
  std::size_t best = x.size() + 1;
  std::vector<std::size_t> idx(r, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t from) {
    if (i == r) {
      std::vector<FqVector> rows;
      for (auto k : idx) rows.push_back(list[k]);
      if (row_reduce(x.field(), rows).size() != r) return;
      std::size_t support = 0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        bool nz = false;
        for (const auto& row : rows) nz = nz || row[j] != 0;
        support += nz ? 1 : 0;
      }
      best = std::min(best, support);
      return;
    }
    for (std::size_t k = from; k < list.size(); ++k) {
      idx[i] = k;
      rec(i + 1, k + 1);
    }
  };
  rec(0, 0);
  return best;
}

PointSet random_points(std::mt19937& rng, int q, std::size_t s, std::size_t count) {
  auto space = projective_space(q, s);
  auto pts = space.points();
  std::shuffle(pts.begin(), pts.end(), rng);
  pts.resize(std::min(count, pts.size()));
  return PointSet(q, s, pts);
}

// Independent sets A of G with N(A) a minimal vertex cover; least |A|.
std::size_t v_number_by_neighbourhoods(const Graph& g) {
  const std::size_t s = g.num_vertices();
  auto covers = g.clutter().minimal_vertex_covers();
  std::size_t best = s + 1;
  for (VertexSet a = 1; a < (VertexSet{1} << s); ++a) {
    bool independent = true;
    for (auto v : members(a)) independent = independent && (g.neighbors(v) & a) == 0;
    if (!independent) continue;
    if (std::find(covers.begin(), covers.end(), g.neighborhood(a)) != covers.end())
      best = std::min(best, members(a).size());
  }
  return best;
}

}  // namespace

TEST_CASE("finite fields") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    FiniteField f(q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.pow(a, q) == a);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
        }
      }
    }
    std::set<int> powers;
    for (int e = 0; e < q - 1; ++e) powers.insert(f.pow(f.primitive_element(), e));
    CHECK(powers.size() == static_cast<std::size_t>(q - 1));
  }
  CHECK_THROWS_AS(FiniteField(6), PreconditionError);
  CHECK_THROWS_AS(FiniteField(11), PreconditionError);
}

TEST_CASE("point sets") {
  PointSet x(3, 2, {{2, 1}, {0, 2}});
  CHECK(x.points() == std::vector<FqVector>{{1, 2}, {0, 1}});
  CHECK(x.rescaled() == 2);
  CHECK_THROWS_AS(PointSet(3, 2, {{1, 2}, {2, 1}}), PreconditionError);
  CHECK_THROWS_AS(PointSet(3, 2, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(PointSet(3, 2, {{3, 0}}), PreconditionError);
  CHECK(projective_space(2, 2).size() == 3);
  CHECK(projective_space(3, 3).size() == 13);
  CHECK(projective_space(4, 2).size() == 5);
  CHECK(affine_space(2, 2).size() == 4);
}

TEST_CASE("evaluation codes") {
  auto p1 = projective_space(2, 2);
  auto c1 = build_code(p1, 1);
  CHECK(c1.dimension() == 2);
  CHECK(c1.length == 3);
  CHECK(minimum_distance(c1) == 2);
  auto c2 = build_code(p1, 2);
  CHECK(minimum_distance(c2) == 1);
  for (std::size_t r = 1; r <= 3; ++r) CHECK(generalized_weight(c2, r) == r);
  CHECK(build_code(affine_space(2, 2), 1).dimension() == 3);
  CHECK_THROWS_AS(build_code(p1, 0), PreconditionError);
  CHECK_THROWS_AS(minimum_distance(build_code(PointSet(2, 2, {{1, 0}}), 1)), PreconditionError);
  CHECK_THROWS_AS(generalized_weight(c1, 3), PreconditionError);

  // Projective Reed-Muller codes on P^2: (q - d + 1) q for d < q.
  auto p2 = projective_space(3, 3);
  CHECK(minimum_distance(build_code(p2, 1)) == 9);
  CHECK(minimum_distance(build_code(p2, 2)) == 6);
  CHECK(minimum_distance(build_code(projective_space(4, 3), 1)) == 16);
}

TEST_CASE("weights against exhaustive codeword lists") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const int q = trial % 2 == 0 ? 2 : 3;
    const std::size_t s = 2 + trial % 2;
    auto x = random_points(rng, q, s, 2 + trial % 6);
    for (std::size_t d = 1; d <= 2; ++d) {
      auto code = build_code(x, d);
      auto words = all_codewords(x, d);
      std::size_t k = 0;
      while (static_cast<std::size_t>(std::pow(q, k)) < words.size()) ++k;
      CHECK(k == code.dimension());
      std::size_t d1 = x.size();
      for (const auto& w : words)
        if (weight(w) > 0) d1 = std::min(d1, weight(w));
      CHECK(minimum_distance(code) == d1);
      std::size_t prev = 0;
      for (std::size_t r = 1; r <= std::min<std::size_t>(code.dimension(), 3); ++r) {
        auto g = generalized_weight(code, r);
        CHECK(g > prev);
        prev = g;
        if (words.size() <= 81) CHECK(g == tuple_weight(x, words, r));
      }
    }
  }
}

TEST_CASE("generalized minimum distance and Vasconcelos functions") {
  auto p1 = projective_space(2, 2);
  auto r = gmd_and_vasconcelos(p1, 1, 1);
  CHECK(r.gmd == 2);
  CHECK(r.vasconcelos == 2);
  auto p13 = projective_space(3, 2);
  auto r2 = gmd_and_vasconcelos(p13, 1, 2);
  CHECK(r2.gmd == generalized_weight(build_code(p13, 1), 2));
  CHECK(r2.vasconcelos == r2.gmd);
  CHECK(r2.gmd == 4);
  CHECK(r2.family_empty);
  auto full = gmd_and_vasconcelos(p1, 1, 2);
  CHECK(full.family_empty);
  CHECK(full.gmd == 3);

  std::mt19937 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const int q = trial % 3 == 0 ? 3 : 2;
    auto x = random_points(rng, q, 3, 3 + trial % 5);
    for (std::size_t d = 1; d <= 2; ++d) {
      auto code = build_code(x, d);
      for (std::size_t rr = 1; rr <= std::min<std::size_t>(code.dimension(), 3); ++rr) {
        auto g = gmd_and_vasconcelos(x, d, rr);
        CHECK(g.gmd == g.vasconcelos);
        CHECK(g.gmd == generalized_weight(code, rr));
      }
    }
  }
}

TEST_CASE("minimum distance decreases to one at the v-number") {
  auto p1 = projective_space(2, 2);
  CHECK(v_number_points(p1) == 2);
  CHECK(v_number_points(PointSet(2, 2, {{1, 0}, {0, 1}})) == 1);
  auto line = affine_space(3, 1);
  CHECK(v_number_points(line) == 2);
  CHECK_THROWS_AS(v_number_points(PointSet(2, 2, {{1, 0}})), PreconditionError);

  std::mt19937 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const int q = trial % 2 == 0 ? 2 : 3;
    auto x = random_points(rng, q, 3, 2 + trial % 9);
    const auto reg = regularity_threshold(x);
    std::size_t first_one = 0, prev = x.size() + 1;
    for (std::size_t d = 1; d <= reg + 1; ++d) {
      auto delta = minimum_distance(build_code(x, d));
      if (prev > 1) CHECK(delta < prev);
      else CHECK(delta == 1);
      if (delta == 1 && first_one == 0) first_one = d;
      prev = delta;
      CHECK(hilbert_function(x, d) <= x.size());
    }
    CHECK(v_number_points(x) == first_one);
    CHECK(v_number_points(x) <= reg);
    if (x.size() <= 6)
      for (std::size_t r = 1; r <= std::min<std::size_t>(x.size(), 3); ++r)
        CHECK(generalized_weight(build_code(x, reg), r) == r);
  }
}

TEST_CASE("v-number of monomial ideals") {
  auto c4 = oracle::cycle(4).edge_ideal();
  auto w = v_number_monomial(c4, 4);
  CHECK(w.degree == 1);
  CHECK(w.prime == oracle::ideal({{0, 1, 0, 0}, {0, 0, 0, 1}}));
  CHECK(w.monomial == ExponentVector{1, 0, 0, 0});
  CHECK(v_number_monomial(oracle::ideal({{1}}), 2).degree == 0);
  CHECK(v_number_monomial(oracle::cycle(5).edge_ideal(), 4).degree == 2);
  CHECK_THROWS_AS(v_number_monomial(oracle::cycle(5).edge_ideal(), 1), BudgetExceeded);

  std::mt19937 rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracle::random_graph(rng, 3 + trial % 5);
    if (g.has_isolated_vertices()) continue;
    auto I = g.edge_ideal();
    auto v = v_number_monomial(I, g.num_vertices());
    CHECK(v.degree == v_number_by_neighbourhoods(g));
    CHECK((v.degree == 0) == is_prime_monomial_ideal(I));
  }
}

TEST_CASE("W2 graphs") {
  auto k3 = w2_test(oracle::cycle(3));
  CHECK(k3.w2);
  CHECK(k3.dimension == 1);
  CHECK(k3.v_number == 1u);
  CHECK_FALSE(w2_test(oracle::graph(3, {{1, 2}, {2, 3}})).w2);
  auto c4 = w2_test(oracle::cycle(4));
  CHECK_FALSE(c4.w2);
  CHECK(c4.v_number == 1u);
  CHECK(c4.dimension == 2);
  CHECK(w2_test(oracle::cycle(5)).w2);
  CHECK_THROWS_AS(w2_test(oracle::graph(3, {{1, 2}})), PreconditionError);

  std::mt19937 rng(71);
  int w2 = 0;
  for (int trial = 0; trial < 120; ++trial) {
    Graph g = oracle::random_graph(rng, 3 + trial % 6, 2, 3);
    if (g.has_isolated_vertices()) continue;
    w2 += w2_test(g).w2 ? 1 : 0;  // throws on disagreement
  }
  CHECK(w2 > 0);
}
