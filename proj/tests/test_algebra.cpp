#include <catch_amalgamated.hpp>

#include <random>

#include "support.hpp"
#include "trm/algebra.hpp"
#include "trm/reduction.hpp"

using namespace trm;
using namespace trm::testing;

namespace {

const Field kF = Field::prime();

// Number of degree-d monomials in the Stanley-Reisner ring of a graph,
// counted directly: pure powers plus x_i^a x_j^b (a, b >= 1) per edge.
std::size_t sr_count(const Graph& g, int d) {
  if (d == 0) return 1;
  return g.vertex_count() + g.edge_count() * static_cast<std::size_t>(d - 1);
}

Vector vertex(const Graph& g, const std::string& label) { return unit_vector(kF, g.vertex_count(), g.index_of(label)); }

}  // namespace

TEST_CASE("monomials are listed lex descending") {
  const auto m = monomials_of_degree(3, 2);
  REQUIRE(m.size() == 6);
  CHECK(m.front() == std::vector<int>{2, 0, 0});
  CHECK(m[1] == std::vector<int>{1, 1, 0});
  CHECK(m.back() == std::vector<int>{0, 0, 2});
  CHECK(monomial_label({"x", "y"}, {1, 2}) == "x*y^2");
  CHECK(monomial_label({"x", "y"}, {0, 0}) == "1");
}

TEST_CASE("polynomial degree") {
  const Polynomial p = Polynomial::monomial(kF.one(), {2, 0}) - Polynomial::monomial(kF.one(), {1, 1});
  CHECK(p.homogeneous_degree() == 2);
  CHECK(Polynomial{}.homogeneous_degree() == -1);
  const Polynomial q = Polynomial::monomial(kF.one(), {2, 0}) + Polynomial::monomial(kF.one(), {1, 0});
  CHECK_THROWS(q.homogeneous_degree());
}

TEST_CASE("Stanley-Reisner dimensions") {
  const Graph g = ten_vertex_graph();
  const auto r = stanley_reisner(g, 3, kF);
  CHECK(r->hilbert() == std::vector<std::size_t>{1, 10, 26, 42});
  CHECK(stanley_reisner(g, 2, kF)->hilbert() == std::vector<std::size_t>{1, 10, 26});
  CHECK(r->check_structure());

  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t) {
    const Graph h = random_bipartite(3, 3, 6, rng);
    const auto s = stanley_reisner(h, 4, kF);
    for (int d = 0; d <= 4; ++d) CHECK(s->dim(d) == sr_count(h, d));
  }
}

TEST_CASE("Stanley-Reisner products") {
  const Graph g = cycle4();
  const auto r = stanley_reisner(g, 3, kF);
  auto x1 = r->element(1, vertex(g, "x1"));
  auto x2 = r->element(1, vertex(g, "x2"));
  auto y1 = r->element(1, vertex(g, "y1"));
  CHECK((x1 * x2).is_zero());  // non-edge
  CHECK_FALSE((x1 * y1).is_zero());
  CHECK_FALSE((x1 * x1).is_zero());
  CHECK((x1 * y1 * y1).degree() == 3);
  CHECK_FALSE((x1 * y1 * y1).is_zero());
  // square-free cubics vanish: x1 y1 y2
  auto y2 = r->element(1, vertex(g, "y2"));
  CHECK((x1 * y1 * y2).is_zero());
  CHECK_THROWS_AS(x1 * y1 * y1 * y1, DimensionError);
}

TEST_CASE("the example ring has Hilbert function (1, 2, 1, 0)") {
  const auto r = example_ring(kF);
  CHECK(r->hilbert() == std::vector<std::size_t>{1, 2, 1, 0});
  CHECK(r->check_structure());
  const auto rq = example_ring(Field::rationals());
  CHECK(rq->hilbert() == std::vector<std::size_t>{1, 2, 1, 0});
}

TEST_CASE("relations of degree zero are rejected") {
  CHECK_THROWS_AS(algebra_from_relations(kF, {"x"}, {Polynomial::monomial(kF.one(), {0})}, 2),
                  std::invalid_argument);
}

TEST_CASE("quotient by a zero form is rejected") {
  const auto r = stanley_reisner(cycle4(), 2, kF);
  CHECK_THROWS(quotient_by_linear(r, zero_vector(kF, 4)));
}

TEST_CASE("quotient maps project and lift consistently") {
  const Graph g = cycle4();
  const auto s = stanley_reisner(g, 3, kF);
  const auto q = quotient_by_linear(s, vertex(g, "x1") + vertex(g, "x2"));
  CHECK(q.target->hilbert() == std::vector<std::size_t>{1, 3, 4, 4});
  for (int d = 0; d <= 3; ++d) {
    for (std::size_t i = 0; i < q.target->dim(d); ++i) {
      const Vector e = unit_vector(kF, q.target->dim(d), i);
      CHECK(q.project(d, q.lift(d, e)) == e);
    }
  }
  CHECK(is_zero(q.project(1, q.form)));
  // projection is a ring map
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const Vector a = random_vector(kF, s->dim(1), rng);
    const Vector b = random_vector(kF, s->dim(1), rng);
    CHECK(q.project(2, s->multiply(1, a, 1, b)) == q.target->multiply(1, q.project(1, a), 1, q.project(1, b)));
  }
}

TEST_CASE("four-cycle reduction behaves like k[x, y]/(x^2, y^2)") {
  const Graph g = cycle4();
  const auto r = artinian_reduction(g, ReductionMode::Canonical);
  const auto& a = *r.reduced();
  CHECK(a.hilbert() == std::vector<std::size_t>{1, 2, 1, 0});
  const Vector x = r.to_reduced(1, vertex(g, "x1"));
  const Vector y = r.to_reduced(1, vertex(g, "y1"));
  CHECK(is_zero(a.multiply(1, x, 1, x)));
  CHECK(is_zero(a.multiply(1, y, 1, y)));
  CHECK_FALSE(is_zero(a.multiply(1, x, 1, y)));
  CHECK(r.to_reduced(1, vertex(g, "x2")) == negated(x));
  CHECK(a.check_structure());
}

TEST_CASE("ten-vertex reduction") {
  const Graph g = ten_vertex_graph();
  const auto r = artinian_reduction(g, ReductionMode::Canonical);
  const auto& a = *r.reduced();
  CHECK(a.hilbert() == std::vector<std::size_t>{1, 8, 7, 0});
  Vector sx = zero_vector(kF, 10), sy = zero_vector(kF, 10);
  for (const char* l : {"x1", "x2", "x3", "x4"}) sx = sx + vertex(g, l);
  for (const char* l : {"y1", "y2", "y3", "y4"}) sy = sy + vertex(g, l);
  CHECK(is_zero(a.multiply(1, r.to_reduced(1, sx), 1, r.to_reduced(1, sy))));
  // a cross product over a non-edge vanishes, over an edge it does not
  CHECK(is_zero(a.multiply(1, r.to_reduced(1, vertex(g, "x1")), 1, r.to_reduced(1, vertex(g, "y3")))));
  CHECK_FALSE(is_zero(a.multiply(1, r.to_reduced(1, vertex(g, "x1")), 1, r.to_reduced(1, vertex(g, "y1")))));
}

TEST_CASE("tree reductions have m^2 = 0") {
  for (std::size_t n = 3; n <= 7; ++n) {
    const auto r = artinian_reduction(path(n), ReductionMode::Canonical);
    CHECK(r.reduced()->dim(2) == 0);
    CHECK(r.reduced()->dim(1) == n - 2);
  }
  const auto s = artinian_reduction(star(4), ReductionMode::Generic, 3);
  CHECK(s.reduced()->dim(2) == 0);
}

TEST_CASE("Hilbert function of reductions matches 1 + (n-2)t + (e-n+1)t^2") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> side(1, 6);
  for (int t = 0; t < 30; ++t) {
    const std::size_t nx = side(rng), ny = side(rng);
    if (nx + ny < 2) continue;
    std::uniform_int_distribution<std::size_t> extra(0, nx * ny - (nx + ny - 1));
    const Graph g = random_bipartite(nx, ny, nx + ny - 1 + extra(rng), rng);
    const auto expected = expected_reduction_hilbert(g, 3);
    const auto gen = artinian_reduction(g, ReductionMode::Generic, static_cast<std::uint64_t>(t));
    CHECK(gen.reduced()->hilbert() == expected);
    const auto can = artinian_reduction(g, ReductionMode::Canonical);
    CHECK(can.reduced()->hilbert() == expected);
  }
}

TEST_CASE("side squares vanish in canonical bipartite reductions") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 15; ++t) {
    const Graph g = random_bipartite(4, 4, 10, rng);
    const auto r = artinian_reduction(g, ReductionMode::Canonical);
    const auto& a = *r.reduced();
    std::vector<Vector> xs, ys;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      (g.on_x_side(v) ? xs : ys).push_back(r.to_reduced(1, unit_vector(kF, g.vertex_count(), v)));
    for (const auto* side : {&xs, &ys})
      for (const auto& u : *side)
        for (const auto& w : *side) CHECK(is_zero(a.multiply(1, u, 1, w)));
  }
}

TEST_CASE("quotients by two forms do not depend on their order") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 10; ++t) {
    const Graph g = random_bipartite(3, 4, 8, rng);
    const Vector l1 = random_vector(kF, g.vertex_count(), rng);
    const Vector l2 = random_vector(kF, g.vertex_count(), rng);
    const auto r12 = reduce_by_forms(g, l1, l2);
    const auto r21 = reduce_by_forms(g, l2, l1);
    CHECK(r12.reduced()->hilbert() == r21.reduced()->hilbert());
    // multiplication by each vertex image has the same rank on both sides
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const Vector e = unit_vector(kF, g.vertex_count(), v);
      const auto m12 = r12.reduced()->multiplication_map(1, r12.to_reduced(1, e), 1);
      const auto m21 = r21.reduced()->multiplication_map(1, r21.to_reduced(1, e), 1);
      CHECK(rank(m12) == rank(m21));
    }
  }
}

TEST_CASE("structure constants satisfy the algebra axioms") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 5; ++t) {
    const Graph g = random_bipartite(3, 3, 6, rng);
    const auto r = artinian_reduction(g, ReductionMode::Generic, static_cast<std::uint64_t>(t), kF, 4);
    CHECK(r.ring->check_structure());
    CHECK(r.middle()->check_structure());
    CHECK(r.reduced()->check_structure());
  }
}

TEST_CASE("reduction preconditions") {
  const Graph disc({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  CHECK_THROWS_AS(artinian_reduction(disc, ReductionMode::Generic), PreconditionError);
  const Graph tri({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK_THROWS_AS(artinian_reduction(tri, ReductionMode::Canonical), PreconditionError);
  const Graph g = cycle4();
  // l2 proportional to l1 is not a regular system
  const Vector l = side_sum(g, true);
  CHECK_THROWS_AS(reduce_by_forms(g, l, scaled(l, kF.from_int(2))), ReductionError);
}
