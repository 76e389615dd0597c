#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "trm/reduction.hpp"
#include "trm/structure.hpp"

using namespace trm;
using namespace trm::testing;

namespace {

const Field kF = Field::prime();

GraphReduction special() { return artinian_reduction(ten_vertex_graph(), ReductionMode::Canonical); }

Vector reduced_vertex(const GraphReduction& r, const std::string& label) {
  return r.to_reduced(1, unit_vector(kF, r.graph.vertex_count(), r.graph.index_of(label)));
}

}  // namespace

TEST_CASE("socle of the ten-vertex ring is R_2") {
  const auto r = special();
  const Socle s = socle(*r.reduced());
  CHECK(s.dim() == 7);
  CHECK(s.linear_part().dim() == 0);
  CHECK(s.by_degree[2].dim() == 7);
}

TEST_CASE("the example ring has the linear socle element X - Y") {
  const auto r = example_ring(kF);
  const Socle s = socle(*r);
  REQUIRE(s.linear_part().dim() == 1);
  CHECK(s.linear_part().contains(vec(kF, {1, -1})));
  CHECK_FALSE(s.linear_part().contains(vec(kF, {1, 1})));
  CHECK(s.by_degree[2].dim() == 1);
}

TEST_CASE("socle always contains the top degree") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 10; ++t) {
    const auto r = artinian_reduction(random_bipartite(3, 4, 8, rng), ReductionMode::Canonical);
    const Socle s = socle(*r.reduced());
    CHECK(s.by_degree[2].dim() == r.reduced()->dim(2));
  }
  CHECK_THROWS_AS(socle(*stanley_reisner(cycle4(), 3, kF)), PreconditionError);
}

TEST_CASE("Yoshino conditions") {
  SECTION("ten-vertex ring") {
    const auto rep = yoshino_check(*special().reduced());
    CHECK(rep.socle_equals_m2);
    CHECK(rep.dims_match);
    CHECK(rep.type_r == 7);
    CHECK(rep.quadratic_presentation);
    CHECK(rep.verdict == TrVerdict::AdmitsPossible);
  }
  SECTION("example ring") {
    const auto rep = yoshino_check(*example_ring(kF));
    CHECK_FALSE(rep.socle_equals_m2);
    CHECK(rep.verdict == TrVerdict::NoNonFreeTR);
  }
  SECTION("trees") {
    for (std::size_t n = 4; n <= 7; ++n) {
      const auto rep = yoshino_check(*artinian_reduction(path(n), ReductionMode::Canonical).reduced());
      CHECK(rep.verdict == TrVerdict::NoNonFreeTR);
    }
  }
  SECTION("Gorenstein four-cycle ring") {
    const auto rep = yoshino_check(*artinian_reduction(cycle4(), ReductionMode::Canonical).reduced());
    CHECK(rep.gorenstein);
    CHECK(rep.verdict == TrVerdict::AdmitsPossible);
  }
}

TEST_CASE("Yoshino verdicts are monotone") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<std::size_t> side(2, 5);
  for (int t = 0; t < 25; ++t) {
    const std::size_t nx = side(rng), ny = side(rng);
    std::uniform_int_distribution<std::size_t> extra(0, nx * ny - (nx + ny - 1));
    const Graph g = random_bipartite(nx, ny, nx + ny - 1 + extra(rng), rng);
    const auto rep = yoshino_check(*artinian_reduction(g, ReductionMode::Canonical).reduced());
    if (!rep.gorenstein && (!rep.socle_equals_m2 || !rep.dims_match || !rep.quadratic_presentation)) {
      CHECK(rep.verdict == TrVerdict::NoNonFreeTR);
    }
  }
}

TEST_CASE("WLP on the example ring") {
  const auto r = example_ring(kF);
  CHECK(wlp_check(*r, vec(kF, {1, 0})));
  CHECK(wlp_check(*r, vec(kF, {2, 5})));
  CHECK_FALSE(wlp_check(*r, vec(kF, {1, -1})));
  CHECK_FALSE(wlp_check(*r, vec(kF, {3, -3})));
}

TEST_CASE("WLP fails on the ten-vertex ring") {
  const auto r = special();
  const auto res = wlp_generic(*r.reduced(), 100, 7);
  CHECK_FALSE(res.holds);
  CHECK(res.surjective == 0);
}

TEST_CASE("kernel system of the four-cycle") {
  const Graph g = cycle4();
  std::mt19937_64 rng(55);
  const Vector a = random_vector(kF, 4, rng);
  const auto ks = kernel_system(g, side_sum(g, true), side_sum(g, false), a);
  CHECK(ks.matrix.rows() == 8);
  CHECK(ks.matrix.cols() == 12);
  CHECK(ks.koszul_contained);
  CHECK(ks.koszul_rank == 3);
  CHECK(ks.dimension() == 4);
  CHECK(ks.extra_solution.has_value());
}

TEST_CASE("kernel system of the ten-vertex graph exceeds dimension 4") {
  const Graph g = ten_vertex_graph();
  std::mt19937_64 rng(57);
  const auto ks = kernel_system(g, side_sum(g, true), side_sum(g, false), random_vector(kF, 10, rng));
  CHECK(ks.koszul_contained);
  CHECK(ks.dimension() > 4);
}

TEST_CASE("Koszul solutions always solve the kernel system") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 20; ++t) {
    const Graph g = random_bipartite(3, 4, 9, rng);
    const std::size_t n = g.vertex_count();
    const auto ks = kernel_system(g, random_vector(kF, n, rng), random_vector(kF, n, rng), random_vector(kF, n, rng));
    CHECK(ks.koszul_contained);
    CHECK(ks.dimension() >= 3);
    for (const auto& k : ks.koszul) CHECK(is_zero(ks.matrix.apply(k)));
  }
}

TEST_CASE("exact zero divisors of k[x, y]/(x^2, y^2)") {
  const auto r = squares_ring(kF);
  CHECK(verify_ezd(*r, vec(kF, {1, 0}), vec(kF, {1, 0})));
  CHECK(verify_ezd(*r, vec(kF, {1, 1}), vec(kF, {1, -1})));
  CHECK_FALSE(verify_ezd(*r, vec(kF, {1, 0}), vec(kF, {0, 1})));
  CHECK(principal_length(*r, vec(kF, {1, 0})) == 2);
  CHECK(r->total_dim() == 4);
}

TEST_CASE("four-cycle reduction has exact zero divisors") {
  const auto r = artinian_reduction(cycle4(), ReductionMode::Canonical);
  for (auto strategy : {EzdStrategy::Random, EzdStrategy::BipartiteCanonical}) {
    EzdSearch s{strategy, 50, 3, reduced_sides(r)};
    const auto res = find_ezd(*r.reduced(), s);
    REQUIRE(res.pair.has_value());
    CHECK(res.pair->certified);
    CHECK(verify_ezd(*r.reduced(), res.pair->a, res.pair->b));
    CHECK(oracle::is_exact_zero_divisor_pair(*r.reduced(), res.pair->a, res.pair->b));
  }
}

TEST_CASE("ten-vertex ring has no exact zero divisors") {
  const auto r = special();
  const auto res = find_ezd(*r.reduced(), EzdSearch{EzdStrategy::Random, 2000, 1, {}});
  CHECK_FALSE(res.pair.has_value());
  CHECK(res.trials == 2000);
  const auto structural = structural_no_ezd(r.graph);
  REQUIRE(structural.has_value());
  CHECK(structural->describe(&r.graph) == "removing x5, y5 disconnects the graph");
  const auto searched = search_no_ezd(res);
  REQUIRE(searched.has_value());
  CHECK_FALSE(searched->complete);
}

TEST_CASE("exhaustive line search over a small field") {
  const Field f = Field::prime(5);
  const auto sq = squares_ring(f);
  const auto found = find_ezd(*sq, EzdSearch{EzdStrategy::ExhaustiveLines, 1000, 0, {}});
  CHECK(found.pair.has_value());
  const auto ex = example_ring(f);
  const auto none = find_ezd(*ex, EzdSearch{EzdStrategy::ExhaustiveLines, 1000, 0, {}});
  CHECK_FALSE(none.pair.has_value());
  CHECK(none.covered_all_lines);
  CHECK(none.trials == 6);  // lines of P^1 over GF(5)
}

TEST_CASE("found exact zero divisors satisfy WLP and the sign flip relation") {
  std::mt19937_64 rng(61);
  int found = 0;
  for (int t = 0; t < 30; ++t) {
    const std::size_t nx = 2 + t % 3, ny = 2 + (t / 3) % 3;
    const std::size_t n = nx + ny;
    if (nx * ny < 2 * n - 4) continue;
    const Graph g = random_bipartite(nx, ny, 2 * n - 4, rng);
    const auto r = artinian_reduction(g, ReductionMode::Canonical);
    const auto res = find_ezd(*r.reduced(), EzdSearch{EzdStrategy::BipartiteCanonical, 40, 5, reduced_sides(r)});
    if (!res.pair) continue;
    ++found;
    const auto& a = *r.reduced();
    CHECK(verify_ezd(a, res.pair->a, res.pair->b));
    CHECK(wlp_check(a, res.pair->a));
    CHECK(kernel_basis(a.multiplication_map(1, res.pair->a, 1)).dim() == 1);
    CHECK(is_zero(a.multiply(1, res.pair->a, 1, res.pair->b)));
  }
  CHECK(found > 0);
}

TEST_CASE("a disconnecting pair rules out exact zero divisors") {
  std::mt19937_64 rng(63);
  int seen = 0;
  for (int t = 0; t < 60 && seen < 10; ++t) {
    const std::size_t nx = 3 + t % 3, ny = 3 + (t / 2) % 3;
    const std::size_t n = nx + ny;
    const Graph g = random_bipartite(nx, ny, 2 * n - 4, rng);
    if (!disconnecting_pair(g)) continue;
    ++seen;
    const auto r = artinian_reduction(g, ReductionMode::Canonical);
    const auto res = find_ezd(*r.reduced(), EzdSearch{EzdStrategy::Random, 200, 9, {}});
    CHECK_FALSE(res.pair.has_value());
  }
  CHECK(seen > 0);
}

TEST_CASE("ideal pair of the ten-vertex ring") {
  const auto r = special();
  std::vector<Vector> ga, gb;
  for (const char* l : {"x1", "x2", "y1", "y2"}) ga.push_back(reduced_vertex(r, l));
  for (const char* l : {"x3", "x4", "y3", "y4"}) gb.push_back(reduced_vertex(r, l));
  const auto rep = ideal_pair_analysis(*r.reduced(), ga, gb);
  CHECK(rep.sum_is_maximal);
  CHECK(rep.product_zero);
  CHECK(rep.intersection_dims == std::vector<std::size_t>{0, 0, 1, 0});
  CHECK_FALSE(rep.direct_sum);
  CHECK_FALSE(rep.forbids_tr);
}

TEST_CASE("two blocks joined through an adjacent hub pair split as a direct sum") {
  // the ten-vertex graph with x5 - y5 added
  Graph base = ten_vertex_graph();
  std::vector<std::pair<std::string, std::string>> es;
  for (const auto& [a, b] : base.edges()) es.emplace_back(base.label(a), base.label(b));
  es.emplace_back("x5", "y5");
  const Graph g(base.labels(), es);
  const auto r = artinian_reduction(g, ReductionMode::Canonical);
  const auto split = find_direct_sum_partition(*r.reduced());
  REQUIRE(split.has_value());
  std::vector<Vector> ga, gb;
  for (std::size_t i : split->first) ga.push_back(unit_vector(kF, r.reduced()->dim(1), i));
  for (std::size_t j : split->second) gb.push_back(unit_vector(kF, r.reduced()->dim(1), j));
  const auto rep = ideal_pair_analysis(*r.reduced(), ga, gb);
  CHECK(rep.direct_sum);
  CHECK(rep.forbids_tr);
}
