#include <catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <random>

#include "support.hpp"
#include "trm/graph.hpp"

using namespace trm;
using trm::testing::cycle4;
using trm::testing::path;
using trm::testing::random_bipartite;
using trm::testing::star;

namespace {

// Plain backtracking over all orderings; independent of the library search.
bool order_exists_backtracking(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> used(n, false);
  std::vector<std::size_t> prefix;
  std::function<bool()> rec = [&]() -> bool {
    if (prefix.size() == n) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      if (prefix.size() >= 2) {
        std::size_t seen = 0;
        for (std::size_t u : prefix) seen += g.adjacent(u, v) ? 1 : 0;
        if (seen < 2) continue;
      }
      used[v] = true;
      prefix.push_back(v);
      if (rec()) return true;
      prefix.pop_back();
      used[v] = false;
    }
    return false;
  };
  return rec();
}

bool some_cross_pair_disconnects(const Graph& g) {
  for (std::size_t a = 0; a < g.vertex_count(); ++a)
    for (std::size_t b = 0; b < g.vertex_count(); ++b)
      if (g.on_x_side(a) && !g.on_x_side(b) && !g.is_connected_without({a, b})) return true;
  return false;
}

}  // namespace

TEST_CASE("ten-vertex graph counts and conditions") {
  const Graph g = ten_vertex_graph();
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 16);
  const auto rep = necessary_conditions(g);
  CHECK(rep.connected);
  CHECK(rep.bipartite);
  CHECK(rep.edge_count_ok);
  CHECK(rep.triangle_free);
  CHECK(rep.leaf_free);
  CHECK_FALSE(rep.tree);
  REQUIRE(rep.disconnecting_pair.has_value());
  CHECK(g.label(rep.disconnecting_pair->first) == "x5");
  CHECK(g.label(rep.disconnecting_pair->second) == "y5");
  // the third vertex needs two earlier neighbours, which pins the start to a
  // same-side pair; every such start stalls before reaching the other block
  CHECK_FALSE(rep.build_order.has_value());
  CHECK_FALSE(order_exists_backtracking(g));
}

TEST_CASE("removing x5 and y5 leaves the two K22 blocks") {
  const Graph g = ten_vertex_graph();
  const auto comps = components_without(g, {g.index_of("x5"), g.index_of("y5")});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 4);
  CHECK(comps[1].size() == 4);
}

TEST_CASE("four-cycle conditions") {
  const Graph g = cycle4();
  const auto rep = necessary_conditions(g);
  CHECK(rep.edge_count_ok);
  CHECK(rep.triangle_free);
  CHECK(rep.leaf_free);
  CHECK_FALSE(rep.disconnecting_pair.has_value());
  CHECK_FALSE(some_cross_pair_disconnects(g));
  REQUIRE(rep.build_order.has_value());
  CHECK(is_valid_build_order(g, *rep.build_order));
}

TEST_CASE("star K13") {
  const Graph g = star(3);
  const auto rep = necessary_conditions(g);
  CHECK(rep.tree);
  CHECK_FALSE(rep.leaf_free);
  CHECK_FALSE(rep.edge_count_ok);
  CHECK(rep.disconnecting_pair.has_value() == some_cross_pair_disconnects(g));
  CHECK_FALSE(build_order(g).has_value());
}

TEST_CASE("trees with at least four vertices have no build order") {
  for (std::size_t n = 4; n <= 8; ++n) {
    CHECK_FALSE(build_order(path(n)).has_value());
    CHECK_FALSE(order_exists_backtracking(path(n)));
  }
  // three vertices: any ordering ending at the middle vertex works
  CHECK(build_order(path(3)).has_value());
}

TEST_CASE("invalid build orders are rejected") {
  const Graph g = cycle4();
  const auto x1 = g.index_of("x1"), x2 = g.index_of("x2"), y1 = g.index_of("y1"), y2 = g.index_of("y2");
  CHECK(is_valid_build_order(g, {x1, x2, y1, y2}));
  CHECK(is_valid_build_order(g, {y1, y2, x2, x1}));
  CHECK_FALSE(is_valid_build_order(g, {x1, y1, x2, y2}));
  CHECK_FALSE(is_valid_build_order(g, {x1, y1, x2}));
  CHECK_FALSE(is_valid_build_order(g, {x1, x1, y1, y2}));
}

TEST_CASE("build_order agrees with backtracking on random graphs") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> side(1, 4);
  for (int t = 0; t < 150; ++t) {
    const std::size_t nx = side(rng), ny = side(rng);
    std::uniform_int_distribution<std::size_t> extra(0, nx * ny - (nx + ny - 1));
    const Graph g = random_bipartite(nx, ny, nx + ny - 1 + extra(rng), rng);
    const auto order = build_order(g);
    CHECK(order.has_value() == order_exists_backtracking(g));
    if (order) CHECK(is_valid_build_order(g, *order));
  }
}

TEST_CASE("disconnecting_pair agrees with an exhaustive scan") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> side(2, 5);
  for (int t = 0; t < 150; ++t) {
    const std::size_t nx = side(rng), ny = side(rng);
    std::uniform_int_distribution<std::size_t> extra(0, nx * ny - (nx + ny - 1));
    const Graph g = random_bipartite(nx, ny, nx + ny - 1 + extra(rng), rng);
    const auto pair = disconnecting_pair(g);
    CHECK(pair.has_value() == some_cross_pair_disconnects(g));
    if (pair) CHECK_FALSE(g.is_connected_without({pair->first, pair->second}));
  }
}

TEST_CASE("tree flag matches cycle detection") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::size_t> side(1, 5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t nx = side(rng), ny = side(rng);
    std::uniform_int_distribution<std::size_t> extra(0, nx * ny - (nx + ny - 1));
    const Graph g = random_bipartite(nx, ny, nx + ny - 1 + extra(rng), rng);
    const auto rep = necessary_conditions(g);
    CHECK(rep.tree == !has_cycle(g));
    CHECK(rep.tree == (g.edge_count() + 1 == g.vertex_count()));
    if (rep.tree && g.vertex_count() > 3) CHECK_FALSE(rep.edge_count_ok);
  }
}

TEST_CASE("triangles and bipartition detection") {
  const Graph tri({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(has_triangle(tri));
  CHECK_FALSE(tri.is_bipartite());
  CHECK_THROWS_AS(disconnecting_pair(tri), PreconditionError);
  CHECK(cycle4().is_bipartite());
  CHECK_FALSE(has_triangle(cycle4()));
}

TEST_CASE("disconnected graphs violate the precondition") {
  const Graph g({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  CHECK_FALSE(g.is_connected());
  CHECK_THROWS_AS(necessary_conditions(g), PreconditionError);
}

TEST_CASE("graph loading errors") {
  CHECK_THROWS_AS(load_graph("{\"vertices\": [\"a\"], \"edges\": [[\"a\", \"z\"]]}"), GraphError);
  CHECK_THROWS_AS(load_graph("{\"vertices\": [\"a\", \"a\"], \"edges\": []}"), GraphError);
  CHECK_THROWS_AS(load_graph("{\"vertices\": [\"a\", \"b\"], \"edges\": [[\"a\", \"a\"]]}"), GraphError);
  CHECK_THROWS_AS(load_graph("[1, 2]"), GraphError);
  CHECK_THROWS(load_graph("not json"));
}

TEST_CASE("graph JSON round trip") {
  const Graph g = ten_vertex_graph();
  const Graph h = Graph::from_json(g.to_json());
  CHECK(h.labels() == g.labels());
  CHECK(h.edges() == g.edges());
  CHECK(h.to_json() == g.to_json());
}
