#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "trm/algebra.hpp"
#include "trm/graph.hpp"
#include "trm/reduction.hpp"

namespace trm::testing {

inline std::vector<std::string> side_labels(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

/// Connected bipartite graph on nx + ny vertices with exactly `edges` edges
/// (a random spanning tree plus random extra cross edges).
inline Graph random_bipartite(std::size_t nx, std::size_t ny, std::size_t edges, std::mt19937_64& rng) {
  auto xs = side_labels("x", nx);
  auto ys = side_labels("y", ny);
  std::vector<std::string> all = xs;
  all.insert(all.end(), ys.begin(), ys.end());
  const std::size_t n = nx + ny;

  std::vector<std::vector<bool>> used(nx, std::vector<bool>(ny, false));
  std::vector<std::pair<std::string, std::string>> es;
  auto add = [&](std::size_t i, std::size_t j) {
    if (used[i][j]) return;
    used[i][j] = true;
    es.emplace_back(xs[i], ys[j]);
  };
  // grow a tree: start from a random cross edge, then attach each remaining
  // vertex to a random placed vertex of the other side
  std::uniform_int_distribution<std::size_t> px(0, nx - 1), py(0, ny - 1);
  const std::size_t x0 = px(rng), y0 = py(rng);
  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < n; ++v)
    if (v != x0 && v != nx + y0) order.push_back(v);
  std::shuffle(order.begin(), order.end(), rng);
  order.insert(order.begin(), {x0, nx + y0});
  std::vector<std::size_t> placed_x{order[0]};
  std::vector<std::size_t> placed_y{order[1] - nx};
  add(order[0], order[1] - nx);
  for (std::size_t k = 2; k < n; ++k) {
    const std::size_t v = order[k];
    if (v < nx) {
      std::uniform_int_distribution<std::size_t> pick(0, placed_y.size() - 1);
      add(v, placed_y[pick(rng)]);
      placed_x.push_back(v);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, placed_x.size() - 1);
      add(placed_x[pick(rng)], v - nx);
      placed_y.push_back(v - nx);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      if (!used[i][j]) free.emplace_back(i, j);
  std::shuffle(free.begin(), free.end(), rng);
  for (const auto& [i, j] : free) {
    if (es.size() >= edges) break;
    add(i, j);
  }
  return Graph(all, es, std::make_pair(xs, ys));
}

inline Graph cycle4() {
  return Graph({"x1", "x2", "y1", "y2"}, {{"x1", "y1"}, {"x1", "y2"}, {"x2", "y1"}, {"x2", "y2"}},
               std::make_pair(std::vector<std::string>{"x1", "x2"}, std::vector<std::string>{"y1", "y2"}));
}

inline Graph path(std::size_t n) {
  std::vector<std::string> vs;
  std::vector<std::pair<std::string, std::string>> es;
  for (std::size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i + 1));
  for (std::size_t i = 0; i + 1 < n; ++i) es.emplace_back(vs[i], vs[i + 1]);
  return Graph(vs, es);
}

inline Graph star(std::size_t leaves) {
  std::vector<std::string> vs{"c"};
  std::vector<std::pair<std::string, std::string>> es;
  for (std::size_t i = 1; i <= leaves; ++i) {
    vs.push_back("l" + std::to_string(i));
    es.emplace_back("c", vs.back());
  }
  return Graph(vs, es);
}

/// k[X, Y]/(X^2 - Y^2, X^2 - XY, X^3).
inline AlgebraPtr example_ring(const Field& f, int cutoff = 3) {
  auto mono = [&](std::int64_t c, int a, int b) { return Polynomial::monomial(f.from_int(c), {a, b}); };
  std::vector<Polynomial> rel{mono(1, 2, 0) - mono(1, 0, 2), mono(1, 2, 0) - mono(1, 1, 1), mono(1, 3, 0)};
  return algebra_from_relations(f, {"X", "Y"}, rel, cutoff);
}

/// k[x, y]/(x^2, y^2).
inline AlgebraPtr squares_ring(const Field& f, int cutoff = 3) {
  std::vector<Polynomial> rel{Polynomial::monomial(f.one(), {2, 0}), Polynomial::monomial(f.one(), {0, 2})};
  return algebra_from_relations(f, {"x", "y"}, rel, cutoff);
}

inline Vector vec(const Field& f, const std::vector<std::int64_t>& xs) {
  Vector v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

inline Vector random_vector(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(f.random(rng));
  return v;
}

/// Sum of the vertex variables on one side of a bipartite graph.
inline Vector side_sum(const Graph& g, bool x_side) {
  const Field f = Field::prime();
  Vector v = zero_vector(f, g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (g.on_x_side(i) == x_side) v[i] = f.one();
  return v;
}

}  // namespace trm::testing
