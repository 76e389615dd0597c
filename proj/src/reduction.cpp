#include "trm/reduction.hpp"

#include <random>

namespace trm {

std::vector<std::size_t> GraphReduction::reduced_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t k : second.section.at(1)) out.push_back(first.section.at(1).at(k));
  return out;
}

Vector GraphReduction::to_reduced(int d, const Vector& v) const {
  return second.project(d, first.project(d, v));
}

std::vector<std::size_t> expected_reduction_hilbert(const Graph& g, int degree_bound) {
  const std::size_t n = g.vertex_count();
  const std::size_t e = g.edge_count();
  std::vector<std::size_t> h(static_cast<std::size_t>(degree_bound) + 1, 0);
  h[0] = 1;
  if (degree_bound >= 1) h[1] = n - 2;
  if (degree_bound >= 2) h[2] = e + 1 - n;
  return h;
}

GraphReduction reduce_by_forms(const Graph& g, const Vector& l1, const Vector& l2, int degree_bound) {
  if (!g.is_connected()) throw PreconditionError("artinian reduction needs a connected graph");
  if (g.vertex_count() < 2) throw PreconditionError("artinian reduction needs at least two vertices");
  if (degree_bound < 2) throw std::invalid_argument("degree bound must be at least 2");
  if (l1.size() != g.vertex_count() || l2.size() != g.vertex_count()) {
    throw DimensionError("linear forms must have one coefficient per vertex");
  }
  const Field f = l1.front().field();
  GraphReduction r{g, ReductionMode::Canonical, 0, degree_bound, stanley_reisner(g, degree_bound, f), l1, l2, {}, {}};
  r.first = quotient_by_linear(r.ring, l1);
  Vector l2_mid = r.first.project(1, l2);
  if (is_zero(l2_mid)) throw ReductionError("second linear form is a multiple of the first");
  r.second = quotient_by_linear(r.first.target, l2_mid);
  if (r.reduced()->hilbert() != expected_reduction_hilbert(g, degree_bound)) {
    throw ReductionError("linear forms are not a regular system: Hilbert function mismatch");
  }
  return r;
}

GraphReduction artinian_reduction(const Graph& g, ReductionMode mode, std::uint64_t seed, const Field& field,
                                  int degree_bound, int attempts) {
  const std::size_t n = g.vertex_count();
  if (mode == ReductionMode::Canonical) {
    if (!g.is_bipartite()) throw PreconditionError("canonical reduction needs a bipartite graph");
    Vector l1 = zero_vector(field, n);
    Vector l2 = zero_vector(field, n);
    for (std::size_t v = 0; v < n; ++v) (g.on_x_side(v) ? l1 : l2)[v] = field.one();
    GraphReduction r = reduce_by_forms(g, l1, l2, degree_bound);
    r.mode = ReductionMode::Canonical;
    return r;
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Vector l1(n), l2(n);
    for (auto& c : l1) c = field.random(rng);
    for (auto& c : l2) c = field.random(rng);
    if (is_zero(l1)) continue;
    try {
      GraphReduction r = reduce_by_forms(g, l1, l2, degree_bound);
      r.mode = ReductionMode::Generic;
      r.seed = seed;
      return r;
    } catch (const ReductionError&) {
    }
  }
  throw ReductionError("no regular pair of linear forms found within the attempt budget");
}

std::vector<bool> reduced_sides(const GraphReduction& r) {
  std::vector<bool> sides;
  if (r.mode != ReductionMode::Canonical) return sides;
  for (std::size_t v : r.reduced_vertices()) sides.push_back(r.graph.on_x_side(v));
  return sides;
}

}  // namespace trm
