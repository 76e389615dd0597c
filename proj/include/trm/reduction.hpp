#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "trm/algebra.hpp"
#include "trm/graph.hpp"

namespace trm {

/// The chosen linear forms do not form a regular system for R_Gamma (the
/// Hilbert function of the quotient is off).
class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ReductionMode {
  Canonical,  // l1 = sum of X-side variables, l2 = sum of Y-side variables
  Generic,    // uniformly random coefficients, resampled until regular
};

/// R_Gamma -> R_Gamma/(l1) -> R_Gamma/(l1, l2), with the forms and both
/// quotient maps kept for lifting.
struct GraphReduction {
  Graph graph;
  ReductionMode mode = ReductionMode::Canonical;
  std::uint64_t seed = 0;
  int degree_bound = 3;
  AlgebraPtr ring;   // R_Gamma truncated at degree_bound
  Vector l1;         // coordinates in R_Gamma degree 1 (vertex order)
  Vector l2;
  QuotientMap first;   // R_Gamma -> R_Gamma/(l1)
  QuotientMap second;  // R_Gamma/(l1) -> R

  const AlgebraPtr& middle() const { return first.target; }
  const AlgebraPtr& reduced() const { return second.target; }

  /// Vertex index represented by each R_1 basis vector of the reduced ring.
  std::vector<std::size_t> reduced_vertices() const;
  /// Degree-d coordinates in R_Gamma pushed down to R.
  Vector to_reduced(int d, const Vector& v) const;
};

/// Expected Hilbert function (1, n-2, e-n+1, 0, ..., 0) up to degree_bound.
std::vector<std::size_t> expected_reduction_hilbert(const Graph& g, int degree_bound);

/// Quotients R_Gamma by two linear forms. Canonical mode needs a bipartite
/// graph and throws ReductionError on a Hilbert mismatch; generic mode
/// resamples up to `attempts` times.
GraphReduction artinian_reduction(const Graph& g, ReductionMode mode, std::uint64_t seed = 0,
                                  const Field& field = Field::prime(), int degree_bound = 3, int attempts = 16);

/// Reduction with caller-supplied forms, given as vertex coefficient vectors.
GraphReduction reduce_by_forms(const Graph& g, const Vector& l1, const Vector& l2, int degree_bound = 3);

/// For a canonical bipartite reduction: the X/Y side of each R_1 basis vector
/// (true for X). Empty for generic reductions.
std::vector<bool> reduced_sides(const GraphReduction& r);

}  // namespace trm
