#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trm/algebra.hpp"
#include "trm/graph.hpp"

namespace trm {

/// (0 :_R m), one canonical subspace per degree.
struct Socle {
  std::vector<Subspace> by_degree;

  std::size_t dim() const;
  const Subspace& linear_part() const { return by_degree.at(1); }
};

/// Needs an Artinian algebra (vanishing at the cutoff); throws
/// PreconditionError otherwise.
Socle socle(const GradedAlgebra& r);

enum class TrVerdict { AdmitsPossible, NoNonFreeTR };
std::string to_string(TrVerdict v);

struct YoshinoReport {
  bool socle_equals_m2 = false;
  std::size_t dim_r1 = 0;
  std::size_t dim_r2 = 0;
  std::size_t type_r = 0;
  bool dims_match = false;  // dim R1 = r + 1 and dim R2 = r
  bool quadratic_presentation = false;
  bool gorenstein = false;  // type 1: every module is totally reflexive
  TrVerdict verdict = TrVerdict::NoNonFreeTR;
};

/// Necessary conditions for non-free totally reflexive modules over a
/// non-Gorenstein ring with m^3 = 0. Gorenstein rings other than k are
/// reported as AdmitsPossible. Needs dim R_3 = 0 and cutoff >= 3.
YoshinoReport yoshino_check(const GradedAlgebra& r);

/// Surjectivity of .l : R_1 -> R_2.
bool wlp_check(const GradedAlgebra& r, const Vector& l);

struct WlpResult {
  bool holds = false;
  std::size_t trials = 0;
  std::size_t surjective = 0;
  std::optional<Vector> witness;
};

/// Runs `trials` random forms; one surjective sample certifies WLP.
WlpResult wlp_generic(const GradedAlgebra& r, std::size_t trials = 8, std::uint64_t seed = 0);

/// The linear system l1 f1 + l2 f2 + l f = 0 in R_Gamma over unknowns
/// (u, v, w), one row per edge and one per vertex.
struct KernelSystem {
  DenseMatrix matrix;                 // (e + n) x 3n
  Subspace solutions;
  std::array<Vector, 3> koszul;       // (-l2, l1, 0), (-l, 0, l1), (0, -l, l2)
  bool koszul_contained = false;
  std::size_t koszul_rank = 0;
  std::optional<Vector> extra_solution;  // set when dimension() == 4

  std::size_t dimension() const { return solutions.dim(); }
};

KernelSystem kernel_system(const Graph& g, const Vector& alpha, const Vector& beta, const Vector& a);

struct EzdPair {
  Vector a;
  Vector b;
  bool certified = false;
};

/// Length of the principal ideal (a) for a in R_1: sum over d of rank(.a : R_d -> R_(d+1)).
std::size_t principal_length(const GradedAlgebra& r, const Vector& a);

/// a*b = 0 and length((a)) + length((b)) = length(R), for linear a, b.
bool verify_ezd(const GradedAlgebra& r, const Vector& a, const Vector& b);

enum class EzdStrategy { Random, BipartiteCanonical, ExhaustiveLines };

struct EzdSearch {
  EzdStrategy strategy = EzdStrategy::Random;
  std::size_t budget = 10000;
  std::uint64_t seed = 0;
  std::vector<bool> sides;  // bipartite strategy: true for X-side basis vectors
};

struct EzdSearchResult {
  std::optional<EzdPair> pair;
  std::size_t trials = 0;
  bool covered_all_lines = false;  // exhaustive strategy finished every line of P(R_1)
};

EzdSearchResult find_ezd(const GradedAlgebra& r, const EzdSearch& search);

/// Why a ring has no exact zero divisors.
struct NoEzdCertificate {
  enum class Kind { DisconnectingPair, SearchExhausted };
  Kind kind = Kind::SearchExhausted;
  std::optional<std::pair<std::size_t, std::size_t>> pair;  // vertex indices
  std::size_t trials = 0;
  bool complete = false;  // search covered every candidate

  std::string describe(const Graph* g = nullptr) const;
};

/// Structural certificate for the canonical reduction: bipartite, e = 2n - 4
/// and a cross pair whose removal disconnects the graph.
std::optional<NoEzdCertificate> structural_no_ezd(const Graph& g);
std::optional<NoEzdCertificate> search_no_ezd(const EzdSearchResult& result);

struct IdealPairReport {
  std::vector<Subspace> a;  // per degree; degree 0 is zero
  std::vector<Subspace> b;
  bool sum_is_maximal = false;
  bool product_zero = false;
  std::vector<std::size_t> intersection_dims;
  bool direct_sum = false;
  bool both_nonzero = false;
  std::size_t generators = 0;  // nu(m) = dim R_1
  bool forbids_tr = false;     // direct sum of nonzero ideals with nu(m) >= 3
};

/// Degreewise ideals generated by two lists of linear forms.
IdealPairReport ideal_pair_analysis(const GradedAlgebra& r, const std::vector<Vector>& gens_a,
                                    const std::vector<Vector>& gens_b);

/// Search over 2-part partitions of the R_1 basis for a direct-sum
/// decomposition m = a (+) b. Only runs when dim R_1 <= 12.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> find_direct_sum_partition(
    const GradedAlgebra& r);

/// Degreewise ideal generated by degree-1 elements.
std::vector<Subspace> generated_ideal(const GradedAlgebra& r, const std::vector<Vector>& gens);

}  // namespace trm
