#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "trm/complex.hpp"
#include "trm/reduction.hpp"

namespace trm {

/// An extension step or sampling loop could not continue.
class FactoryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Side { A, B };

/// Coefficients of a linear form on one side, in the order (x, y, x', y'):
/// (x1, y1, x2, y2) for side A and (x3, y3, x4, y4) for side B.
using SideForm = std::array<Scalar, 4>;
using SideBlock = std::array<std::array<SideForm, 2>, 2>;

/// The ten-vertex ring: R_Gamma/(sum X, sum Y) for the two-K_{2,2} graph,
/// with a = (x1, x2, y1, y2), b = (x3, x4, y3, y4) and a cap b = (delta).
struct SpecialRing {
  GraphReduction reduction;
  AlgebraPtr ring;
  std::array<std::size_t, 4> a_vars;  // R_1 basis indices of x1, y1, x2, y2
  std::array<std::size_t, 4> b_vars;  // R_1 basis indices of x3, y3, x4, y4
  Subspace a1, a2, b1, b2;
  /// R_2 coordinates of the side monomials v1v2, v2v3, v3v4, v1v4.
  std::array<Vector, 4> a_monomials;
  std::array<Vector, 4> b_monomials;
  Vector delta;  // generator of a cap b, first nonzero coordinate 1

  Vector form(Side side, const SideForm& c) const;
  /// Splits a linear form into its side coordinates; throws DimensionError
  /// when `v` has a component outside `side`.
  SideForm side_coordinates(Side side, const Vector& v) const;
  /// Coordinates of a degree-2 element of the side in the monomial basis.
  std::array<Scalar, 4> monomial_coordinates(Side side, const Vector& v) const;
};

SpecialRing build_special_ring(const Field& field = Field::prime(), int degree_bound = 3);

/// The 8x8 matrix of (f, g) -> block * (f, g)^T from (side_1)^2 to
/// (side_2)^2: row pairs for the monomials v1v2, v2v3, v3v4, v1v4 with the
/// two block rows interleaved, columns (f1..f4, g1..g4).
DenseMatrix injectivity_matrix(const Field& field, const SideBlock& block);

/// Rank of the induced map (side_1)^2 -> (R_2)^2 computed in the ring itself.
std::size_t induced_map_rank(const SpecialRing& r, Side side, const SideBlock& block);

bool injectivity_check(const SpecialRing& r, const SideBlock& block);
/// Same check for a graded 2x2 matrix whose entries must lie in side_1.
bool injectivity_check(const SpecialRing& r, const GradedMatrix& block, Side side, bool transpose);

SideBlock transpose(const SideBlock& b);

struct PairBlock {
  int index = 0;
  SideBlock a;
  SideBlock b;
  bool a_injective = false;
  bool a_t_injective = false;
  bool b_injective = false;
  bool b_t_injective = false;

  bool all_injective() const { return a_injective && a_t_injective && b_injective && b_t_injective; }
  GradedMatrix a_matrix(const SpecialRing& r) const;
  GradedMatrix b_matrix(const SpecialRing& r) const;
  GradedMatrix differential(const SpecialRing& r) const { return a_matrix(r) + b_matrix(r); }
};

PairBlock make_block(const SpecialRing& r, int index, const SideBlock& a, const SideBlock& b);

/// Blocks at n+1 from unique c_k, d_k with A c_1 = -B d_1 = (delta, 0)^T and
/// A c_2 = -B d_2 = (0, delta)^T.
PairBlock extend_forward(const SpecialRing& r, const PairBlock& blk);
/// Blocks at n-1 by extending the transposes forward and transposing back.
PairBlock extend_backward(const SpecialRing& r, const PairBlock& blk);

/// The explicit periodic blocks for even (parity 0) or odd (parity 1) n.
PairBlock canonical_blocks(const SpecialRing& r, int parity);

/// Uniform random blocks, resampled until all four injectivity checks pass.
PairBlock random_blocks(const SpecialRing& r, std::uint64_t seed, int retries = 64);

struct FactoryWindow {
  std::vector<PairBlock> blocks;  // indices -backward .. forward
  FreeComplexWindow window;       // d_n = A_n + B_n
};

FactoryWindow build_window(const SpecialRing& r, const PairBlock& start, int forward = 4, int backward = 4);

/// The canonical periodic window with differentials at -backward .. forward.
FactoryWindow canonical_window(const SpecialRing& r, int forward, int backward);

/// Fitting supports of the index-0 presentations differ.
bool distinct_modules(const FreeComplexWindow& w1, const FreeComplexWindow& w2);

}  // namespace trm
