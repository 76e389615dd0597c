#pragma once

#include <vector>

#include "trm/algebra.hpp"
#include "trm/complex.hpp"

namespace trm {

/// Lifts each R_1 entry to S_1 through the quotient section, where
/// q.source = S and q.target = R = S/(x).
GradedMatrix lift_matrix(const GradedMatrix& d, const QuotientMap& q);

/// Injectivity of .x : S_d -> S_(d+1) for every d with d + 1 <= cutoff.
bool is_regular_form(const GradedAlgebra& s, const Vector& x);

/// The unique M with x * M = left * right. Throws std::domain_error when .x
/// is not injective on S_1 or some entry is not divisible by x.
GradedMatrix correction_matrix(const GradedMatrix& left, const GradedMatrix& right, const Vector& x);

/// epsilon_i = [[lifted_i, x I], [M_i, lifted_(i-1)]] for even i and
/// [[lifted_i, -x I], [-M_i, lifted_(i-1)]] for odd i.
GradedMatrix assemble_epsilon(const GradedMatrix& lifted_i, const GradedMatrix& lifted_prev,
                              const GradedMatrix& m_i, const Vector& x, int i);

struct LiftOptions {
  /// Refuse sources that fail compose_check or (dual) exactness.
  bool check_source = true;
};

struct LiftStep {
  AlgebraPtr source;
  AlgebraPtr target;
  Vector x;
  int lo = 0;                               // index of the first lifted differential
  std::vector<GradedMatrix> lifted;         // lifted d_i, i = lo .. hi
  std::vector<GradedMatrix> corrections;    // M_i, i = lo+1 .. hi
  bool reduces_to_source = false;           // every lifted d_i maps back to d_i
  bool cancellation_holds = false;          // x (M_i d_(i+1) - d_(i-1) M_(i+1)) = 0
  FreeComplexWindow result;                 // epsilon_i, i = lo+1 .. hi
};

/// One lifting step over q : S -> R = S/(x). The new window has doubled
/// Betti numbers and one differential fewer than the source.
LiftStep lift_complex(const FreeComplexWindow& w, const QuotientMap& q, const LiftOptions& opts = {});

/// Lifts through chain[0], chain[1], ... where chain[0].target is the
/// window's algebra and chain[k].target == chain[k-1].source.
FreeComplexWindow lift_through_sequence(const FreeComplexWindow& w, const std::vector<QuotientMap>& chain,
                                        const LiftOptions& opts = {});

}  // namespace trm
