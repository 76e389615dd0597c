#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trm/algebra.hpp"
#include "trm/structure.hpp"

namespace trm {

/// Matrix over a graded algebra whose entries are homogeneous of a common
/// degree, stored as coordinate vectors.
class GradedMatrix {
 public:
  GradedMatrix(AlgebraPtr algebra, std::size_t rows, std::size_t cols, int degree);

  static GradedMatrix from_elements(AlgebraPtr algebra, int degree, const std::vector<std::vector<Vector>>& rows);
  /// x * I_n for a form x of the given degree.
  static GradedMatrix scalar_identity(AlgebraPtr algebra, std::size_t n, int degree, const Vector& x);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int degree() const { return degree_; }

  const Vector& entry(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
  void set(std::size_t r, std::size_t c, Vector v);
  AlgebraElement element(std::size_t r, std::size_t c) const;

  bool is_zero() const;
  GradedMatrix transpose() const;
  GradedMatrix negated() const;

  /// Matrix of the induced k-linear map R_s^cols -> R_(s+degree)^rows; row
  /// r * dim(s+degree) + k, column c * dim(s) + t. Empty rows when s+degree
  /// exceeds the cutoff.
  DenseMatrix block(int s) const;

  friend GradedMatrix operator+(const GradedMatrix& a, const GradedMatrix& b);
  friend GradedMatrix operator-(const GradedMatrix& a, const GradedMatrix& b);
  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);
  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b);

 private:
  AlgebraPtr algebra_;
  std::size_t rows_;
  std::size_t cols_;
  int degree_;
  std::vector<Vector> entries_;
};

/// Block matrix [[a, b], [c, d]]; all blocks must share algebra and degree.
GradedMatrix block_matrix(const GradedMatrix& a, const GradedMatrix& b, const GradedMatrix& c,
                          const GradedMatrix& d);

struct Periodicity {
  std::size_t period = 1;
  bool verified = false;  // the window repeats with this period
};

/// Differentials d_lo .. d_hi with d_i : F_i -> F_(i-1), F_i = R(-n_i)^(b_i).
/// Twists grow by the degree of each differential: n_i = n_(i-1) + deg d_i.
/// Entries must have degree 0 or 1; degree 0 entries are kept so that
/// verification can flag non-minimal input.
class FreeComplexWindow {
 public:
  FreeComplexWindow(AlgebraPtr algebra, int lo, std::vector<GradedMatrix> differentials, int twist_base = 0,
                    std::optional<Periodicity> periodicity = std::nullopt);

  const AlgebraPtr& algebra() const { return algebra_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(differentials_.size()) - 1; }
  std::size_t length() const { return differentials_.size(); }
  const GradedMatrix& d(int i) const;
  const std::vector<GradedMatrix>& differentials() const { return differentials_; }
  /// Rank of F_i for lo-1 <= i <= hi.
  std::size_t betti(int i) const;
  std::vector<std::size_t> betti_numbers() const;
  /// n_i for lo-1 <= i <= hi.
  int twist(int i) const;
  int twist_base() const { return twist_base_; }
  const std::optional<Periodicity>& periodicity() const { return periodicity_; }

  /// Every entry lies in the homogeneous maximal ideal.
  bool is_minimal() const;

  friend bool operator==(const FreeComplexWindow& a, const FreeComplexWindow& b);

 private:
  AlgebraPtr algebra_;
  int lo_;
  std::vector<GradedMatrix> differentials_;
  int twist_base_;
  std::optional<Periodicity> periodicity_;
};

/// d_(i-1) d_i = 0 for every composable pair.
bool compose_check(const FreeComplexWindow& w);

struct ExactnessEntry {
  int index = 0;   // homological position i (kernel of d_i, image of d_(i+1))
  int degree = 0;  // coordinate degree s of F_i, internal degree s + n_i
  std::size_t kernel_dim = 0;
  std::size_t image_rank = 0;
  bool exact = false;
};

struct ExactnessReport {
  std::vector<ExactnessEntry> entries;
  bool exact = false;
  /// Largest coordinate degree checked at every interior index.
  int certified_degree_bound = 0;
  /// Artinian algebra and every nonzero degree covered.
  bool full = false;
};

/// Exactness at every interior index lo <= i < hi and coordinate degree
/// 0 <= s <= degree_bound (clamped to the cutoff).
ExactnessReport graded_exactness(const FreeComplexWindow& w, int degree_bound);
ExactnessReport graded_exactness(const FreeComplexWindow& w);

/// e_j = d_(1-j)^T over indices [1-hi, 1-lo], twists negated.
FreeComplexWindow dual(const FreeComplexWindow& w);

/// d_i = a for even i and b for odd i, indices 1-half_length .. half_length.
/// Throws PreconditionError unless (a, b) is certified.
FreeComplexWindow ezd_complex(const AlgebraPtr& r, const EzdPair& pair, int half_length);

/// The differential d_i as a presentation of Coker(d_i); i must satisfy lo < i < hi.
GradedMatrix cokernel_presentation(const FreeComplexWindow& w, int i);

/// Degree-1 and degree-2 pieces of the ideal generated by the entries of a
/// linear presentation matrix.
std::pair<Subspace, Subspace> fitting_support(const GradedMatrix& presentation);

struct IndecomposabilityVerdict {
  bool indecomposable = false;
  std::string reason;
  std::optional<NoEzdCertificate> certificate;
};

/// A minimal two-generator cokernel in a totally acyclic complex over a ring
/// without exact zero divisors cannot split into cyclic summands.
IndecomposabilityVerdict indecomposability_certificate(const FreeComplexWindow& w, int i,
                                                       const std::optional<NoEzdCertificate>& no_ezd);

}  // namespace trm
