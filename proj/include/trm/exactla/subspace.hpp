#pragma once

#include <vector>

#include "trm/exactla/matrix.hpp"

namespace trm {

/// A linear subspace of k^n, stored as its reduced row-echelon basis. Two
/// equal subspaces always have identical bases.
class Subspace {
 public:
  static Subspace zero(Field field, std::size_t ambient);
  static Subspace full(Field field, std::size_t ambient);
  static Subspace span(Field field, std::size_t ambient, const std::vector<Vector>& generators);
  static Subspace row_space(const DenseMatrix& m);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const DenseMatrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Normal form of v modulo the subspace (zero in every pivot column).
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  bool is_zero() const { return dim() == 0; }

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Subspace(DenseMatrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  DenseMatrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const DenseMatrix& m);
/// Column space of m as a subspace of k^rows.
Subspace image(const DenseMatrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
bool subspace_equal(const Subspace& a, const Subspace& b);

}  // namespace trm
