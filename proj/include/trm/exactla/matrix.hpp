#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trm/exactla/scalar.hpp"

namespace trm {

/// Dense row-major matrix over a Field.
class DenseMatrix {
 public:
  DenseMatrix(Field field, std::size_t rows, std::size_t cols);

  static DenseMatrix identity(Field field, std::size_t n);
  static DenseMatrix from_ints(Field field, const std::vector<std::vector<std::int64_t>>& rows);
  static DenseMatrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);
  static DenseMatrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);

  DenseMatrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  Vector data_;
};

/// Stack matrices with equal column counts on top of each other.
DenseMatrix vstack(const std::vector<DenseMatrix>& blocks);

enum class PivotOrder {
  Leading,   // pivot on the first nonzero column of each row
  Trailing,  // pivot on the last nonzero column of each row
};

/// Reduced row-echelon form. `reduced` holds only the nonzero rows; row r has
/// a 1 in column pivots[r] and zeros in every other pivot column.
struct Echelon {
  DenseMatrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

Echelon rref(const DenseMatrix& m, PivotOrder order = PivotOrder::Leading);
std::size_t rank(const DenseMatrix& m);
std::optional<Vector> solve(const DenseMatrix& m, const Vector& b);

}  // namespace trm
