#include "trm/exactla/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace trm {

DenseMatrix::DenseMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

DenseMatrix DenseMatrix::identity(Field field, std::size_t n) {
  DenseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

DenseMatrix DenseMatrix::from_ints(Field field, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("from_ints: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

DenseMatrix DenseMatrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  DenseMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

DenseMatrix DenseMatrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols) {
  DenseMatrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector DenseMatrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector DenseMatrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void DenseMatrix::set_row(std::size_t r, const Vector& v) {
  if (v.size() != cols_) throw DimensionError("set_row: length mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector DenseMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionError("apply: length mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: shape mismatch");
  DenseMatrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

DenseMatrix vstack(const std::vector<DenseMatrix>& blocks) {
  if (blocks.empty()) throw DimensionError("vstack: no blocks");
  std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DimensionError("vstack: column mismatch");
    rows += b.rows();
  }
  DenseMatrix out(blocks.front().field(), rows, cols);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r, ++at) {
      for (std::size_t c = 0; c < cols; ++c) out(at, c) = b(r, c);
    }
  }
  return out;
}

namespace {

std::vector<std::size_t> column_order(std::size_t cols, PivotOrder order) {
  std::vector<std::size_t> idx(cols);
  std::iota(idx.begin(), idx.end(), 0);
  if (order == PivotOrder::Trailing) std::reverse(idx.begin(), idx.end());
  return idx;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = (result * base) % p;
    base = (base * base) % p;
    e >>= 1U;
  }
  return result;
}

// Gauss-Jordan over GF(p) on raw residues; p < 2^32 keeps products in 64 bits.
Echelon rref_residues(const DenseMatrix& m, PivotOrder order) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::uint64_t p = m.field().characteristic();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m(r, c).residue().value;
  }
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  std::size_t rank = 0;
  for (std::size_t col : column_order(cols, order)) {
    if (rank == rows) break;
    std::size_t pr = rank;
    while (pr < rows && a[pr * cols + col] == 0) ++pr;
    if (pr == rows) continue;
    if (pr != rank) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pr * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((pr + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    }
    std::uint64_t* prow = &a[rank * cols];
    std::uint64_t inv = inverse_mod(prow[col], p);
    support.clear();
    for (std::size_t c = 0; c < cols; ++c) {
      if (prow[c] != 0) {
        prow[c] = (prow[c] * inv) % p;
        support.push_back(c);
      }
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      std::uint64_t* row = &a[r * cols];
      std::uint64_t f = row[col];
      if (f == 0) continue;
      std::uint64_t neg = p - f;
      for (std::size_t c : support) row[c] = (row[c] + neg * prow[c]) % p;
    }
    pivots.push_back(col);
    ++rank;
  }
  DenseMatrix reduced(m.field(), rank, cols);
  for (std::size_t r = 0; r < rank; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      reduced(r, c) = Scalar(Scalar::Residue{a[r * cols + c], p});
    }
  }
  return Echelon{std::move(reduced), std::move(pivots)};
}

Echelon rref_generic(const DenseMatrix& m, PivotOrder order) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  DenseMatrix a = m;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  std::size_t rank = 0;
  for (std::size_t col : column_order(cols, order)) {
    if (rank == rows) break;
    std::size_t pr = rank;
    while (pr < rows && a(pr, col).is_zero()) ++pr;
    if (pr == rows) continue;
    if (pr != rank) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(a(pr, c), a(rank, c));
    }
    Scalar inv = a(rank, col).inverse();
    support.clear();
    for (std::size_t c = 0; c < cols; ++c) {
      if (!a(rank, c).is_zero()) {
        a(rank, c) *= inv;
        support.push_back(c);
      }
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a(r, col).is_zero()) continue;
      Scalar f = a(r, col);
      for (std::size_t c : support) a(r, c) -= f * a(rank, c);
    }
    pivots.push_back(col);
    ++rank;
  }
  DenseMatrix reduced(m.field(), rank, cols);
  for (std::size_t r = 0; r < rank; ++r) {
    for (std::size_t c = 0; c < cols; ++c) reduced(r, c) = a(r, c);
  }
  return Echelon{std::move(reduced), std::move(pivots)};
}

}  // namespace

Echelon rref(const DenseMatrix& m, PivotOrder order) {
  if (m.field().is_prime()) return rref_residues(m, order);
  return rref_generic(m, order);
}

std::size_t rank(const DenseMatrix& m) { return rref(m).rank(); }

std::optional<Vector> solve(const DenseMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
  DenseMatrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Echelon e = rref(aug);
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

}  // namespace trm
