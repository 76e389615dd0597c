#include "trm/exactla/subspace.hpp"

namespace trm {

Subspace Subspace::zero(Field field, std::size_t ambient) {
  return Subspace(DenseMatrix(field, 0, ambient), {});
}

Subspace Subspace::full(Field field, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(DenseMatrix::identity(field, ambient), std::move(piv));
}

Subspace Subspace::span(Field field, std::size_t ambient, const std::vector<Vector>& generators) {
  return row_space(DenseMatrix::from_rows(field, ambient, generators));
}

Subspace Subspace::row_space(const DenseMatrix& m) {
  Echelon e = rref(m);
  return Subspace(std::move(e.reduced), std::move(e.pivots));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim()) throw DimensionError("reduce: ambient mismatch");
  Vector out = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    Scalar f = out[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_dim(); ++c) {
      if (!basis_(r, c).is_zero()) out[c] -= f * basis_(r, c);
    }
  }
  return out;
}

bool Subspace::contains(const Vector& v) const { return trm::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimensionError("contains: ambient mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace comparison: ambient mismatch");
  return a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

Subspace kernel_basis(const DenseMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[f] = m.field().one();
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), gens);
}

Subspace image(const DenseMatrix& m) { return Subspace::row_space(m.transpose()); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace_sum: ambient mismatch");
  return Subspace::row_space(vstack({a.basis(), b.basis()}));
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace_intersection: ambient mismatch");
  const Field& f = a.field();
  const std::size_t n = a.ambient_dim();
  // Solve sum_i s_i a_i - sum_j t_j b_j = 0; the intersection is {sum_i s_i a_i}.
  DenseMatrix system(f, n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t c = 0; c < n; ++c) system(c, i) = a.basis()(i, c);
  }
  for (std::size_t j = 0; j < b.dim(); ++j) {
    for (std::size_t c = 0; c < n; ++c) system(c, a.dim() + j) = -b.basis()(j, c);
  }
  Subspace coeffs = kernel_basis(system);
  std::vector<Vector> gens;
  for (const Vector& k : coeffs.basis_vectors()) {
    Vector v = zero_vector(f, n);
    for (std::size_t i = 0; i < a.dim(); ++i) axpy(v, k[i], a.basis().row(i));
    gens.push_back(std::move(v));
  }
  return Subspace::span(f, n, gens);
}

bool subspace_equal(const Subspace& a, const Subspace& b) { return a == b; }

}  // namespace trm
