#include "trm/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace trm {

GradedMatrix::GradedMatrix(AlgebraPtr algebra, std::size_t rows, std::size_t cols, int degree)
    : algebra_(std::move(algebra)), rows_(rows), cols_(cols), degree_(degree) {
  if (!algebra_) throw std::invalid_argument("graded matrix without algebra");
  if (degree_ < 0 || degree_ > algebra_->cutoff()) throw DimensionError("entry degree outside the algebra");
  entries_.assign(rows * cols, zero_vector(algebra_->field(), algebra_->dim(degree_)));
}

GradedMatrix GradedMatrix::from_elements(AlgebraPtr algebra, int degree, const std::vector<std::vector<Vector>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  GradedMatrix m(std::move(algebra), rows.size(), cols, degree);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

GradedMatrix GradedMatrix::scalar_identity(AlgebraPtr algebra, std::size_t n, int degree, const Vector& x) {
  GradedMatrix m(std::move(algebra), n, n, degree);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, x);
  return m;
}

void GradedMatrix::set(std::size_t r, std::size_t c, Vector v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("graded matrix index");
  if (v.size() != algebra_->dim(degree_)) throw DimensionError("entry has wrong coordinate length");
  entries_[r * cols_ + c] = std::move(v);
}

AlgebraElement GradedMatrix::element(std::size_t r, std::size_t c) const {
  return algebra_->element(degree_, entry(r, c));
}

bool GradedMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Vector& v) { return trm::is_zero(v); });
}

GradedMatrix GradedMatrix::transpose() const {
  GradedMatrix t(algebra_, cols_, rows_, degree_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = entry(r, c);
  }
  return t;
}

GradedMatrix GradedMatrix::negated() const {
  GradedMatrix n = *this;
  for (auto& v : n.entries_) v = trm::negated(v);
  return n;
}

DenseMatrix GradedMatrix::block(int s) const {
  const Field& f = algebra_->field();
  const std::size_t src = algebra_->dim(s);
  if (s + degree_ > algebra_->cutoff()) return DenseMatrix(f, 0, cols_ * src);
  const std::size_t dst = algebra_->dim(s + degree_);
  DenseMatrix m(f, rows_ * dst, cols_ * src);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Vector& e = entry(r, c);
      if (trm::is_zero(e)) continue;
      DenseMatrix piece = algebra_->multiplication_map(degree_, e, s);
      for (std::size_t k = 0; k < dst; ++k) {
        for (std::size_t t = 0; t < src; ++t) m(r * dst + k, c * src + t) = piece(k, t);
      }
    }
  }
  return m;
}

namespace {

void require_same_shape(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.algebra() != b.algebra() || a.degree() != b.degree() || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("graded matrices differ in algebra, degree or shape");
  }
}

}  // namespace

GradedMatrix operator+(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_shape(a, b);
  GradedMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] = a.entries_[i] + b.entries_[i];
  return out;
}

GradedMatrix operator-(const GradedMatrix& a, const GradedMatrix& b) { return a + b.negated(); }

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.algebra() != b.algebra()) throw DimensionError("graded matrices over different algebras");
  if (a.cols() != b.rows()) throw DimensionError("graded matrix product: shape mismatch");
  const auto& alg = a.algebra();
  const int deg = a.degree() + b.degree();
  if (deg > alg->cutoff()) throw DimensionError("graded matrix product exceeds the cutoff");
  GradedMatrix out(alg, a.rows(), b.cols(), deg);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Vector acc = zero_vector(alg->field(), alg->dim(deg));
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const Vector& x = a.entry(r, k);
        const Vector& y = b.entry(k, c);
        if (is_zero(x) || is_zero(y)) continue;
        acc = acc + alg->multiply(a.degree(), x, b.degree(), y);
      }
      out.entries_[r * out.cols_ + c] = std::move(acc);
    }
  }
  return out;
}

bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
  return a.algebra_ == b.algebra_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.degree_ == b.degree_ &&
         a.entries_ == b.entries_;
}

GradedMatrix block_matrix(const GradedMatrix& a, const GradedMatrix& b, const GradedMatrix& c,
                          const GradedMatrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols()) {
    throw DimensionError("block matrix: incompatible block shapes");
  }
  for (const GradedMatrix* m : {&b, &c, &d}) {
    if (m->algebra() != a.algebra() || m->degree() != a.degree()) {
      throw DimensionError("block matrix: blocks differ in algebra or degree");
    }
  }
  GradedMatrix out(a.algebra(), a.rows() + c.rows(), a.cols() + b.cols(), a.degree());
  auto place = [&](const GradedMatrix& m, std::size_t r0, std::size_t c0) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t col = 0; col < m.cols(); ++col) out.set(r0 + r, c0 + col, m.entry(r, col));
    }
  };
  place(a, 0, 0);
  place(b, 0, a.cols());
  place(c, a.rows(), 0);
  place(d, a.rows(), a.cols());
  return out;
}

FreeComplexWindow::FreeComplexWindow(AlgebraPtr algebra, int lo, std::vector<GradedMatrix> differentials,
                                     int twist_base, std::optional<Periodicity> periodicity)
    : algebra_(std::move(algebra)),
      lo_(lo),
      differentials_(std::move(differentials)),
      twist_base_(twist_base),
      periodicity_(periodicity) {
  if (differentials_.empty()) throw DimensionError("a window needs at least one differential");
  for (std::size_t k = 0; k < differentials_.size(); ++k) {
    const auto& m = differentials_[k];
    if (m.algebra() != algebra_) throw DimensionError("differential over a different algebra");
    if (m.degree() > 1) throw DimensionError("differentials must be linear (entry degree 0 or 1)");
    if (k > 0 && differentials_[k - 1].cols() != m.rows()) {
      throw DimensionError("consecutive differentials have incompatible shapes");
    }
  }
}

const GradedMatrix& FreeComplexWindow::d(int i) const {
  if (i < lo_ || i > hi()) throw std::out_of_range("differential index outside the window");
  return differentials_[static_cast<std::size_t>(i - lo_)];
}

std::size_t FreeComplexWindow::betti(int i) const {
  if (i == lo_ - 1) return d(lo_).rows();
  return d(i).cols();
}

std::vector<std::size_t> FreeComplexWindow::betti_numbers() const {
  std::vector<std::size_t> b;
  for (int i = lo_ - 1; i <= hi(); ++i) b.push_back(betti(i));
  return b;
}

int FreeComplexWindow::twist(int i) const {
  if (i < lo_ - 1 || i > hi()) throw std::out_of_range("twist index outside the window");
  int n = twist_base_;
  for (int k = lo_; k <= i; ++k) n += d(k).degree();
  return n;
}

bool FreeComplexWindow::is_minimal() const {
  return std::all_of(differentials_.begin(), differentials_.end(),
                     [](const GradedMatrix& m) { return m.degree() >= 1 || m.is_zero(); });
}

bool operator==(const FreeComplexWindow& a, const FreeComplexWindow& b) {
  auto per = [](const std::optional<Periodicity>& p) {
    return p ? std::make_pair(static_cast<long>(p->period), p->verified) : std::make_pair(-1L, false);
  };
  return a.algebra_ == b.algebra_ && a.lo_ == b.lo_ && a.twist_base_ == b.twist_base_ &&
         a.differentials_ == b.differentials_ && per(a.periodicity_) == per(b.periodicity_);
}

bool compose_check(const FreeComplexWindow& w) {
  for (int i = w.lo() + 1; i <= w.hi(); ++i) {
    const GradedMatrix& left = w.d(i - 1);
    const GradedMatrix& right = w.d(i);
    if (left.cols() != right.rows()) throw DimensionError("compose_check: shape mismatch");
    if (left.degree() + right.degree() > w.algebra()->cutoff()) {
      if (!w.algebra()->is_artinian()) throw DimensionError("compose_check: product degree exceeds the cutoff");
      continue;  // vanishes above the top degree
    }
    if (!(left * right).is_zero()) return false;
  }
  return true;
}

ExactnessReport graded_exactness(const FreeComplexWindow& w, int degree_bound) {
  const auto& alg = w.algebra();
  ExactnessReport rep;
  rep.exact = true;
  int checked = degree_bound;
  for (int i = w.lo(); i < w.hi(); ++i) {
    const GradedMatrix& out_map = w.d(i);
    const GradedMatrix& in_map = w.d(i + 1);
    const int top = std::min(degree_bound, alg->cutoff() - out_map.degree());
    checked = std::min(checked, top);
    for (int s = 0; s <= top; ++s) {
      ExactnessEntry e;
      e.index = i;
      e.degree = s;
      DenseMatrix k = out_map.block(s);
      e.kernel_dim = k.cols() - rank(k);
      const int s_in = s - in_map.degree();
      e.image_rank = s_in < 0 ? 0 : rank(in_map.block(s_in));
      e.exact = e.kernel_dim == e.image_rank;
      rep.exact = rep.exact && e.exact;
      rep.entries.push_back(e);
    }
  }
  rep.certified_degree_bound = checked;
  rep.full = alg->is_artinian() && checked >= alg->cutoff() - 1;
  return rep;
}

ExactnessReport graded_exactness(const FreeComplexWindow& w) { return graded_exactness(w, w.algebra()->cutoff()); }

FreeComplexWindow dual(const FreeComplexWindow& w) {
  std::vector<GradedMatrix> ds;
  const int lo = 1 - w.hi();
  for (int j = lo; j <= 1 - w.lo(); ++j) ds.push_back(w.d(1 - j).transpose());
  return FreeComplexWindow(w.algebra(), lo, std::move(ds), -w.twist(w.hi()), w.periodicity());
}

FreeComplexWindow ezd_complex(const AlgebraPtr& r, const EzdPair& pair, int half_length) {
  if (half_length < 1) throw std::invalid_argument("half_length must be positive");
  if (!verify_ezd(*r, pair.a, pair.b)) throw PreconditionError("ezd_complex needs a certified exact zero divisor pair");
  GradedMatrix a = GradedMatrix::from_elements(r, 1, {{pair.a}});
  GradedMatrix b = GradedMatrix::from_elements(r, 1, {{pair.b}});
  std::vector<GradedMatrix> ds;
  const int lo = 1 - half_length;
  for (int i = lo; i <= half_length; ++i) ds.push_back(i % 2 == 0 ? a : b);
  Periodicity per{pair.a == pair.b ? 1u : 2u, true};
  return FreeComplexWindow(r, lo, std::move(ds), 0, per);
}

GradedMatrix cokernel_presentation(const FreeComplexWindow& w, int i) {
  if (i <= w.lo() || i >= w.hi()) throw std::out_of_range("cokernel_presentation needs an interior index");
  return w.d(i);
}

std::pair<Subspace, Subspace> fitting_support(const GradedMatrix& presentation) {
  const auto& alg = presentation.algebra();
  if (presentation.degree() != 1) throw DimensionError("fitting_support needs linear entries");
  if (alg->cutoff() < 2) throw DimensionError("fitting_support needs cutoff >= 2");
  std::vector<Vector> gens;
  for (std::size_t r = 0; r < presentation.rows(); ++r) {
    for (std::size_t c = 0; c < presentation.cols(); ++c) gens.push_back(presentation.entry(r, c));
  }
  auto ideal = generated_ideal(*alg, gens);
  return {ideal[1], ideal[2]};
}

IndecomposabilityVerdict indecomposability_certificate(const FreeComplexWindow& w, int i,
                                                       const std::optional<NoEzdCertificate>& no_ezd) {
  IndecomposabilityVerdict v;
  if (i <= w.lo() || i >= w.hi()) {
    v.reason = "index is not interior";
    return v;
  }
  if (w.d(i).rows() != 2) {
    v.reason = "cokernel does not have exactly two generators";
    return v;
  }
  if (!no_ezd) {
    v.reason = "no certificate that the ring lacks exact zero divisors";
    return v;
  }
  if (!w.is_minimal() || !compose_check(w)) {
    v.reason = "window is not a minimal complex";
    return v;
  }
  auto ex = graded_exactness(w);
  auto dex = graded_exactness(dual(w));
  if (!ex.exact || !dex.exact || !ex.full || !dex.full) {
    v.reason = "window is not certified exact in every degree";
    return v;
  }
  v.indecomposable = true;
  v.certificate = no_ezd;
  v.reason = "a splitting would give cyclic totally reflexive summands R/(a) with a an exact zero divisor";
  return v;
}

}  // namespace trm
