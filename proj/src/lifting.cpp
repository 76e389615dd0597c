#include "trm/lifting.hpp"

#include <numeric>
#include <stdexcept>

namespace trm {

GradedMatrix lift_matrix(const GradedMatrix& d, const QuotientMap& q) {
  if (!q.source || !q.target) throw std::invalid_argument("lift_matrix: quotient data missing");
  if (d.algebra() != q.target) throw DimensionError("lift_matrix: matrix is not over the quotient algebra");
  GradedMatrix out(q.source, d.rows(), d.cols(), d.degree());
  for (std::size_t r = 0; r < d.rows(); ++r) {
    for (std::size_t c = 0; c < d.cols(); ++c) out.set(r, c, q.lift(d.degree(), d.entry(r, c)));
  }
  return out;
}

bool is_regular_form(const GradedAlgebra& s, const Vector& x) {
  for (int d = 0; d + 1 <= s.cutoff(); ++d) {
    if (rank(s.multiplication_map(1, x, d)) != s.dim(d)) return false;
  }
  return true;
}

GradedMatrix correction_matrix(const GradedMatrix& left, const GradedMatrix& right, const Vector& x) {
  GradedMatrix prod = left * right;
  const auto& s = prod.algebra();
  const int deg = prod.degree() - 1;
  if (deg < 0) throw std::domain_error("correction_matrix: product has degree 0");
  DenseMatrix mult = s->multiplication_map(1, x, deg);
  if (rank(mult) != s->dim(deg)) throw std::domain_error("correction_matrix: x is not a nonzerodivisor here");
  GradedMatrix m(s, prod.rows(), prod.cols(), deg);
  for (std::size_t r = 0; r < prod.rows(); ++r) {
    for (std::size_t c = 0; c < prod.cols(); ++c) {
      auto sol = solve(mult, prod.entry(r, c));
      if (!sol) throw std::domain_error("correction_matrix: product is not divisible by x");
      m.set(r, c, std::move(*sol));
    }
  }
  return m;
}

GradedMatrix assemble_epsilon(const GradedMatrix& lifted_i, const GradedMatrix& lifted_prev,
                              const GradedMatrix& m_i, const Vector& x, int i) {
  const bool odd = (i % 2) != 0;
  GradedMatrix xi = GradedMatrix::scalar_identity(lifted_i.algebra(), lifted_i.rows(), 1, x);
  if (odd) return block_matrix(lifted_i, xi.negated(), m_i.negated(), lifted_prev);
  return block_matrix(lifted_i, xi, m_i, lifted_prev);
}

LiftStep lift_complex(const FreeComplexWindow& w, const QuotientMap& q, const LiftOptions& opts) {
  if (q.target != w.algebra()) throw DimensionError("lift_complex: window is not over the quotient algebra");
  if (w.length() < 2) throw DimensionError("lift_complex: need at least two differentials");
  for (const auto& d : w.differentials()) {
    if (d.degree() != 1) throw DimensionError("lift_complex: differentials must be linear");
  }
  if (opts.check_source) {
    if (!compose_check(w)) throw PreconditionError("lift_complex: source is not a complex");
    if (!graded_exactness(w).exact || !graded_exactness(dual(w)).exact) {
      throw PreconditionError("lift_complex: source is not certified exact");
    }
  }
  const AlgebraPtr& s = q.source;
  const Vector& x = q.form;
  if (!is_regular_form(*s, x)) throw std::domain_error("lift_complex: x is not regular up to the cutoff");

  const int lo = w.lo();
  const int hi = w.hi();
  std::vector<GradedMatrix> lifted;
  for (int i = lo; i <= hi; ++i) lifted.push_back(lift_matrix(w.d(i), q));
  auto L = [&](int i) -> const GradedMatrix& { return lifted[static_cast<std::size_t>(i - lo)]; };

  bool reduces = true;
  for (int i = lo; i <= hi && reduces; ++i) {
    const GradedMatrix& li = L(i);
    for (std::size_t r = 0; r < li.rows() && reduces; ++r) {
      for (std::size_t c = 0; c < li.cols(); ++c) {
        if (q.project(1, li.entry(r, c)) != w.d(i).entry(r, c)) {
          reduces = false;
          break;
        }
      }
    }
  }

  std::vector<GradedMatrix> corrections;
  for (int i = lo + 1; i <= hi; ++i) corrections.push_back(correction_matrix(L(i - 1), L(i), x));
  auto M = [&](int i) -> const GradedMatrix& { return corrections[static_cast<std::size_t>(i - lo - 1)]; };

  bool cancels = true;
  if (s->cutoff() >= 3) {
    for (int i = lo + 1; i < hi; ++i) {
      // M_i d_(i+1) - d_(i-1) M_(i+1), then times x.
      GradedMatrix diff = M(i) * L(i + 1) - L(i - 1) * M(i + 1);
      GradedMatrix xi = GradedMatrix::scalar_identity(s, diff.rows(), 1, x);
      if (!(xi * diff).is_zero()) cancels = false;
    }
  }

  std::vector<GradedMatrix> eps;
  for (int i = lo + 1; i <= hi; ++i) eps.push_back(assemble_epsilon(L(i), L(i - 1), M(i), x, i));

  std::optional<Periodicity> per;
  if (w.periodicity()) {
    const std::size_t p = std::lcm(w.periodicity()->period, std::size_t{2});
    bool repeats = w.periodicity()->verified;
    for (std::size_t k = 0; k + p < eps.size(); ++k) repeats = repeats && eps[k] == eps[k + p];
    per = Periodicity{p, repeats};
  }
  FreeComplexWindow result(s, lo + 1, std::move(eps), w.twist(lo), per);
  return LiftStep{w.algebra(), s, x, lo, std::move(lifted), std::move(corrections), reduces, cancels,
                  std::move(result)};
}

FreeComplexWindow lift_through_sequence(const FreeComplexWindow& w, const std::vector<QuotientMap>& chain,
                                        const LiftOptions& opts) {
  FreeComplexWindow cur = w;
  for (const auto& q : chain) cur = lift_complex(cur, q, opts).result;
  return cur;
}

}  // namespace trm
