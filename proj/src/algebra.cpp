#include "trm/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace trm {

std::size_t GradedAlgebra::dim(int d) const {
  if (d < 0 || d > cutoff_) return 0;
  return labels_[static_cast<std::size_t>(d)].size();
}

std::vector<std::size_t> GradedAlgebra::hilbert() const {
  std::vector<std::size_t> h;
  for (int d = 0; d <= cutoff_; ++d) h.push_back(dim(d));
  return h;
}

std::size_t GradedAlgebra::total_dim() const {
  std::size_t total = 0;
  for (int d = 0; d <= cutoff_; ++d) total += dim(d);
  return total;
}

AlgebraPtr GradedAlgebra::create(Field field, int cutoff, std::vector<std::vector<std::string>> labels,
                                 const ProductFn& product) {
  if (cutoff < 0 || labels.size() != static_cast<std::size_t>(cutoff) + 1) {
    throw DimensionError("algebra labels must cover degrees 0..cutoff");
  }
  if (labels[0].size() != 1) throw DimensionError("degree-0 component must be one-dimensional");
  std::shared_ptr<GradedAlgebra> alg(new GradedAlgebra(field, cutoff, std::move(labels)));
  alg->tables_.assign(static_cast<std::size_t>(cutoff) + 1, {});
  for (int d1 = 0; d1 <= cutoff; ++d1) {
    auto& row = alg->tables_[static_cast<std::size_t>(d1)];
    row.assign(static_cast<std::size_t>(cutoff) + 1, {});
    for (int d2 = d1; d1 + d2 <= cutoff; ++d2) {
      auto& block = row[static_cast<std::size_t>(d2)];
      const std::size_t n1 = alg->dim(d1);
      const std::size_t n2 = alg->dim(d2);
      block.reserve(n1 * n2);
      for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j) {
          Vector v = product(d1, i, d2, j);
          if (v.size() != alg->dim(d1 + d2)) throw DimensionError("product has wrong length");
          block.push_back(std::move(v));
        }
      }
    }
  }
  return alg;
}

AlgebraPtr GradedAlgebra::from_tables(Field field, int cutoff, std::vector<std::vector<std::string>> labels,
                                      Tables tables) {
  if (cutoff < 0 || labels.size() != static_cast<std::size_t>(cutoff) + 1) {
    throw DimensionError("algebra labels must cover degrees 0..cutoff");
  }
  if (labels[0].size() != 1) throw DimensionError("degree-0 component must be one-dimensional");
  std::shared_ptr<GradedAlgebra> alg(new GradedAlgebra(field, cutoff, std::move(labels)));
  if (tables.size() != static_cast<std::size_t>(cutoff) + 1) throw DimensionError("table rows do not match cutoff");
  for (int d1 = 0; d1 <= cutoff; ++d1) {
    auto& row = tables[static_cast<std::size_t>(d1)];
    if (row.size() != static_cast<std::size_t>(cutoff) + 1) throw DimensionError("table columns do not match cutoff");
    for (int d2 = d1; d1 + d2 <= cutoff; ++d2) {
      const auto& block = row[static_cast<std::size_t>(d2)];
      if (block.size() != alg->dim(d1) * alg->dim(d2)) throw DimensionError("product block has wrong size");
      for (const auto& v : block) {
        if (v.size() != alg->dim(d1 + d2)) throw DimensionError("product has wrong length");
      }
    }
  }
  alg->tables_ = std::move(tables);
  return alg;
}

const Vector& GradedAlgebra::basis_product(int d1, std::size_t i, int d2, std::size_t j) const {
  if (d1 > d2) {
    std::swap(d1, d2);
    std::swap(i, j);
  }
  if (d1 < 0 || d1 + d2 > cutoff_) throw DimensionError("product degree exceeds the cutoff");
  return tables_[static_cast<std::size_t>(d1)][static_cast<std::size_t>(d2)].at(i * dim(d2) + j);
}

Vector GradedAlgebra::multiply(int d1, const Vector& a, int d2, const Vector& b) const {
  if (a.size() != dim(d1) || b.size() != dim(d2)) throw DimensionError("multiply: coordinate length mismatch");
  if (d1 + d2 > cutoff_) throw DimensionError("product degree exceeds the cutoff");
  Vector out = zero_vector(field_, dim(d1 + d2));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      axpy(out, a[i] * b[j], basis_product(d1, i, d2, j));
    }
  }
  return out;
}

DenseMatrix GradedAlgebra::multiplication_map(int da, const Vector& a, int d) const {
  if (a.size() != dim(da)) throw DimensionError("multiplication_map: coordinate length mismatch");
  if (da + d > cutoff_) throw DimensionError("multiplication_map: degree exceeds the cutoff");
  const std::size_t out_dim = dim(da + d);
  DenseMatrix m(field_, out_dim, dim(d));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t t = 0; t < dim(d); ++t) {
      const Vector& p = basis_product(da, i, d, t);
      for (std::size_t r = 0; r < out_dim; ++r) {
        if (!p[r].is_zero()) m(r, t) += a[i] * p[r];
      }
    }
  }
  return m;
}

AlgebraElement GradedAlgebra::element(int d, Vector coords) const {
  return AlgebraElement(shared_from_this(), d, std::move(coords));
}

AlgebraElement GradedAlgebra::basis_element(int d, std::size_t i) const {
  return element(d, unit_vector(field_, dim(d), i));
}

AlgebraElement GradedAlgebra::one() const { return basis_element(0, 0); }

AlgebraElement GradedAlgebra::zero(int d) const { return element(d, zero_vector(field_, dim(d))); }

bool GradedAlgebra::check_structure() const {
  for (int d = 0; d <= cutoff_; ++d) {
    for (std::size_t j = 0; j < dim(d); ++j) {
      if (basis_product(0, 0, d, j) != unit_vector(field_, dim(d), j)) return false;
    }
  }
  for (int d = 1; 2 * d <= cutoff_; ++d) {
    for (std::size_t i = 0; i < dim(d); ++i) {
      for (std::size_t j = i + 1; j < dim(d); ++j) {
        if (basis_product(d, i, d, j) != basis_product(d, j, d, i)) return false;
      }
    }
  }
  for (int d1 = 1; d1 <= cutoff_; ++d1) {
    for (int d2 = 1; d1 + d2 <= cutoff_; ++d2) {
      for (int d3 = 1; d1 + d2 + d3 <= cutoff_; ++d3) {
        for (std::size_t i = 0; i < dim(d1); ++i) {
          for (std::size_t j = 0; j < dim(d2); ++j) {
            const Vector& ij = basis_product(d1, i, d2, j);
            for (std::size_t k = 0; k < dim(d3); ++k) {
              Vector left = multiply(d1 + d2, ij, d3, unit_vector(field_, dim(d3), k));
              Vector right = multiply(d1, unit_vector(field_, dim(d1), i), d2 + d3, basis_product(d2, j, d3, k));
              if (left != right) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, int degree, Vector coords)
    : algebra_(std::move(algebra)), degree_(degree), coords_(std::move(coords)) {
  if (!algebra_) throw std::invalid_argument("element without algebra");
  if (coords_.size() != algebra_->dim(degree_)) throw DimensionError("element coordinate length mismatch");
}

void AlgebraElement::require_compatible(const AlgebraElement& o) const {
  if (algebra_ != o.algebra_) throw DimensionError("elements of different algebras");
  if (degree_ != o.degree_) throw DimensionError("elements of different degrees");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_compatible(o);
  coords_ = coords_ + o.coords_;
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_compatible(o);
  coords_ = coords_ - o.coords_;
  return *this;
}

AlgebraElement operator*(const Scalar& s, const AlgebraElement& a) {
  return AlgebraElement(a.algebra_, a.degree_, scaled(a.coords_, s));
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.algebra_ == b.algebra_ && a.degree_ == b.degree_ && a.coords_ == b.coords_;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.algebra() != b.algebra()) throw DimensionError("elements of different algebras");
  const auto& alg = a.algebra();
  return AlgebraElement(alg, a.degree() + b.degree(), alg->multiply(a.degree(), a.coords(), b.degree(), b.coords()));
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

std::vector<std::size_t> hilbert(const GradedAlgebra& a) { return a.hilbert(); }

Polynomial Polynomial::monomial(const Scalar& c, std::vector<int> exponents) {
  return Polynomial{{Term{c, std::move(exponents)}}};
}

int Polynomial::homogeneous_degree() const {
  int deg = -1;
  for (const auto& t : terms) {
    if (t.coefficient.is_zero()) continue;
    int d = 0;
    for (int e : t.exponents) d += e;
    if (deg == -1) deg = d;
    if (d != deg) throw std::invalid_argument("relation is not homogeneous");
  }
  return deg;
}

Polynomial operator+(Polynomial a, const Polynomial& b) {
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  return a;
}

Polynomial operator-(Polynomial a, const Polynomial& b) {
  for (const auto& t : b.terms) a.terms.push_back(Term{-t.coefficient, t.exponents});
  return a;
}

std::vector<std::vector<int>> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<std::vector<int>> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == nvars) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[pos] = e;
      rec(pos + 1, left - e);
    }
  };
  rec(0, d);
  return out;
}

std::string monomial_label(const std::vector<std::string>& names, const std::vector<int>& exponents) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << names.at(i);
    if (exponents[i] > 1) out << '^' << exponents[i];
  }
  return first ? "1" : out.str();
}

namespace {

// A graded piece k^N modulo a span of relations: kept coordinates and the
// projection onto them.
struct DegreeQuotient {
  std::vector<std::size_t> kept;
  DenseMatrix projection;
};

DegreeQuotient reduce_degree(const Field& f, std::size_t ambient, const std::vector<Vector>& relations) {
  Echelon e = rref(DenseMatrix::from_rows(f, ambient, relations), PivotOrder::Trailing);
  std::vector<int> pivot_row(ambient, -1);
  for (std::size_t r = 0; r < e.rank(); ++r) pivot_row[e.pivots[r]] = static_cast<int>(r);
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < ambient; ++c) {
    if (pivot_row[c] < 0) kept.push_back(c);
  }
  DenseMatrix proj(f, kept.size(), ambient);
  for (std::size_t k = 0; k < kept.size(); ++k) proj(k, kept[k]) = f.one();
  for (std::size_t c = 0; c < ambient; ++c) {
    if (pivot_row[c] < 0) continue;
    auto r = static_cast<std::size_t>(pivot_row[c]);
    for (std::size_t k = 0; k < kept.size(); ++k) proj(k, c) = -e.reduced(r, kept[k]);
  }
  return DegreeQuotient{std::move(kept), std::move(proj)};
}

using MonomialIndex = std::map<std::vector<int>, std::size_t>;

MonomialIndex index_monomials(const std::vector<std::vector<int>>& monos) {
  MonomialIndex idx;
  for (std::size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], i);
  return idx;
}

std::vector<int> add_exponents(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

}  // namespace

AlgebraPtr stanley_reisner(const Graph& g, int cutoff, const Field& field) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::vector<int>>> monos(static_cast<std::size_t>(cutoff) + 1);
  for (int d = 0; d <= cutoff; ++d) {
    auto& list = monos[static_cast<std::size_t>(d)];
    if (d == 0) {
      list.emplace_back(n, 0);
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> m(n, 0);
      m[i] = d;
      list.push_back(m);
    }
    for (const auto& [i, j] : g.edges()) {
      for (int a = d - 1; a >= 1; --a) {
        std::vector<int> m(n, 0);
        m[i] = a;
        m[j] = d - a;
        list.push_back(m);
      }
    }
    std::sort(list.begin(), list.end(), std::greater<>());
  }
  std::vector<MonomialIndex> index;
  std::vector<std::vector<std::string>> labels;
  for (const auto& list : monos) {
    index.push_back(index_monomials(list));
    std::vector<std::string> l;
    for (const auto& m : list) l.push_back(monomial_label(g.labels(), m));
    labels.push_back(std::move(l));
  }
  auto product = [&](int d1, std::size_t i, int d2, std::size_t j) {
    const auto d = static_cast<std::size_t>(d1 + d2);
    Vector out = zero_vector(field, monos[d].size());
    auto sum = add_exponents(monos[static_cast<std::size_t>(d1)][i], monos[static_cast<std::size_t>(d2)][j]);
    auto it = index[d].find(sum);
    if (it != index[d].end()) out[it->second] = field.one();
    return out;
  };
  return GradedAlgebra::create(field, cutoff, std::move(labels), product);
}

AlgebraPtr algebra_from_relations(const Field& field, const std::vector<std::string>& names,
                                  const std::vector<Polynomial>& relations, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
  const std::size_t n = names.size();
  std::vector<std::pair<int, const Polynomial*>> rels;
  for (const auto& r : relations) {
    for (const auto& t : r.terms) {
      if (t.exponents.size() != n) throw DimensionError("relation term has wrong number of exponents");
    }
    int deg = r.homogeneous_degree();
    if (deg == -1) continue;
    if (deg == 0) throw std::invalid_argument("relation of degree 0 makes the algebra trivial");
    if (deg > cutoff) continue;
    rels.emplace_back(deg, &r);
  }

  std::vector<std::vector<std::vector<int>>> monos;
  std::vector<MonomialIndex> index;
  std::vector<DegreeQuotient> quotients;
  std::vector<std::vector<std::string>> labels;
  for (int d = 0; d <= cutoff; ++d) {
    monos.push_back(monomials_of_degree(n, d));
    index.push_back(index_monomials(monos.back()));
    const auto& cur = monos.back();
    std::vector<Vector> rows;
    for (const auto& [deg, rel] : rels) {
      if (deg > d) continue;
      for (const auto& m : monomials_of_degree(n, d - deg)) {
        Vector row = zero_vector(field, cur.size());
        for (const auto& t : rel->terms) row[index.back().at(add_exponents(t.exponents, m))] += t.coefficient;
        rows.push_back(std::move(row));
      }
    }
    quotients.push_back(reduce_degree(field, cur.size(), rows));
    std::vector<std::string> l;
    for (std::size_t k : quotients.back().kept) l.push_back(monomial_label(names, cur[k]));
    labels.push_back(std::move(l));
  }
  auto product = [&](int d1, std::size_t i, int d2, std::size_t j) {
    const auto u1 = static_cast<std::size_t>(d1);
    const auto u2 = static_cast<std::size_t>(d2);
    const auto d = static_cast<std::size_t>(d1 + d2);
    auto sum = add_exponents(monos[u1][quotients[u1].kept[i]], monos[u2][quotients[u2].kept[j]]);
    return quotients[d].projection.column(index[d].at(sum));
  };
  return GradedAlgebra::create(field, cutoff, std::move(labels), product);
}

Vector QuotientMap::project(int d, const Vector& v) const {
  return projection.at(static_cast<std::size_t>(d)).apply(v);
}

Vector QuotientMap::lift(int d, const Vector& v) const {
  const auto& kept = section.at(static_cast<std::size_t>(d));
  if (v.size() != kept.size()) throw DimensionError("lift: coordinate length mismatch");
  Vector out = zero_vector(source->field(), source->dim(d));
  for (std::size_t k = 0; k < kept.size(); ++k) out[kept[k]] = v[k];
  return out;
}

AlgebraElement QuotientMap::project(const AlgebraElement& a) const {
  if (a.algebra() != source) throw DimensionError("project: element is not in the source algebra");
  return target->element(a.degree(), project(a.degree(), a.coords()));
}

AlgebraElement QuotientMap::lift(const AlgebraElement& a) const {
  if (a.algebra() != target) throw DimensionError("lift: element is not in the target algebra");
  return source->element(a.degree(), lift(a.degree(), a.coords()));
}

QuotientMap quotient_by_linear(const AlgebraPtr& a, const Vector& form) {
  if (form.size() != a->dim(1)) throw DimensionError("linear form has wrong length");
  if (is_zero(form)) throw std::invalid_argument("cannot quotient by the zero form");
  const Field& f = a->field();
  QuotientMap q;
  q.source = a;
  q.form = form;
  std::vector<DegreeQuotient> pieces;
  std::vector<std::vector<std::string>> labels;
  for (int d = 0; d <= a->cutoff(); ++d) {
    std::vector<Vector> rows;
    for (std::size_t t = 0; t < a->dim(d - 1); ++t) {
      rows.push_back(a->multiply(1, form, d - 1, unit_vector(f, a->dim(d - 1), t)));
    }
    pieces.push_back(reduce_degree(f, a->dim(d), rows));
    std::vector<std::string> l;
    for (std::size_t k : pieces.back().kept) l.push_back(a->labels(d)[k]);
    labels.push_back(std::move(l));
  }
  auto product = [&](int d1, std::size_t i, int d2, std::size_t j) {
    const auto& p = a->basis_product(d1, pieces[static_cast<std::size_t>(d1)].kept[i], d2,
                                     pieces[static_cast<std::size_t>(d2)].kept[j]);
    return pieces[static_cast<std::size_t>(d1 + d2)].projection.apply(p);
  };
  q.target = GradedAlgebra::create(f, a->cutoff(), std::move(labels), product);
  for (auto& piece : pieces) {
    q.section.push_back(piece.kept);
    q.projection.push_back(std::move(piece.projection));
  }
  return q;
}

}  // namespace trm
