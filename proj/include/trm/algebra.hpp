#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "trm/exactla.hpp"
#include "trm/graph.hpp"

namespace trm {

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;
class AlgebraElement;

/// A standard graded commutative k-algebra truncated at degree `cutoff`:
/// explicit bases of R_0..R_D and the structure constants of every product
/// R_d1 x R_d2 -> R_(d1+d2) with d1 + d2 <= D.
class GradedAlgebra : public std::enable_shared_from_this<GradedAlgebra> {
 public:
  /// product(d1, i, d2, j) must return the coordinates of e_i * e_j; it is
  /// only called with d1 <= d2.
  using ProductFn = std::function<Vector(int d1, std::size_t i, int d2, std::size_t j)>;
  /// tables[d1][d2] for d1 <= d2, d1 + d2 <= cutoff, flattened as i * dim(d2) + j.
  using Tables = std::vector<std::vector<std::vector<Vector>>>;

  static AlgebraPtr create(Field field, int cutoff, std::vector<std::vector<std::string>> labels,
                           const ProductFn& product);
  static AlgebraPtr from_tables(Field field, int cutoff, std::vector<std::vector<std::string>> labels,
                                Tables tables);

  const Field& field() const { return field_; }
  int cutoff() const { return cutoff_; }
  std::size_t dim(int d) const;
  std::vector<std::size_t> hilbert() const;
  std::size_t total_dim() const;
  const std::vector<std::string>& labels(int d) const { return labels_.at(static_cast<std::size_t>(d)); }
  const Tables& tables() const { return tables_; }

  /// True when R vanishes in degree `cutoff`, hence in every higher degree.
  bool is_artinian() const { return dim(cutoff_) == 0; }

  const Vector& basis_product(int d1, std::size_t i, int d2, std::size_t j) const;
  Vector multiply(int d1, const Vector& a, int d2, const Vector& b) const;
  /// Matrix of v -> a*v from R_d to R_(d+da).
  DenseMatrix multiplication_map(int da, const Vector& a, int d) const;

  AlgebraElement element(int d, Vector coords) const;
  AlgebraElement basis_element(int d, std::size_t i) const;
  AlgebraElement one() const;
  AlgebraElement zero(int d) const;

  /// Exhaustive check of unit, commutativity and associativity on basis
  /// elements whose total degree fits under the cutoff.
  bool check_structure() const;

 private:
  GradedAlgebra(Field field, int cutoff, std::vector<std::vector<std::string>> labels)
      : field_(field), cutoff_(cutoff), labels_(std::move(labels)) {}

  Field field_;
  int cutoff_;
  std::vector<std::vector<std::string>> labels_;
  Tables tables_;
};

/// Homogeneous element of a GradedAlgebra.
class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr algebra, int degree, Vector coords);

  const AlgebraPtr& algebra() const { return algebra_; }
  int degree() const { return degree_; }
  const Vector& coords() const { return coords_; }
  bool is_zero() const { return trm::is_zero(coords_); }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  void require_compatible(const AlgebraElement& o) const;
  AlgebraPtr algebra_;
  int degree_;
  Vector coords_;
};

/// Product through the structure tensors. Throws DimensionError when the
/// total degree exceeds the cutoff or the algebras differ.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

std::vector<std::size_t> hilbert(const GradedAlgebra& a);

struct Term {
  Scalar coefficient;
  std::vector<int> exponents;
};

/// Polynomial in a fixed number of variables, as a list of terms.
struct Polynomial {
  std::vector<Term> terms;

  static Polynomial monomial(const Scalar& c, std::vector<int> exponents);
  /// -1 for the zero polynomial; throws when not homogeneous.
  int homogeneous_degree() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a, const Polynomial& b);
};

/// Exponent vectors of total degree d in n variables, lexicographically
/// descending (x1^d first).
std::vector<std::vector<int>> monomials_of_degree(std::size_t nvars, int d);
std::string monomial_label(const std::vector<std::string>& names, const std::vector<int>& exponents);

/// R_Gamma = k[X_v] / (X_i X_j for non-edges, X_i X_j X_k for distinct i,j,k),
/// truncated at `cutoff`. Degree-d basis: pure powers and x_i^a x_j^b over edges.
AlgebraPtr stanley_reisner(const Graph& g, int cutoff, const Field& field);

/// k[names] modulo the ideal generated by homogeneous `relations`, truncated
/// at `cutoff`. Each graded piece keeps the monomials that are not pivots of
/// the trailing-pivot echelon form of the relation span.
AlgebraPtr algebra_from_relations(const Field& field, const std::vector<std::string>& names,
                                  const std::vector<Polynomial>& relations, int cutoff);

/// The projection A -> A/(l) for a nonzero linear form l, with the section
/// that maps each quotient basis vector to its representative in A.
struct QuotientMap {
  AlgebraPtr source;
  AlgebraPtr target;
  Vector form;
  std::vector<DenseMatrix> projection;            // per degree, dim target x dim source
  std::vector<std::vector<std::size_t>> section;  // per degree, kept source basis indices

  Vector project(int d, const Vector& v) const;
  Vector lift(int d, const Vector& v) const;
  AlgebraElement project(const AlgebraElement& a) const;
  AlgebraElement lift(const AlgebraElement& a) const;
};

QuotientMap quotient_by_linear(const AlgebraPtr& a, const Vector& form);

}  // namespace trm
