#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace trm {

using Rational = boost::multiprecision::mpq_rational;

/// Raised when two objects that must share a field, a shape or an ambient
/// dimension do not.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Scalar;

/// The base field k. Either GF(p) for a prime p < 2^32, or the rationals.
class Field {
 public:
  enum class Kind { Prime, Rational };

  static constexpr std::uint64_t kDefaultPrime = 1073741789ULL;

  static Field prime(std::uint64_t p = kDefaultPrime);
  static Field rationals();

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_rational(const Rational& q) const;
  Scalar parse(const std::string& text) const;

  /// Uniform over GF(p); for the rationals, a uniform integer in
  /// [-kRationalSampleRange, kRationalSampleRange].
  Scalar random(std::mt19937_64& rng) const;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

  static constexpr std::int64_t kRationalSampleRange = 1000;

 private:
  friend class Scalar;
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

bool is_prime_number(std::uint64_t n);

/// An element of a Field. GF(p) residues are kept canonical in [0, p).
class Scalar {
 public:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };

  /// A default-constructed scalar has no field; it must be assigned before
  /// use in arithmetic.
  Scalar() = default;
  explicit Scalar(Residue r) : rep_(r) {}
  explicit Scalar(Rational q) : rep_(std::move(q)) {}

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Residues print as their canonical representative, rationals as "a" or "a/b".
  std::string to_string() const;

  bool is_residue() const { return std::holds_alternative<Residue>(rep_); }
  const Residue& residue() const { return std::get<Residue>(rep_); }
  const Rational& rational() const { return std::get<Rational>(rep_); }

 private:
  void require_same_field(const Scalar& other) const;
  std::variant<Residue, Rational> rep_;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector& axpy(Vector& y, const Scalar& a, const Vector& x);  // y += a*x
Vector scaled(const Vector& v, const Scalar& a);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector negated(const Vector& v);

}  // namespace trm
