#include "trm/exactla/scalar.hpp"

#include <sstream>

namespace trm {

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1U) result = (result * b) % mod;
    b = (b * b) % mod;
    exp >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * x) % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 32U)) throw std::invalid_argument("prime must be below 2^32");
  if (!is_prime_number(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return Field(Kind::Prime, p);
}

Field Field::rationals() { return Field(Kind::Rational, 0); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (kind_ == Kind::Rational) return Scalar(Rational(v));
  auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return Scalar(Scalar::Residue{static_cast<std::uint64_t>(r), p_});
}

Scalar Field::from_rational(const Rational& q) const {
  if (kind_ == Kind::Rational) return Scalar(q);
  using boost::multiprecision::mpz_int;
  mpz_int num = boost::multiprecision::numerator(q);
  mpz_int den = boost::multiprecision::denominator(q);
  mpz_int pm = p_;
  mpz_int n = num % pm;
  if (n < 0) n += pm;
  mpz_int d = den % pm;
  if (d == 0) throw std::domain_error("denominator vanishes modulo p");
  Scalar sn(Scalar::Residue{n.convert_to<std::uint64_t>(), p_});
  Scalar sd(Scalar::Residue{d.convert_to<std::uint64_t>(), p_});
  return sn / sd;
}

Scalar Field::parse(const std::string& text) const {
  Rational q;
  try {
    q = Rational(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed scalar '" + text + "'");
  }
  return from_rational(q);
}

Scalar Field::random(std::mt19937_64& rng) const {
  if (kind_ == Kind::Rational) {
    std::uniform_int_distribution<std::int64_t> dist(-kRationalSampleRange, kRationalSampleRange);
    return from_int(dist(rng));
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, p_ - 1);
  return Scalar(Scalar::Residue{dist(rng), p_});
}

std::string Field::describe() const {
  if (kind_ == Kind::Rational) return "QQ";
  return "GF(" + std::to_string(p_) + ")";
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    if (r->modulus == 0) throw std::logic_error("scalar has no field");
    return Field(Field::Kind::Prime, r->modulus);
  }
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 0;
  return std::get<Rational>(rep_) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 1;
  return std::get<Rational>(rep_) == 1;
}

void Scalar::require_same_field(const Scalar& other) const {
  if (rep_.index() != other.rep_.index()) throw DimensionError("scalars from different fields");
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    if (r->modulus != std::get<Residue>(other.rep_).modulus || r->modulus == 0) {
      throw DimensionError("scalars from different prime fields");
    }
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    return Scalar(Residue{mod_pow(r->value, r->modulus - 2, r->modulus), r->modulus});
  }
  return Scalar(Rational(1) / std::get<Rational>(rep_));
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (auto* r = std::get_if<Residue>(&rep_)) {
    r->value += std::get<Residue>(other.rep_).value;
    if (r->value >= r->modulus) r->value -= r->modulus;
  } else {
    std::get<Rational>(rep_) += std::get<Rational>(other.rep_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_field(other);
  if (auto* r = std::get_if<Residue>(&rep_)) {
    std::uint64_t o = std::get<Residue>(other.rep_).value;
    r->value = r->value >= o ? r->value - o : r->value + r->modulus - o;
  } else {
    std::get<Rational>(rep_) -= std::get<Rational>(other.rep_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (auto* r = std::get_if<Residue>(&rep_)) {
    r->value = (r->value * std::get<Residue>(other.rep_).value) % r->modulus;
  } else {
    std::get<Rational>(rep_) *= std::get<Rational>(other.rep_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  return Scalar(Rational(-std::get<Rational>(rep_)));
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (const auto* r = std::get_if<Scalar::Residue>(&a.rep_)) {
    return r->value == std::get<Scalar::Residue>(b.rep_).value;
  }
  return std::get<Rational>(a.rep_) == std::get<Rational>(b.rep_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return std::to_string(r->value);
  std::ostringstream out;
  out << std::get<Rational>(rep_);
  return out.str();
}

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = f.one();
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Vector& axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (y.size() != x.size()) throw DimensionError("axpy: length mismatch");
  if (a.is_zero()) return y;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
  return y;
}

Vector scaled(const Vector& v, const Scalar& a) {
  Vector out = v;
  for (auto& s : out) s *= a;
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum: length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference: length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector negated(const Vector& v) {
  Vector out = v;
  for (auto& s : out) s = -s;
  return out;
}

}  // namespace trm
