#include "apolar/scalar.hpp"

namespace apolar {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; p prime, a != 0
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p),
               new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t(1) << 62) || !is_prime_u64(p))
    throw Error("bad-field", "modulus must be a prime below 2^62");
  Field f;
  f.p_ = p;
  return f;
}

std::uint64_t Field::modulus() const {
  if (is_rational()) throw Error("bad-field", "rational field has no modulus");
  return p_;
}

std::string Field::str() const {
  return is_rational() ? "Q" : "p=" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) {
  Scalar s;
  s.f_ = f;
  return s;
}

Scalar Scalar::one(const Field& f) {
  Scalar s;
  s.f_ = f;
  if (f.is_rational())
    s.q_ = 1;
  else
    s.r_ = 1 % f.modulus();
  return s;
}

Scalar Scalar::integer(long v, const Field& f) {
  Scalar s;
  s.f_ = f;
  if (f.is_rational()) {
    s.q_ = v;
  } else {
    std::uint64_t p = f.modulus();
    long m = v % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error("bad-coefficient", "zero denominator");
  Scalar s;
  s.q_ = mpq_class(num, den);
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::from_mpz(const mpz_class& v, const Field& f) {
  Scalar s;
  s.f_ = f;
  if (f.is_rational()) {
    s.q_ = v;
  } else {
    mpz_class m = v % static_cast<unsigned long>(f.modulus());
    if (m < 0) m += static_cast<unsigned long>(f.modulus());
    s.r_ = m.get_ui();
  }
  return s;
}

Scalar Scalar::from_mpq(const mpq_class& v) {
  Scalar s;
  s.q_ = v;
  s.q_.canonicalize();
  return s;
}

bool Scalar::is_zero() const {
  return f_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return f_.is_rational() ? q_ == 1 : r_ == 1 % f_.modulus();
}

const mpq_class& Scalar::rat() const {
  if (!f_.is_rational())
    throw Error("bad-field", "residue scalar has no rational payload");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (f_.is_rational())
    throw Error("bad-field", "rational scalar has no residue payload");
  return r_;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (f_ != o.f_)
    throw FieldMismatchError("operands live in " + f_.str() + " and " +
                             o.f_.str());
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (f_.is_rational())
    s.q_ = -q_;
  else if (r_ != 0)
    s.r_ = f_.modulus() - r_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division-by-zero", "inverse of zero");
  Scalar s(*this);
  if (f_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = mod_inv(r_, f_.modulus());
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (f_.is_rational())
    q_ += o.q_;
  else
    r_ = mod_add(r_, o.r_, f_.modulus());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (f_.is_rational())
    q_ -= o.q_;
  else
    r_ = mod_sub(r_, o.r_, f_.modulus());
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (f_.is_rational())
    q_ *= o.q_;
  else
    r_ = mod_mul(r_, o.r_, f_.modulus());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  if (o.is_zero()) throw Error("division-by-zero", "division by zero");
  if (f_.is_rational())
    q_ /= o.q_;
  else
    r_ = mod_mul(r_, mod_inv(o.r_, f_.modulus()), f_.modulus());
  return *this;
}

void Scalar::submul(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  *this -= a * b;
}

bool Scalar::operator==(const Scalar& o) const {
  if (f_ != o.f_) return false;
  return f_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  return f_.is_rational() ? q_.get_str() : std::to_string(r_);
}

}  // namespace apolar
