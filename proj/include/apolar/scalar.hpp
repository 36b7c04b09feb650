#ifndef APOLAR_SCALAR_HPP
#define APOLAR_SCALAR_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "apolar/errors.hpp"

namespace apolar {

/// Field descriptor: the rationals, or a prime field F_p.
class Field {
 public:
  Field() : p_(0) {}

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  std::uint64_t modulus() const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  std::string str() const;

 private:
  std::uint64_t p_;  // 0 = rationals
};

/// Exact field element: a reduced rational with positive denominator, or a
/// residue in [0, p). No floating point anywhere.
class Scalar {
 public:
  Scalar() : f_(Field::rationals()), q_(0) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar integer(long v, const Field& f = Field::rationals());
  static Scalar rational(long num, long den);
  static Scalar from_mpz(const mpz_class& v, const Field& f);
  static Scalar from_mpq(const mpq_class& v);

  const Field& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational payload; only valid over the rationals.
  const mpq_class& rat() const;
  /// Residue payload; only valid over a prime field.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// this -= a*b, with a fast path when either factor is zero.
  void submul(const Scalar& a, const Scalar& b);

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void require_same_field(const Scalar& o) const;

  Field f_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

}  // namespace apolar

#endif
