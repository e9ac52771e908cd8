#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ratcert/error.hpp"

namespace ratcert {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Wraps GMP so hashing, ordering and serialization are
/// deterministic and under our control.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long n, long d);
  static Rational from_strings(const std::string& num, const std::string& den);

  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inverse() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  std::string num_string() const { return v_.get_num().get_str(); }
  std::string den_string() const { return v_.get_den().get_str(); }
  std::string str() const;

  /// Numerator/denominator as int64 when they fit; throws otherwise.
  std::int64_t num_i64() const;
  std::int64_t den_i64() const;
  bool fits_i64() const;

  double to_double() const { return v_.get_d(); }

  std::size_t hash() const;

  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Floor of the cube root when the argument is a perfect cube.
bool perfect_cube_root(const mpz_class& x, mpz_class& root);

}  // namespace ratcert

template <>
struct std::hash<ratcert::Rational> {
  std::size_t operator()(const ratcert::Rational& r) const { return r.hash(); }
};
