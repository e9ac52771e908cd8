#include "ratcert/rational.hpp"

#include <ostream>

namespace ratcert {

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) throw error("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::from_strings(const std::string& num, const std::string& den) {
  mpz_class n, d;
  if (n.set_str(num, 10) != 0) throw input_error("bad integer literal: " + num);
  if (d.set_str(den, 10) != 0) throw input_error("bad integer literal: " + den);
  if (d == 0) throw input_error("rational with zero denominator");
  mpq_class q(n);
  q /= mpq_class(d);
  Rational r;
  r.v_ = q;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw error("division by zero");
  return Rational(mpq_class(1) / v_);
}

std::string Rational::str() const {
  if (is_integer()) return num_string();
  return num_string() + "/" + den_string();
}

std::int64_t Rational::num_i64() const {
  if (!v_.get_num().fits_slong_p()) throw error("numerator exceeds int64");
  return static_cast<std::int64_t>(v_.get_num().get_si());
}

std::int64_t Rational::den_i64() const {
  if (!v_.get_den().fits_slong_p()) throw error("denominator exceeds int64");
  return static_cast<std::int64_t>(v_.get_den().get_si());
}

bool Rational::fits_i64() const {
  return v_.get_num().fits_slong_p() && v_.get_den().fits_slong_p();
}

std::size_t Rational::hash() const {
  auto mix = [](std::size_t h, std::size_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  };
  std::size_t h = 0x12345;
  auto fold = [&](const mpz_class& z) {
    const mpz_srcptr p = z.get_mpz_t();
    h = mix(h, static_cast<std::size_t>(mpz_sgn(p)));
    const std::size_t limbs = mpz_size(p);
    for (std::size_t i = 0; i < limbs; ++i)
      h = mix(h, static_cast<std::size_t>(mpz_getlimbn(p, i)));
  };
  fold(v_.get_num());
  fold(v_.get_den());
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

bool perfect_cube_root(const mpz_class& x, mpz_class& root) {
  mpz_class r;
  const bool neg = x < 0;
  mpz_class a = neg ? mpz_class(-x) : x;
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), 3) == 0) {
    if (r * r * r != a) return false;
  }
  root = neg ? mpz_class(-r) : r;
  return root * root * root == x;
}

}  // namespace ratcert
