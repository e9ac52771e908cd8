#pragma once

#include <utility>
#include <vector>

#include "ratcert/error.hpp"
#include "ratcert/polynomial.hpp"

namespace ratcert {

/// Rational function in one variable over an exact field K, kept in lowest
/// terms with a monic denominator so each value has a unique representation.
template <typename K>
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly<K>::constant(K(1))) {}
  explicit RatFunc(Poly<K> num) : num_(std::move(num)), den_(Poly<K>::constant(K(1))) {}
  RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw error("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc reciprocal() const {
    if (is_zero()) throw error("reciprocal of zero rational function");
    return RatFunc(den_, num_);
  }
  friend RatFunc operator*(const RatFunc& a, const K& k) { return RatFunc(a.num_ * k, a.den_); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// First `count` coefficients of the power-series expansion around 0.
  /// Requires den(0) != 0.
  std::vector<K> series_prefix(int count) const {
    if (den_.coeff(0).is_zero()) throw error("rational function has a pole at 0");
    const K d0_inv = K(1) / den_.coeff(0);
    std::vector<K> s(static_cast<std::size_t>(count), K());
    for (int k = 0; k < count; ++k) {
      K acc = num_.coeff(k);
      for (int j = 1; j <= k && j <= den_.degree(); ++j)
        acc -= den_.coeff(j) * s[static_cast<std::size_t>(k - j)];
      s[static_cast<std::size_t>(k)] = acc * d0_inv;
    }
    return s;
  }

  /// Coefficient-wise image under a map K -> L (e.g. rational coercion).
  template <typename L, typename F>
  RatFunc<L> map(F f) const {
    std::vector<L> n, d;
    for (const auto& c : num_.coeffs()) n.push_back(f(c));
    for (const auto& c : den_.coeffs()) d.push_back(f(c));
    return RatFunc<L>(Poly<L>(std::move(n)), Poly<L>(std::move(d)));
  }

 private:
  void reduce() {
    if (den_.is_zero()) throw error("zero denominator in rational function");
    if (num_.is_zero()) {
      den_ = Poly<K>::constant(K(1));
      return;
    }
    Poly<K> g = Poly<K>::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    const K lead_inv = K(1) / den_.leading();
    num_ = num_ * lead_inv;
    den_ = den_ * lead_inv;
  }

  Poly<K> num_;
  Poly<K> den_;
};

}  // namespace ratcert
