#pragma once

#include <utility>
#include <vector>

#include "ratcert/error.hpp"

namespace ratcert {

/// Dense univariate polynomial over an exact field K.
/// Coefficients are stored low degree first with trailing zeros trimmed,
/// so the representation of each polynomial is unique.
template <typename K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(K k) { return Poly(std::vector<K>{std::move(k)}); }
  static Poly monomial(int deg, K k) {
    std::vector<K> c(static_cast<std::size_t>(deg) + 1, K());
    c[static_cast<std::size_t>(deg)] = std::move(k);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const K& leading() const {
    if (is_zero()) throw error("leading coefficient of zero polynomial");
    return c_.back();
  }
  K coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return K();
    return c_[static_cast<std::size_t>(i)];
  }
  const std::vector<K>& coeffs() const { return c_; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Poly(std::move(c));
  }
  Poly operator-() const {
    std::vector<K> c(c_);
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, K());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const K& k) {
    std::vector<K> c(a.c_);
    for (auto& x : c) x = x * k;
    return Poly(std::move(c));
  }

  /// Quotient and remainder; K must be a field.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw error("polynomial division by zero");
    Poly r = a;
    std::vector<K> q;
    if (a.degree() >= b.degree())
      q.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, K());
    const K lead_inv = K(1) / b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const int shift = r.degree() - b.degree();
      const K f = r.leading() * lead_inv;
      q[static_cast<std::size_t>(shift)] = f;
      std::vector<K> rc = r.c_;
      for (std::size_t i = 0; i < b.c_.size(); ++i)
        rc[i + static_cast<std::size_t>(shift)] -= f * b.c_[i];
      rc.pop_back();
      r = Poly(std::move(rc));
    }
    return {Poly(std::move(q)), r};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> c(c_.size() - 1, K());
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * K(static_cast<long>(i));
    return Poly(std::move(c));
  }

  K eval(const K& x) const {
    K acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * (K(1) / leading());
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Monic gcd via the Euclidean algorithm.
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<K> c_;

  template <typename T>
  friend class Poly;

 public:
  /// Coefficient substitution x -> x^k (used by conductor embeddings).
  Poly stretch(int k) const {
    if (is_zero()) return Poly();
    std::vector<K> c(static_cast<std::size_t>(degree()) * k + 1, K());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i * static_cast<std::size_t>(k)] = c_[i];
    return Poly(std::move(c));
  }
};

}  // namespace ratcert
