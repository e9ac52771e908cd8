#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ratcert/polynomial.hpp"
#include "ratcert/rational.hpp"

namespace ratcert {

/// Largest conductor the engine will work with.  Covers Q(zeta_7), Q(zeta_9)
/// and Q(zeta_15) (the fields needed by the exceptional groups) with margin.
inline constexpr int kMaxConductor = 120;

int euler_phi(int n);
long lcm_long(long a, long b);
std::vector<int> divisors_ascending(int n);

/// The n-th cyclotomic polynomial over Q, cached for n <= kMaxConductor.
const Poly<Rational>& cyclotomic_poly(int n);

/// Element of Q(zeta_n) on the power basis 1, z, ..., z^{phi(n)-1} modulo
/// Phi_n, always eagerly reduced so equality at a fixed conductor is
/// coordinate-wise.  Conductors are never minimized: a value keeps the
/// conductor it was built at, and binary operations embed both operands
/// into Q(zeta_lcm) first.  Immutable after construction.
class CycNum {
 public:
  CycNum() : n_(1), coords_(1) {}
  CycNum(long v) : n_(1), coords_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
  explicit CycNum(Rational v) : n_(1), coords_{std::move(v)} {}
  /// Rational value carried at conductor n (no minimization).
  CycNum(Rational v, int n);
  /// Value with the given power-basis coordinates at conductor n; reduces
  /// modulo Phi_n and pads/trims to length phi(n).
  CycNum(int n, std::vector<Rational> coords);

  static CycNum zeta(int n);
  /// zeta_n^k.
  static CycNum zeta_pow(int n, long k);

  int conductor() const { return n_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational as_rational() const;  // throws if not rational

  /// Same value viewed in Q(zeta_m); requires conductor() | m, m <= bound.
  CycNum embedded(int m) const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  CycNum inverse() const;  // throws on zero
  CycNum pow(long e) const;

  /// Smallest k > 0 with x^k = 1, or nullopt if x is not a root of unity.
  std::optional<long> root_of_unity_order() const;

  /// True equality as algebraic numbers (embeds into the compositum).
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Lexicographic comparison of coordinate vectors; both operands must
  /// already share a conductor.  Used for canonical representative picks
  /// inside a group, where everything lives at one working conductor.
  static int cmp_same_conductor(const CycNum& a, const CycNum& b);

  /// Hash of (conductor, coords).  Only meaningful among values that share
  /// a conductor, which is how group closure uses it.
  std::size_t hash() const;

  std::string str() const;

  nlohmann::json to_json() const;
  static CycNum from_json(const nlohmann::json& j);

  /// Approximate complex value (for diagnostics and float oracles only).
  void to_complex(double& re, double& im) const;

 private:
  int n_;
  std::vector<Rational> coords_;  // length phi(n_), reduced mod Phi_n
  void reduce(std::vector<Rational>&& raw);
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

}  // namespace ratcert

template <>
struct std::hash<ratcert::CycNum> {
  std::size_t operator()(const ratcert::CycNum& x) const { return x.hash(); }
};
