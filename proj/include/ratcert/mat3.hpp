#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "ratcert/cyclotomic.hpp"
#include "ratcert/polynomial.hpp"

namespace ratcert {

/// Column vector in K^3 over the cyclotomic numbers.
using Vec3 = std::array<CycNum, 3>;

/// Dense 3x3 matrix over the cyclotomic numbers, row major.
class Mat3 {
 public:
  Mat3() = default;
  explicit Mat3(std::array<CycNum, 9> entries) : e_(std::move(entries)) {}

  static Mat3 identity();
  static Mat3 diag(CycNum a, CycNum b, CycNum c);
  static Mat3 scalar(const CycNum& s);
  /// Permutation matrix sending basis vector j to basis vector p[j].
  static Mat3 permutation(const std::array<int, 3>& p);

  const CycNum& at(int i, int j) const { return e_[static_cast<std::size_t>(3 * i + j)]; }
  CycNum& at(int i, int j) { return e_[static_cast<std::size_t>(3 * i + j)]; }
  const std::array<CycNum, 9>& entries() const { return e_; }

  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend Vec3 operator*(const Mat3& a, const Vec3& v);
  friend Mat3 operator*(const CycNum& s, const Mat3& a);
  friend Mat3 operator+(const Mat3& a, const Mat3& b);
  friend Mat3 operator-(const Mat3& a, const Mat3& b);

  CycNum det() const;
  CycNum trace() const;
  /// Sum of the three principal 2x2 minors (the second elementary symmetric
  /// function of the eigenvalues).
  CycNum minor_sum() const;
  /// Characteristic polynomial det(tI - m) as a monic cubic.
  Poly<CycNum> charpoly() const;
  Mat3 transpose() const;
  Mat3 inverse() const;  // throws on det = 0
  bool is_scalar() const;
  bool is_identity() const;

  /// Least common conductor of all entries.
  int conductor() const;
  /// Same matrix with every entry embedded at conductor m.
  Mat3 embedded(int m) const;

  friend bool operator==(const Mat3& a, const Mat3& b);
  friend bool operator!=(const Mat3& a, const Mat3& b) { return !(a == b); }

  /// Hash of the entry coordinate vectors; meaningful among matrices that
  /// share one conductor (as inside a closed group).
  std::size_t hash() const;

  std::string str() const;
  nlohmann::json to_json() const;
  static Mat3 from_json(const nlohmann::json& j);

 private:
  std::array<CycNum, 9> e_{};
};

/// Minimal polynomial of m (monic, degree <= 3), found as the first linear
/// dependence among I, m, m^2, m^3 viewed as 9-coordinate vectors.
Poly<CycNum> minimal_polynomial(const Mat3& m);

/// A matrix of finite order is diagonalizable exactly when its minimal
/// polynomial is squarefree.
bool has_squarefree_minimal_polynomial(const Mat3& m);

/// For a non-scalar matrix whose characteristic polynomial has a repeated
/// root, returns {repeated value, simple value}. Returns nullopt when the
/// characteristic polynomial is squarefree or the matrix is scalar.
std::optional<std::pair<CycNum, CycNum>> repeated_eigenvalue(const Mat3& m);

}  // namespace ratcert
