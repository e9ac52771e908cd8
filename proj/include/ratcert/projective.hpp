#pragma once

#include "ratcert/mat3.hpp"

namespace ratcert {

/// omega = zeta_3 embedded at conductor m (3 | m), cached.
const CycNum& omega_at(int m);

/// Scale m so its determinant becomes 1.  The scale factor is a cube root
/// of 1/det(m); when that root needs a larger cyclotomic field the result
/// conductor grows (at most by a factor of 3).  Throws input_error when no
/// cyclotomic cube root exists (such a matrix never has finite projective
/// order anyway).
Mat3 det_normalized(const Mat3& m);

/// Among the three determinant-1 multiples {m, omega m, omega^2 m} viewed at
/// conductor M (3 | M required), return the one whose concatenated entry
/// coordinates are lexicographically least.
Mat3 lex_least_det1(const Mat3& m, int M);

/// Element of PGL_3 held by its canonical representative: determinant 1,
/// lexicographically least among the three cube-root-of-unity multiples at
/// the element's working conductor.  All elements of one closed group share
/// a working conductor, making equality and hashing coordinate-wise.
class ProjElement {
 public:
  /// Canonicalize at the smallest workable conductor lcm(3, ...).
  explicit ProjElement(const Mat3& m);
  /// Canonicalize at the given working conductor (must be a multiple of 3
  /// and of the determinant-normalized conductor).
  ProjElement(const Mat3& m, int working_conductor);

  const Mat3& rep() const { return rep_; }
  int conductor() const { return conductor_; }

  /// Product inside one group: both factors must share a conductor.
  friend ProjElement operator*(const ProjElement& a, const ProjElement& b);
  ProjElement inverse() const;
  bool is_identity() const { return rep_.is_scalar(); }

  /// Coordinate-wise when conductors coincide, mathematical otherwise.
  friend bool operator==(const ProjElement& a, const ProjElement& b);
  friend bool operator!=(const ProjElement& a, const ProjElement& b) { return !(a == b); }

  /// Same point of PGL_3 regardless of the working conductors.
  static bool math_equal(const ProjElement& a, const ProjElement& b);

  /// Same element viewed at a larger working conductor.
  ProjElement at_conductor(int m) const;

  std::size_t hash() const { return rep_.hash(); }

 private:
  struct det1_tag {};
  ProjElement(Mat3 rep, int conductor, det1_tag) : rep_(std::move(rep)), conductor_(conductor) {}

  Mat3 rep_;
  int conductor_;
};

}  // namespace ratcert
