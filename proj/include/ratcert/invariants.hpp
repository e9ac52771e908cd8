#pragma once

#include <array>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "ratcert/group.hpp"
#include "ratcert/mat3.hpp"
#include "ratcert/projective.hpp"
#include "ratcert/ratfunc.hpp"
#include "ratcert/rational.hpp"
#include "ratcert/surface.hpp"

namespace ratcert {

/// A pseudo-reflection seen projectively: some scalar multiple of the matrix
/// has eigenvalues (lambda, lambda, mu) with lambda != mu, so the element of
/// PGL3 fixes the line of P2 with the stored dual coordinates pointwise.
struct ReflectionData {
  long order = 0;  // projective order of the element
  Vec3 line;       // dual coordinates, first nonzero coordinate scaled to 1
};

/// Reflection data if g is a pseudo-reflection of PGL3, nullopt when g has
/// three distinct eigenvalues (or a non-semisimple repeated one).  Scalar
/// input is the identity in PGL3 and is rejected.
std::optional<ReflectionData> is_reflection(const Mat3& g);
std::optional<ReflectionData> is_reflection(const ProjElement& g);

/// Indices into g.elements of the pseudo-reflections, optionally restricted
/// to a single projective order.
std::vector<int> reflection_indices(const MatrixGroup& g,
                                    std::optional<long> order_filter = std::nullopt);

/// Whether the reflections of g (optionally of one fixed order) generate g.
bool reflection_generated(const MatrixGroup& g,
                          std::optional<long> order_filter = std::nullopt);

/// The linear group generated by the true pseudo-reflection scalings of g's
/// reflections: each reflection with eigenvalues (lambda, lambda, mu) is
/// scaled by 1/lambda so its repeated eigenvalue becomes 1, and the scaled
/// matrices are closed in LINEAR mode.  Requires a PROJECTIVE input with at
/// least one reflection (after the optional order filter).
MatrixGroup reflection_lift(const MatrixGroup& g,
                            std::optional<long> order_filter = std::nullopt,
                            long bound = kDefaultOrderBound);

/// Number of elements of a LINEAR group that are true pseudo-reflections
/// (eigenvalues (1, 1, mu) with mu != 1, semisimple).
long linear_reflection_count(const MatrixGroup& g);

/// Molien series of a linear group: the Hilbert series of its invariant
/// ring, (1/|G|) sum_g 1/det(I - t g), as an exact rational function over Q
/// together with its power-series truncation.
struct MolienSeries {
  RatFunc<Rational> closed_form;
  std::vector<Rational> truncation;  // coefficients of t^0 .. t^depth

  nlohmann::json to_json() const;
};

/// Compute the Molien series of a LINEAR-mode group.  `molien` runs the
/// per-element characteristic-polynomial tally in parallel; `molien_serial`
/// is the single-threaded reference.  Both produce bit-identical results.
MolienSeries molien(const MatrixGroup& g, int truncation_depth = 30);
MolienSeries molien_serial(const MatrixGroup& g, int truncation_depth = 30);

enum class CSTVerdict { POLYNOMIAL, NOT_POLYNOMIAL };

/// Shephard-Todd analysis of a Molien series: degrees are present when the
/// closed form factors as 1/((1-t^d1)(1-t^d2)(1-t^d3)); the verdict is
/// POLYNOMIAL only when additionally d1*d2*d3 = |G| and
/// (d1-1)+(d2-1)+(d3-1) equals the pseudo-reflection count of the lift.
struct CSTResult {
  std::optional<std::array<int, 3>> degrees;  // sorted ascending
  long reflection_count = 0;
  CSTVerdict verdict = CSTVerdict::NOT_POLYNOMIAL;

  nlohmann::json to_json() const;
};

/// Factor m's closed form and check the Chevalley-Shephard-Todd identities
/// against the LINEAR group g (m must have been computed for g).
CSTResult shephard_todd_degrees(const MolienSeries& m, const MatrixGroup& g);

/// Weighted projective space P(d1, d2, d3) for a POLYNOMIAL verdict; the
/// degenerate degrees (1,1,1) give P2 itself.  NOT_POLYNOMIAL input is
/// rejected.
SurfaceDescriptor weighted_projective_model(const CSTResult& c);

}  // namespace ratcert
