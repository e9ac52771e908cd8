#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ratcert/cyclotomic.hpp"
#include "ratcert/group.hpp"
#include "ratcert/ledger.hpp"
#include "ratcert/rational.hpp"
#include "ratcert/surface.hpp"

namespace ratcert {

/// A fixed point of an automorphism together with the eigenvalues of its
/// action on the tangent plane there.
struct FixedPointDatum {
  std::string label;                                  // e.g. "[1:0:0]" or symbolic
  std::optional<std::array<CycNum, 3>> location;      // projective coordinates if known
  std::array<CycNum, 2> tangent_weights{CycNum(1), CycNum(1)};

  /// Both weights must have finite order dividing the acting element's order.
  void validate(long element_order) const;
  nlohmann::json to_json() const;
};

/// Multiplicative order of a tangent weight; throws input_error if the value
/// is zero or not a root of unity in its cyclotomic field.
long weight_order(const CycNum& w);

/// Du Val type of the quotient singularity at a fixed point with tangent
/// weights (w1, w2) under the cyclic group the point's stabilizer generates:
/// A_{n-1} iff the pair has the form (xi, xi^{n-1}) for a primitive n-th root
/// xi with n >= 2 (equivalently w1 * w2 = 1), nothing otherwise.
std::optional<DuValType> duval_type(const CycNum& w1, const CycNum& w2);

/// Self-intersection of the canonical class after quotienting a surface with
/// K^2 = k2 by a group of order n.  branch_k_multiple empty: the quotient is
/// free outside Du Val points (asserted by the caller), so K^2 divides by n.
/// branch_k_multiple = c: the map is branched over a curve of class c*K, and
/// the Hurwitz formula gives (1/n) * ((1-c) K)^2 = (1-c)^2 * k2 / n.
Rational quotient_k2(long k2, long n, std::optional<Rational> branch_k_multiple = std::nullopt);

/// Recomputes the displayed intersection-theory chain for the order-3
/// quotient of the degree-6 Del Pezzo surface: K^2 drops 6 -> 2, a.K = -1,
/// a.f^{-1}(l_i) = 1, the a.i(a) < 1 bound, and the final K_Y^2 = 8 after
/// contracting the six disjoint (-1)-curves on the crepant resolution.
/// Throws engine_bug_error if any line fails.
Ledger prop2_case_d_ledger();

/// Recomputes the fixed-point bookkeeping of the two minimal cyclic actions
/// on the degree-6 Del Pezzo surface: Lefschetz counts (identity 6,
/// antipodal 4, order-3 rotation 3), the holomorphic Lefschetz solution
/// (0,0,3), the Du Val types A1/A2 of the resulting quotient points, and the
/// quotient K^2 values 3 and 2.  Throws engine_bug_error if any line fails.
Ledger dp6_case_ledger();

/// Recomputes the Hurwitz computation for the quadric quotient: an
/// involution branched over a curve of class -K/2 sends K^2 = 8 to 9.
/// Throws engine_bug_error if any line fails.
Ledger hurwitz_quadric_ledger();

/// Sublattice of the torus character lattice Z^2 of P^2 fixed by a
/// simultaneously diagonal projective group, as a row-style Hermite normal
/// form basis [[p, q], [0, r]] (p, r > 0, 0 <= q < r), plus its index p*r.
struct MonomialSublattice {
  std::array<std::array<long, 2>, 2> basis{{{1, 0}, {0, 1}}};
  long index = 1;

  bool contains(long m1, long m2) const;
  nlohmann::json to_json() const;
};

/// Computes the invariant monomial sublattice of a diagonal group: the
/// characters m with (d1/d0)^{m1} (d2/d0)^{m2} = 1 for every element
/// diag(d0, d1, d2).  The index equals |N| when N acts faithfully on the
/// torus (automatic in projective mode).  Throws input_error on a
/// non-diagonal element.
MonomialSublattice invariant_monomial_sublattice(const MatrixGroup& n);

}  // namespace ratcert
