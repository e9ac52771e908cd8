#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ratcert {

using IntVec = std::vector<long>;
/// Row-major square integer matrix acting on column coordinate vectors.
using IntMat = std::vector<std::vector<long>>;

/// Picard lattice of a rational surface with a finite group action: the
/// intersection form, the canonical class, a distinguished list of (-1)-curve
/// classes, and the action matrices keyed by group-element label.
struct PicLattice {
  int rank = 0;
  IntMat gram;
  IntVec canonical;
  std::vector<IntVec> minus_one_classes;
  std::map<std::string, IntMat> action;

  /// Intersection number v . w (v^T gram w).
  long pair(const IntVec& v, const IntVec& w) const;
  IntVec apply(const IntMat& a, const IntVec& v) const;
  const IntMat& action_of(const std::string& label) const;

  /// Checks every structural invariant: gram symmetric of signature
  /// (1, rank-1), each minus-one class c has c.c = c.K = -1, each action
  /// matrix is a gram isometry fixing K.  Throws engine_bug_error.
  void validate() const;
  nlohmann::json to_json() const;
};

/// Element labels of D12 = <r, s | r^6 = s^2 = (rs)^2 = 1> in a fixed order:
/// e, r, r2, r3, r4, r5, s, rs, r2s, r3s, r4s, r5s.
std::vector<std::string> d12_elements();
std::string d12_multiply(const std::string& a, const std::string& b);
std::string d12_inverse(const std::string& a);
/// Subgroup generated by the given labels, in d12_elements() order.
std::vector<std::string> d12_subgroup(const std::vector<std::string>& generators);
/// Normalizer in D12 of the subgroup generated by the given labels.
std::vector<std::string> d12_normalizer(const std::vector<std::string>& generators);

/// Picard lattice of the degree-6 Del Pezzo surface: rank 4, blowup basis
/// (h, e1, e2, e3), K = -3h + e1 + e2 + e3, the hexagon of (-1)-curves in
/// cyclic order, and the D12 action by hexagon rotation and reflection
/// extended linearly.  The returned lattice has been validated.
PicLattice dp6_lattice();

/// Rank of the common fixed sublattice of the listed elements' action
/// matrices (equivalently, of the subgroup they generate: a vector fixed by
/// generators is fixed by every product).
int invariant_rank(const PicLattice& lattice, const std::vector<std::string>& labels);

/// Outcome of the hexagon minimality test.  When not minimal, `witness` holds
/// the 0-based hexagon indices of a pairwise-disjoint curve set that every
/// admissible ambient minimal action would have to contract.
struct MinimalityResult {
  bool minimal = true;
  std::vector<int> witness;

  nlohmann::json to_json() const;
};

/// Tests whether the subgroup H generated by the given labels can act
/// minimally on the degree-6 Del Pezzo surface.  Not minimal iff some
/// nonempty pairwise-disjoint set of hexagon classes is invariant under H
/// and under the normalizer of H in D12: such a set is canonically attached
/// to H, so any ambient group with H normal and the surface minimal would
/// contract it.  (Invariance under H alone is not disqualifying: the
/// antipodal rotation has three disjoint invariant pairs and the order-3
/// rotation two disjoint invariant triples, but no canonical choice among
/// them, and those two actions are the minimal ones.)
MinimalityResult minimality_test_dp6(const std::vector<std::string>& generators);

/// Topological Lefschetz number 2 + trace(action(g)) of a rational surface
/// with b1 = b3 = 0; counts fixed points when the fixed locus is isolated.
long lefschetz_count(const PicLattice& lattice, const std::string& label);

/// Solves the holomorphic Lefschetz system for an order-3 automorphism with
/// isolated fixed points of the three possible tangent types:
///   a + b + c = 3,   -a/(3w) - b/(3w^2) + c/3 = 1   (w a primitive cube root)
/// by exact elimination over Q(w).  Returns the unique nonnegative-integer
/// solution (0, 0, 3); throws engine_bug_error if the system fails to have
/// exactly that solution.
std::array<long, 3> holo_lefschetz_order3_solve();

}  // namespace ratcert
