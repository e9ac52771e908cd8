#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ratcert/cayley.hpp"
#include "ratcert/group.hpp"

namespace ratcert {

/// The ten classes of finite subgroups of PGL_3 in characteristic zero:
/// intransitive (A, B), imprimitive (C, D), primitive with a normal subgroup
/// (E, F, G) and simple (H, I, K).
enum class Label { A, B, C, D, E, F, G, H, I, K };

std::string label_name(Label l);

/// Witness that the determinant-1 lift acts reducibly: an invariant line
/// (coordinates of a common eigenvector) or an invariant plane (coordinates
/// of the common eigenvector of the dual action).
struct IntransitivityWitness {
  enum class Kind { LINE, PLANE } kind;
  Vec3 coords;
};

/// Set of points of the projective plane fixed by the whole group: finitely
/// many isolated points plus finitely many pointwise-fixed lines (each given
/// by the basis of the plane of vectors it consists of).
struct FixedLocus {
  std::vector<Vec3> isolated_points;
  std::vector<std::array<Vec3, 2>> pointwise_lines;
};

/// System of imprimitivity: three projective points whose lines are permuted
/// transitively, the permutation images of the generators, the kernel N of
/// the permutation action (a diagonalizable abelian normal subgroup) and the
/// isomorphism type of the image (C3 or S3).
struct ImprimitivitySystem {
  std::array<Vec3, 3> lines;
  std::vector<std::array<int, 3>> generator_perms;
  std::vector<int> kernel_indices;  // indices into the group's element list
  std::string quotient_tag;         // "C3" or "S3"
};

/// Outcome of the decision procedure, with the witness for the label.
struct ClassifyResult {
  Label label;
  long order = 0;
  std::optional<std::array<Vec3, 3>> eigenbasis;          // A
  std::optional<Vec3> fixed_point;                        // B
  std::optional<ImprimitivitySystem> imprimitivity;       // C, D
  std::vector<int> n18_indices;                           // E, F, G
  std::string quotient_tag;                               // C/D: C3/S3; E/F: C2/C2xC2; G: A4
  std::vector<int> reflection_generator_indices;          // G
  bool simple = false;                                    // H, I, K

  nlohmann::json to_json(const MatrixGroup& g) const;
};

/// Invariant line or plane of the determinant-1 lift, when the lift is
/// reducible (detected exactly via the dimension of the matrix span).
std::optional<IntransitivityWitness> is_intransitive(const MatrixGroup& g);

/// All points of P^2 fixed by every element.  Throws when the group is
/// trivial (everything would be fixed).
FixedLocus fixed_points_on_p2(const MatrixGroup& g);

/// Imprimitivity system for an irreducible group, if one exists.  The
/// search works through the normal subgroups in deterministic order and
/// returns the kernel-based canonical system.
std::optional<ImprimitivitySystem> imprimitivity_system(const MatrixGroup& g,
                                                        const IndexedGroup& ig);

/// Full decision cascade.  Throws engine_bug_error("outside ... taxonomy")
/// when no branch matches, which cannot happen for a genuine finite
/// subgroup of PGL_3.
ClassifyResult classify(const MatrixGroup& g);

}  // namespace ratcert
