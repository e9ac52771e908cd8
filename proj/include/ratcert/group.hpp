#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "ratcert/projective.hpp"
#include "ratcert/subspace.hpp"

namespace ratcert {

enum class Mode { LINEAR, PROJECTIVE };

inline constexpr long kDefaultOrderBound = 3000;

/// A finite matrix group, fully enumerated.  In PROJECTIVE mode every stored
/// matrix is the canonical determinant-1 representative at the group's
/// working conductor, so element equality is coordinate-wise.  Immutable
/// once closed.
struct MatrixGroup {
  Mode mode = Mode::LINEAR;
  int conductor = 1;             // working conductor (multiple of 3 in projective mode)
  std::vector<Mat3> generators;  // embedded/canonicalized at `conductor`
  std::vector<Mat3> elements;    // BFS discovery order; elements[0] = identity class
  long order() const { return static_cast<long>(elements.size()); }
};

/// Generators plus mode as read from or written to JSON.
struct GroupInput {
  Mode mode = Mode::PROJECTIVE;
  std::vector<Mat3> generators;

  static GroupInput from_json(const nlohmann::json& j);
  nlohmann::json to_json(int conductor) const;
};

/// Breadth-first closure of the generated group: start at the identity,
/// repeatedly right-multiply by the generators in input order.  Deterministic
/// element ordering.  Throws closure_limit_error past `bound` elements.
MatrixGroup close(const std::vector<Mat3>& generators, Mode mode, long bound = kDefaultOrderBound);
MatrixGroup close(const GroupInput& input, long bound = kDefaultOrderBound);

/// Least k >= 1 with g^k = I (LINEAR) or g^k scalar (PROJECTIVE).
long element_order(const Mat3& g, Mode mode, long bound = kDefaultOrderBound);

/// Quotient of a linear group by its scalar subgroup.
MatrixGroup projectivize(const MatrixGroup& g);

/// The determinant-1 preimage of a projective group in SL_3: generated by
/// the canonical representatives together with omega I.  Its order is
/// exactly 3 |G|.
MatrixGroup sl_lift(const MatrixGroup& g, long bound = 4 * kDefaultOrderBound);

/// The scalar matrices contained in a linear group.
std::vector<Mat3> scalar_elements(const MatrixGroup& g);

bool is_abelian(const MatrixGroup& g);

/// Common eigenbasis of the whole group, when one exists: three projective
/// points (given as basis vectors) in whose coordinates every element is
/// diagonal.  Returns nullopt for groups with no common eigenbasis.
std::optional<std::array<Vec3, 3>> simultaneous_diagonalization(const MatrixGroup& g);

nlohmann::json group_to_json(const MatrixGroup& g);

}  // namespace ratcert
