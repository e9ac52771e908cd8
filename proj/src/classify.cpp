#include "ratcert/classify.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratcert/error.hpp"
#include "ratcert/subspace.hpp"

namespace ratcert {

namespace {

nlohmann::json vec3_json(const Vec3& v) {
  return nlohmann::json::array({v[0].to_json(), v[1].to_json(), v[2].to_json()});
}

bool proportional(const Vec3& w, const Vec3& v) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(w[i] * v[j] == w[j] * v[i])) return false;
  return true;
}

/// Permutation induced by m on three pairwise independent lines: perm[i] = j
/// when m maps line i into line j.  The lines come from a normal subgroup's
/// eigenspace system, so every group element must permute them.
std::array<int, 3> line_perm(const Mat3& m, const std::array<Vec3, 3>& lines) {
  std::array<int, 3> perm{-1, -1, -1};
  std::array<bool, 3> used{false, false, false};
  for (int i = 0; i < 3; ++i) {
    const Vec3 w = m * lines[i];
    for (int j = 0; j < 3; ++j) {
      if (used[j]) continue;
      if (proportional(w, lines[j])) {
        perm[i] = j;
        used[j] = true;
        break;
      }
    }
    if (perm[i] < 0)
      throw engine_bug_error("group element does not permute the eigenline system");
  }
  return perm;
}

bool is_identity_perm(const std::array<int, 3>& p) {
  return p[0] == 0 && p[1] == 1 && p[2] == 2;
}

/// Whether the subgroup of S3 generated by the permutations moves 0 to every
/// position (for subgroups of S3 acting on 3 points, orbit of one point
/// being everything is transitivity).
bool transitive_on_three(const std::vector<std::array<int, 3>>& perms) {
  std::array<bool, 3> reached{true, false, false};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < 3; ++i) {
      if (!reached[i]) continue;
      for (const auto& p : perms)
        if (!reached[p[i]]) {
          reached[p[i]] = true;
          grew = true;
        }
    }
  }
  return reached[0] && reached[1] && reached[2];
}

}  // namespace

std::string label_name(Label l) {
  switch (l) {
    case Label::A: return "A";
    case Label::B: return "B";
    case Label::C: return "C";
    case Label::D: return "D";
    case Label::E: return "E";
    case Label::F: return "F";
    case Label::G: return "G";
    case Label::H: return "H";
    case Label::I: return "I";
    case Label::K: return "K";
  }
  throw engine_bug_error("unknown label");
}

std::optional<IntransitivityWitness> is_intransitive(const MatrixGroup& g) {
  // Burnside: the representation is irreducible exactly when the matrices
  // span the full 9-dimensional matrix space.  Scalar rescaling does not
  // change the span, so the canonical representatives decide this for the
  // whole determinant-1 lift.
  EchelonSpan span;
  for (const auto& m : g.elements) {
    span.add(mat_to_vec9(m));
    if (span.rank() == 9) return std::nullopt;
  }

  // Reducible: in characteristic zero the space splits into invariant
  // summands of dimensions 1+1+1 or 1+2, so a common eigenline always
  // exists.  It shows up as a one-dimensional piece of the common-eigenspace
  // refinement of the generators.
  const auto pieces = eigen_refinement(g.generators);
  if (!pieces.empty() && pieces.front().dim() == 3)
    return IntransitivityWitness{IntransitivityWitness::Kind::LINE,
                                 Vec3{CycNum(1), CycNum(0), CycNum(0)}};
  for (const auto& piece : pieces)
    if (piece.dim() == 1)
      return IntransitivityWitness{IntransitivityWitness::Kind::LINE, piece.basis[0]};

  // Defensive fallback: a common eigenvector of the dual action cuts out an
  // invariant plane.
  std::vector<Mat3> duals;
  duals.reserve(g.generators.size());
  for (const auto& m : g.generators) duals.push_back(m.inverse().transpose());
  for (const auto& piece : eigen_refinement(duals))
    if (piece.dim() == 1)
      return IntransitivityWitness{IntransitivityWitness::Kind::PLANE, piece.basis[0]};

  throw engine_bug_error("reducible group without invariant line or plane");
}

FixedLocus fixed_points_on_p2(const MatrixGroup& g) {
  // Fixed points of the whole group are the common eigenvectors of the
  // generators; these are exactly the nonzero common-eigenspace pieces.
  const auto pieces = eigen_refinement(g.generators);
  if (!pieces.empty() && pieces.front().dim() == 3)
    throw input_error("everything fixed: the group acts trivially on the projective plane");
  FixedLocus locus;
  for (const auto& piece : pieces) {
    if (piece.dim() == 1) {
      locus.isolated_points.push_back(piece.basis[0]);
    } else if (piece.dim() == 2) {
      locus.pointwise_lines.push_back({piece.basis[0], piece.basis[1]});
    }
  }
  return locus;
}

std::optional<ImprimitivitySystem> imprimitivity_system(const MatrixGroup& g,
                                                        const IndexedGroup& ig) {
  const auto normals = normal_subgroups(ig);
  for (const auto& sub : normals) {
    if (sub.size() <= 1) continue;

    // The candidate subgroup qualifies when its common-eigenspace refinement
    // is exactly three lines (it is then diagonal in that basis, hence
    // abelian and simultaneously diagonalizable).
    const std::vector<int> sub_gens = small_generating_set(ig, sub);
    std::vector<Mat3> mats;
    mats.reserve(sub_gens.size());
    for (int idx : sub_gens) mats.push_back(g.elements[static_cast<std::size_t>(idx)]);
    const auto pieces = eigen_refinement(mats);
    if (pieces.size() != 3) continue;
    if (pieces[0].dim() != 1 || pieces[1].dim() != 1 || pieces[2].dim() != 1) continue;
    const std::array<Vec3, 3> lines{pieces[0].basis[0], pieces[1].basis[0], pieces[2].basis[0]};

    // Normality makes every group element permute the three lines.
    std::vector<std::array<int, 3>> gen_perms;
    gen_perms.reserve(g.generators.size());
    for (const auto& gen : g.generators) gen_perms.push_back(line_perm(gen, lines));
    if (!transitive_on_three(gen_perms)) continue;

    // Canonical subgroup for the system: the full kernel of the action on
    // the lines (every element fixing all three lines is diagonal in the
    // line basis).
    std::vector<int> kernel;
    for (int i = 0; i < ig.n; ++i)
      if (is_identity_perm(line_perm(g.elements[static_cast<std::size_t>(i)], lines)))
        kernel.push_back(i);
    const long image = g.order() / static_cast<long>(kernel.size());
    if (image != 3 && image != 6) continue;

    ImprimitivitySystem sys;
    sys.lines = lines;
    sys.generator_perms = std::move(gen_perms);
    sys.kernel_indices = std::move(kernel);
    sys.quotient_tag = image == 3 ? "C3" : "S3";
    return sys;
  }
  return std::nullopt;
}

ClassifyResult classify(const MatrixGroup& g) {
  if (g.mode != Mode::PROJECTIVE)
    throw input_error("classification requires a projective group (projectivize first)");
  if (g.order() == 0) throw input_error("group is not closed");
  if (g.order() == 1) throw input_error("cannot classify the trivial group");

  ClassifyResult res;
  res.order = g.order();

  // Intransitive: the determinant-1 lift is reducible.
  if (is_intransitive(g).has_value()) {
    if (auto basis = simultaneous_diagonalization(g)) {
      res.label = Label::A;
      res.eigenbasis = *basis;
      return res;
    }
    // Reducible but not diagonalizable: the space splits as a line plus an
    // irreducible plane, so the fixed locus is a single isolated point.
    FixedLocus locus = fixed_points_on_p2(g);
    if (locus.isolated_points.size() != 1 || !locus.pointwise_lines.empty())
      throw engine_bug_error(
          "reducible group is neither diagonalizable nor fixing a unique point");
    res.label = Label::B;
    res.fixed_point = locus.isolated_points[0];
    return res;
  }

  const IndexedGroup ig = build_indexed(g);

  // Imprimitive: a normal diagonal subgroup whose three eigenlines the group
  // permutes transitively.
  if (auto sys = imprimitivity_system(g, ig)) {
    res.label = sys->quotient_tag == "C3" ? Label::C : Label::D;
    res.quotient_tag = sys->quotient_tag;
    res.imprimitivity = std::move(*sys);
    return res;
  }

  // Primitive.  Non-simple groups carry a canonical normal subgroup of
  // order 18 of type C3^2:C2; the quotient separates the three cases.
  const auto normals = normal_subgroups(ig);
  if (normals.size() != 2) {
    Label lab;
    std::string expect_quotient;
    if (g.order() == 36) {
      lab = Label::E;
      expect_quotient = "C2";
    } else if (g.order() == 72) {
      lab = Label::F;
      expect_quotient = "C2xC2";
    } else if (g.order() == 216) {
      lab = Label::G;
      expect_quotient = "A4";
    } else {
      throw engine_bug_error("group falls outside the PGL3 classification taxonomy");
    }
    const std::vector<int>* n18 = nullptr;
    for (const auto& sub : normals)
      if (sub.size() == 18 && iso_tag(sub_indexed(ig, sub)) == "C3^2:C2") {
        n18 = &sub;
        break;
      }
    if (n18 == nullptr)
      throw engine_bug_error(
          "primitive non-simple group lacks the expected order-18 normal subgroup");
    const Quotient q = quotient_by(ig, *n18);
    const std::string quotient = iso_tag(q.group);
    if (quotient != expect_quotient)
      throw engine_bug_error("unexpected quotient by the order-18 normal subgroup: " + quotient);
    res.label = lab;
    res.quotient_tag = quotient;
    res.n18_indices = *n18;
    if (lab == Label::G) {
      // The order-216 group is generated by its order-3 homologies (elements
      // with a repeated eigenvalue fixing a line pointwise).
      for (int i = 0; i < ig.n; ++i)
        if (ig.elem_order[static_cast<std::size_t>(i)] == 3 &&
            repeated_eigenvalue(g.elements[static_cast<std::size_t>(i)]).has_value())
          res.reflection_generator_indices.push_back(i);
      if (static_cast<long>(subgroup_closure(ig, res.reflection_generator_indices).size()) !=
          g.order())
        throw engine_bug_error("order-3 homologies do not generate the order-216 group");
    }
    return res;
  }

  // Simple.
  if (g.order() == 60) {
    res.label = Label::H;
  } else if (g.order() == 168) {
    res.label = Label::I;
  } else if (g.order() == 360) {
    res.label = Label::K;
  } else {
    throw engine_bug_error("group falls outside the PGL3 classification taxonomy");
  }
  res.simple = true;
  return res;
}

nlohmann::json ClassifyResult::to_json(const MatrixGroup& g) const {
  nlohmann::json witness;
  switch (label) {
    case Label::A: {
      nlohmann::json basis = nlohmann::json::array();
      for (const auto& v : *eigenbasis) basis.push_back(vec3_json(v));
      witness = {{"kind", "eigenbasis"}, {"basis", basis}};
      break;
    }
    case Label::B:
      witness = {{"kind", "fixed_point"}, {"point", vec3_json(*fixed_point)}};
      break;
    case Label::C:
    case Label::D: {
      nlohmann::json lines = nlohmann::json::array();
      for (const auto& v : imprimitivity->lines) lines.push_back(vec3_json(v));
      nlohmann::json perms = nlohmann::json::array();
      for (const auto& p : imprimitivity->generator_perms)
        perms.push_back(nlohmann::json::array({p[0], p[1], p[2]}));
      witness = {{"kind", "imprimitivity"},
                 {"lines", lines},
                 {"generator_perms", perms},
                 {"kernel_indices", imprimitivity->kernel_indices},
                 {"kernel_order", imprimitivity->kernel_indices.size()},
                 {"quotient", imprimitivity->quotient_tag}};
      break;
    }
    case Label::E:
    case Label::F:
    case Label::G: {
      witness = {{"kind", "normal_structure"},
                 {"normal_order", n18_indices.size()},
                 {"normal_indices", n18_indices},
                 {"normal_iso", "C3^2:C2"},
                 {"quotient", quotient_tag}};
      if (label == Label::G) witness["reflection_generators"] = reflection_generator_indices;
      break;
    }
    case Label::H:
    case Label::I:
    case Label::K:
      witness = {{"kind", "simple"}, {"order", order}};
      break;
  }
  return nlohmann::json{{"label", label_name(label)},
                        {"order", order},
                        {"conductor", g.conductor},
                        {"witness", witness}};
}

}  // namespace ratcert
