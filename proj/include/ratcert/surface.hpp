#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ratcert {

/// Du Val surface singularity of type A_n (family A only; the quotient
/// singularities handled here all arise from tangent weights (xi, xi^{n-1})
/// and are crepant under the minimal resolution).
struct DuValType {
  int index = 1;  // A_index, index >= 1

  friend bool operator==(const DuValType& a, const DuValType& b) { return a.index == b.index; }
  friend bool operator<(const DuValType& a, const DuValType& b) { return a.index < b.index; }
};

enum class SurfaceKind {
  P2,
  QUADRIC,
  DEL_PEZZO,            // DP(d), 1 <= d <= 9
  HIRZEBRUCH,           // F_n
  WEIGHTED_PROJECTIVE,  // P(w1, w2, w3)
  TORIC_FORM,           // k-form of an unspecified toric surface
  ABSTRACT,
};

std::string surface_kind_name(SurfaceKind k);

/// Coarse description of a projective surface: enough data for the terminal
/// predicates (K^2 thresholds, rational point, toric form) and the ledgers,
/// nothing scheme-theoretic.
struct SurfaceDescriptor {
  SurfaceKind kind = SurfaceKind::ABSTRACT;
  int degree = 0;                      // DEL_PEZZO only
  int hirzebruch_n = 0;                // HIRZEBRUCH only
  std::array<int, 3> weights{1, 1, 1};  // WEIGHTED_PROJECTIVE only
  std::optional<int> k_squared;        // unset where no smooth K^2 is claimed
  std::vector<DuValType> singularities;
  bool has_rational_point = true;
  bool toric_form = false;

  nlohmann::json to_json() const;
};

/// P2 / Quadric / DP(d) / Hirzebruch descriptor with the kind-determined K^2
/// filled in (9 / 8 / d / 8).
SurfaceDescriptor standard_surface(SurfaceKind kind, int parameter = 0);

/// Outcome of the terminal thresholds; OPEN when neither holds.
struct TerminalVerdict {
  bool toric_form = false;
  bool rational = false;

  bool open() const { return !toric_form && !rational; }
  /// "TORIC_FORM and RATIONAL", "TORIC_FORM", "RATIONAL" or "OPEN".
  std::string name() const;
};

/// Minimal-unirational-surface thresholds: TORIC_FORM when K^2 >= 6 and the
/// descriptor is on the toric-form list, RATIONAL when K^2 >= 5 with a
/// rational point; OPEN otherwise.  Requires k_squared to be set.
TerminalVerdict terminal_predicates(const SurfaceDescriptor& s);

}  // namespace ratcert
