#include "ratcert/surface.hpp"

#include "ratcert/error.hpp"

namespace ratcert {

std::string surface_kind_name(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::P2:
      return "P2";
    case SurfaceKind::QUADRIC:
      return "Quadric";
    case SurfaceKind::DEL_PEZZO:
      return "DP";
    case SurfaceKind::HIRZEBRUCH:
      return "Hirzebruch";
    case SurfaceKind::WEIGHTED_PROJECTIVE:
      return "WeightedProjective";
    case SurfaceKind::TORIC_FORM:
      return "ToricForm";
    case SurfaceKind::ABSTRACT:
      return "Abstract";
  }
  throw engine_bug_error("unknown surface kind");
}

nlohmann::json SurfaceDescriptor::to_json() const {
  nlohmann::json j;
  j["kind"] = surface_kind_name(kind);
  if (kind == SurfaceKind::DEL_PEZZO) j["degree"] = degree;
  if (kind == SurfaceKind::HIRZEBRUCH) j["n"] = hirzebruch_n;
  if (kind == SurfaceKind::WEIGHTED_PROJECTIVE)
    j["weights"] = nlohmann::json::array({weights[0], weights[1], weights[2]});
  if (k_squared)
    j["k_squared"] = *k_squared;
  else
    j["k_squared"] = nullptr;
  nlohmann::json sing = nlohmann::json::array();
  for (const DuValType& d : singularities) sing.push_back("A" + std::to_string(d.index));
  j["singularities"] = sing;
  j["has_rational_point"] = has_rational_point;
  j["toric_form"] = toric_form;
  return j;
}

SurfaceDescriptor standard_surface(SurfaceKind kind, int parameter) {
  SurfaceDescriptor s;
  s.kind = kind;
  switch (kind) {
    case SurfaceKind::P2:
      s.k_squared = 9;
      s.toric_form = true;
      break;
    case SurfaceKind::QUADRIC:
      s.k_squared = 8;
      s.toric_form = true;
      break;
    case SurfaceKind::DEL_PEZZO:
      if (parameter < 1 || parameter > 9)
        throw input_error("Del Pezzo degree must lie between 1 and 9");
      s.degree = parameter;
      s.k_squared = parameter;
      s.toric_form = parameter >= 6;
      break;
    case SurfaceKind::HIRZEBRUCH:
      // F_1 is not minimal; n = 0 is the quadric P1 x P1.  Accept n >= 2 and
      // record n = 0 as the quadric-like case (both have K^2 = 8).
      if (parameter == 1 || parameter < 0)
        throw input_error("Hirzebruch surface parameter must be 0 or at least 2");
      s.hirzebruch_n = parameter;
      s.k_squared = 8;
      s.toric_form = true;
      break;
    case SurfaceKind::WEIGHTED_PROJECTIVE:
    case SurfaceKind::TORIC_FORM:
      s.toric_form = true;
      break;
    case SurfaceKind::ABSTRACT:
      break;
  }
  return s;
}

std::string TerminalVerdict::name() const {
  if (toric_form && rational) return "TORIC_FORM and RATIONAL";
  if (toric_form) return "TORIC_FORM";
  if (rational) return "RATIONAL";
  return "OPEN";
}

TerminalVerdict terminal_predicates(const SurfaceDescriptor& s) {
  if (!s.k_squared)
    throw input_error("terminal predicates require the descriptor's K^2 to be set");
  TerminalVerdict v;
  v.toric_form = *s.k_squared >= 6;
  v.rational = *s.k_squared >= 5 && s.has_rational_point;
  return v;
}

}  // namespace ratcert
