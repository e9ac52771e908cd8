#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ratcert/classify.hpp"
#include "ratcert/group.hpp"

namespace ratcert {

// A certificate is a tree of reduction steps.  Each step either replaces the
// current quotient problem by a smaller one (quotient by a normal subgroup,
// or a cited minimal-model reduction) or terminates the branch with a
// rationality criterion.  Every step carries a classical citation and an
// evidence payload whose fields can be recomputed from scratch.
enum class StepKind {
  QUOTIENT_BY_NORMAL,
  MMP_REDUCTION,
  TORIC_TERMINAL,
  CST_TERMINAL,
  P1_BUNDLE_TERMINAL,
  ISKOVSKIKH_TERMINAL,
};

std::string step_kind_name(StepKind k);
StepKind step_kind_from_name(const std::string& name);

struct CertStep {
  StepKind kind = StepKind::TORIC_TERMINAL;
  std::string citation;
  nlohmann::json evidence;
  std::vector<CertStep> children;

  nlohmann::json to_json() const;
  static CertStep from_json(const nlohmann::json& j);
};

struct Certificate {
  MatrixGroup root;
  Label cls = Label::A;
  std::vector<CertStep> steps;
  std::string conclusion = "RATIONAL";

  nlohmann::json to_json() const;
  static Certificate from_json(const nlohmann::json& j);
};

// Builds a rationality certificate for a finite projective matrix group.
// The group is classified first; the step tree then depends only on the
// class.  If a classification witness fails re-verification the
// construction aborts with engine_bug_error naming the failing predicate.
Certificate certify(const MatrixGroup& g);

// One stage of the dihedral reduction used for the imprimitive classes:
// the order-12 symmetry of the hexagon is peeled off in normal pieces of
// prime order.  `piece` is quotiented out; `remaining` is what is left.
struct ReductionStep {
  std::string piece_tag;
  long piece_order = 1;
  std::string remaining_tag;
  long remaining_order = 1;

  nlohmann::json to_json() const;
};

// Decomposes the subgroup of the hexagon symmetry group generated by the
// given element labels ("e", "r", ..., "r5s") into a chain of at most three
// normal pieces of prime (or trivial) order: the central piece, the
// rotation piece of the image in S3, and the residual reflection piece.
// The product of the piece orders equals the subgroup order.
std::vector<ReductionStep> d12_reduction_chain(
    const std::vector<std::string>& generators);

struct VerifyReport {
  bool ok = false;
  std::vector<std::string> failures;

  nlohmann::json to_json() const;
};

// Re-derives every claim in a serialized certificate from scratch: the root
// group is re-closed and re-classified, every evidence predicate is re-run,
// and the step tree is compared field by field against a fresh
// recomputation.  Any discrepancy is reported with the step path and field.
VerifyReport verify(const nlohmann::json& certificate_json);
VerifyReport verify(const Certificate& c);

// Human-readable ASCII tree of a certificate.  Runs verification and marks
// each step [ok] or [FAIL].
std::string certificate_report(const Certificate& c);

}  // namespace ratcert
