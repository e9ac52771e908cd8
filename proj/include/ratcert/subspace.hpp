#pragma once

#include <optional>
#include <vector>

#include "ratcert/mat3.hpp"

namespace ratcert {

/// Reduced row echelon form in place; returns the rank.
int rref_inplace(std::vector<std::vector<CycNum>>& a);

/// Basis of the right null space of the m x n matrix a (rows of length n).
std::vector<std::vector<CycNum>> nullspace_of(std::vector<std::vector<CycNum>> a, int ncols);

/// Whether the last row of `rows` lies in the span of the earlier rows;
/// if so, `combo` receives coefficients expressing it in terms of them.
bool dependent_on_previous(const std::vector<std::vector<CycNum>>& rows,
                           std::vector<CycNum>& combo);

/// Solve a x = b for one solution, if any (a given as rows).
std::optional<std::vector<CycNum>> linear_solve(std::vector<std::vector<CycNum>> a,
                                                const std::vector<CycNum>& b);

/// Subspace of K^3 carried by an explicit basis.
struct Subspace {
  std::vector<Vec3> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

Subspace full_space3();
Subspace kernel3(const Mat3& m);
Subspace eigenspace(const Mat3& m, const CycNum& lambda);
Subspace intersect(const Subspace& u, const Subspace& w);

/// Incremental echelon-form span tracker over K^n.
class EchelonSpan {
 public:
  /// Adds the vector; returns true when it enlarged the span.
  bool add(std::vector<CycNum> v);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<std::vector<CycNum>> rows_;  // echelon rows, pivot-normalized
  std::vector<int> pivots_;
};

std::vector<CycNum> mat_to_vec9(const Mat3& m);

/// Distinct eigenvalues of a matrix of finite linear order k; every
/// eigenvalue is a k-th root of unity, so they are found by evaluating the
/// characteristic polynomial at each candidate root instead of factoring.
std::vector<CycNum> eigenvalues_of_finite_order(const Mat3& g, long linear_order);

/// Common refinement of K^3 by the eigenspaces of the given finite-order
/// matrices: the resulting pieces are the maximal subspaces on which every
/// matrix acts as a scalar, so every vector inside a piece is a common
/// eigenvector.  Pieces need not fill dimension 3 (they can even be empty).
std::vector<Subspace> eigen_refinement(const std::vector<Mat3>& mats);

}  // namespace ratcert
