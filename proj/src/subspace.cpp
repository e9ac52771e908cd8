#include "ratcert/subspace.hpp"

#include "ratcert/error.hpp"

namespace ratcert {

int rref_inplace(std::vector<std::vector<CycNum>>& a) {
  if (a.empty()) return 0;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
    auto& prow = a[static_cast<std::size_t>(rank)];
    const CycNum inv = prow[static_cast<std::size_t>(col)].inverse();
    for (auto& x : prow) x *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      auto& row = a[static_cast<std::size_t>(r)];
      const CycNum f = row[static_cast<std::size_t>(col)];
      if (f.is_zero()) continue;
      for (int c = 0; c < cols; ++c)
        row[static_cast<std::size_t>(c)] -= f * prow[static_cast<std::size_t>(c)];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<CycNum>> nullspace_of(std::vector<std::vector<CycNum>> a, int ncols) {
  rref_inplace(a);
  // Locate pivot columns.
  std::vector<int> pivot_of_col(static_cast<std::size_t>(ncols), -1);
  int r = 0;
  for (int col = 0; col < ncols; ++col) {
    if (r < static_cast<int>(a.size()) &&
        !a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
      pivot_of_col[static_cast<std::size_t>(col)] = r;
      ++r;
    }
  }
  std::vector<std::vector<CycNum>> basis;
  for (int freec = 0; freec < ncols; ++freec) {
    if (pivot_of_col[static_cast<std::size_t>(freec)] >= 0) continue;
    std::vector<CycNum> v(static_cast<std::size_t>(ncols), CycNum(0));
    v[static_cast<std::size_t>(freec)] = CycNum(1);
    for (int col = 0; col < ncols; ++col) {
      const int p = pivot_of_col[static_cast<std::size_t>(col)];
      if (p >= 0) v[static_cast<std::size_t>(col)] =
          -a[static_cast<std::size_t>(p)][static_cast<std::size_t>(freec)];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool dependent_on_previous(const std::vector<std::vector<CycNum>>& rows,
                           std::vector<CycNum>& combo) {
  if (rows.empty()) return false;
  const std::size_t k = rows.size() - 1;
  if (k == 0) {
    // Dependent iff the single row is zero.
    for (const auto& x : rows[0])
      if (!x.is_zero()) return false;
    combo.clear();
    return true;
  }
  // Solve (rows[0..k-1])^T c = rows[k]^T.
  const std::size_t n = rows[0].size();
  std::vector<std::vector<CycNum>> a(n, std::vector<CycNum>(k));
  std::vector<CycNum> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = rows[j][i];
    b[i] = rows[k][i];
  }
  auto sol = linear_solve(std::move(a), b);
  if (!sol) return false;
  combo = std::move(*sol);
  return true;
}

std::optional<std::vector<CycNum>> linear_solve(std::vector<std::vector<CycNum>> a,
                                                const std::vector<CycNum>& b) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  for (std::size_t i = 0; i < m; ++i) a[i].push_back(b[i]);
  rref_inplace(a);
  std::vector<CycNum> x(n, CycNum(0));
  for (std::size_t r = 0; r < m; ++r) {
    std::size_t lead = 0;
    while (lead <= n && a[r][lead].is_zero()) ++lead;
    if (lead == n + 1) continue;       // zero row
    if (lead == n) return std::nullopt;  // 0 = nonzero: inconsistent
    x[lead] = a[r][n];
  }
  return x;
}

Subspace full_space3() {
  Subspace s;
  for (int i = 0; i < 3; ++i) {
    Vec3 v{CycNum(0), CycNum(0), CycNum(0)};
    v[static_cast<std::size_t>(i)] = CycNum(1);
    s.basis.push_back(std::move(v));
  }
  return s;
}

Subspace kernel3(const Mat3& m) {
  std::vector<std::vector<CycNum>> rows(3, std::vector<CycNum>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
  Subspace s;
  for (auto& v : nullspace_of(std::move(rows), 3)) s.basis.push_back(Vec3{v[0], v[1], v[2]});
  return s;
}

Subspace eigenspace(const Mat3& m, const CycNum& lambda) {
  return kernel3(m - Mat3::scalar(lambda));
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.dim() == 0 || w.dim() == 0) return Subspace{};
  // Solve sum a_i u_i - sum b_j w_j = 0; the a-part spans the intersection.
  const std::size_t nu = u.basis.size(), nw = w.basis.size();
  std::vector<std::vector<CycNum>> rows(3, std::vector<CycNum>(nu + nw));
  for (std::size_t c = 0; c < nu; ++c)
    for (std::size_t r = 0; r < 3; ++r) rows[r][c] = u.basis[c][r];
  for (std::size_t c = 0; c < nw; ++c)
    for (std::size_t r = 0; r < 3; ++r) rows[r][nu + c] = -w.basis[c][r];
  Subspace s;
  EchelonSpan seen;
  for (auto& nv : nullspace_of(std::move(rows), static_cast<int>(nu + nw))) {
    Vec3 v{CycNum(0), CycNum(0), CycNum(0)};
    for (std::size_t c = 0; c < nu; ++c)
      for (std::size_t r = 0; r < 3; ++r) v[r] += nv[c] * u.basis[c][r];
    std::vector<CycNum> flat(v.begin(), v.end());
    if (seen.add(std::move(flat))) s.basis.push_back(std::move(v));
  }
  return s;
}

bool EchelonSpan::add(std::vector<CycNum> v) {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const auto p = static_cast<std::size_t>(pivots_[k]);
    if (v[p].is_zero()) continue;
    const CycNum f = v[p];
    for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * rows_[k][c];
  }
  int pivot = -1;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!v[c].is_zero()) {
      pivot = static_cast<int>(c);
      break;
    }
  if (pivot < 0) return false;
  const CycNum inv = v[static_cast<std::size_t>(pivot)].inverse();
  for (auto& x : v) x *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

std::vector<CycNum> mat_to_vec9(const Mat3& m) {
  return std::vector<CycNum>(m.entries().begin(), m.entries().end());
}

std::vector<CycNum> eigenvalues_of_finite_order(const Mat3& g, long linear_order) {
  const Poly<CycNum> cp = g.charpoly();
  std::vector<CycNum> out;
  for (long j = 0; j < linear_order; ++j) {
    const CycNum cand = CycNum::zeta_pow(static_cast<int>(linear_order), j);
    if (cp.eval(cand).is_zero()) out.push_back(cand);
    if (out.size() == 3) break;
  }
  if (out.empty()) throw engine_bug_error("finite-order matrix with no root-of-unity eigenvalue");
  return out;
}

std::vector<Subspace> eigen_refinement(const std::vector<Mat3>& mats) {
  std::vector<Subspace> pieces{full_space3()};
  for (const auto& m : mats) {
    if (m.is_scalar()) continue;
    const long k = [&] {
      Mat3 acc = m;
      for (long o = 1; o <= 9000; ++o) {
        if (acc.is_identity()) return o;
        acc = acc * m;
      }
      throw engine_bug_error("eigen refinement needs finite-order matrices");
    }();
    const auto eigs = eigenvalues_of_finite_order(m, k);
    std::vector<Subspace> next;
    for (const auto& piece : pieces)
      for (const auto& lambda : eigs) {
        Subspace cut = intersect(piece, eigenspace(m, lambda));
        if (cut.dim() > 0) next.push_back(std::move(cut));
      }
    pieces = std::move(next);
    if (pieces.empty()) break;
  }
  return pieces;
}

}  // namespace ratcert
