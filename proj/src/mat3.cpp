#include "ratcert/mat3.hpp"

#include <sstream>

#include "ratcert/error.hpp"
#include "ratcert/subspace.hpp"

namespace ratcert {

Mat3 Mat3::identity() {
  Mat3 m;
  for (int i = 0; i < 3; ++i) m.at(i, i) = CycNum(1);
  return m;
}

Mat3 Mat3::diag(CycNum a, CycNum b, CycNum c) {
  Mat3 m;
  m.at(0, 0) = std::move(a);
  m.at(1, 1) = std::move(b);
  m.at(2, 2) = std::move(c);
  return m;
}

Mat3 Mat3::scalar(const CycNum& s) { return diag(s, s, s); }

Mat3 Mat3::permutation(const std::array<int, 3>& p) {
  Mat3 m;
  for (int j = 0; j < 3; ++j) m.at(p[static_cast<std::size_t>(j)], j) = CycNum(1);
  return m;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CycNum acc = a.at(i, 0) * b.at(0, j);
      acc += a.at(i, 1) * b.at(1, j);
      acc += a.at(i, 2) * b.at(2, j);
      c.at(i, j) = std::move(acc);
    }
  return c;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
  Vec3 r;
  for (int i = 0; i < 3; ++i) {
    CycNum acc = a.at(i, 0) * v[0];
    acc += a.at(i, 1) * v[1];
    acc += a.at(i, 2) * v[2];
    r[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return r;
}

Mat3 operator*(const CycNum& s, const Mat3& a) {
  Mat3 c = a;
  for (int i = 0; i < 9; ++i) c.e_[static_cast<std::size_t>(i)] *= s;
  return c;
}

Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 c = a;
  for (int i = 0; i < 9; ++i) c.e_[static_cast<std::size_t>(i)] += b.e_[static_cast<std::size_t>(i)];
  return c;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 c = a;
  for (int i = 0; i < 9; ++i) c.e_[static_cast<std::size_t>(i)] -= b.e_[static_cast<std::size_t>(i)];
  return c;
}

CycNum Mat3::det() const {
  CycNum d = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1));
  d -= at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0));
  d += at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  return d;
}

CycNum Mat3::trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

CycNum Mat3::minor_sum() const {
  CycNum s = at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1);
  s += at(0, 0) * at(2, 2) - at(0, 2) * at(2, 0);
  s += at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  return s;
}

Poly<CycNum> Mat3::charpoly() const {
  // det(tI - m) = t^3 - tr t^2 + minor_sum t - det.
  return Poly<CycNum>({-det(), minor_sum(), -trace(), CycNum(1)});
}

Mat3 Mat3::transpose() const {
  Mat3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t.at(i, j) = at(j, i);
  return t;
}

Mat3 Mat3::inverse() const {
  const CycNum d = det();
  if (d.is_zero()) throw error("matrix is singular");
  const CycNum dinv = d.inverse();
  Mat3 adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj.at(i, j) = (at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0)) * dinv;
    }
  return adj;
}

bool Mat3::is_scalar() const {
  if (!(at(0, 0) == at(1, 1)) || !(at(0, 0) == at(2, 2))) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return !at(0, 0).is_zero();
}

bool Mat3::is_identity() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

int Mat3::conductor() const {
  long l = 1;
  for (const auto& x : e_) l = lcm_long(l, x.conductor());
  if (l > kMaxConductor)
    throw conductor_limit_error("matrix entries need conductor " + std::to_string(l) +
                                " beyond the supported bound");
  return static_cast<int>(l);
}

Mat3 Mat3::embedded(int m) const {
  Mat3 r;
  for (int i = 0; i < 9; ++i)
    r.e_[static_cast<std::size_t>(i)] = e_[static_cast<std::size_t>(i)].embedded(m);
  return r;
}

bool operator==(const Mat3& a, const Mat3& b) {
  for (int i = 0; i < 9; ++i)
    if (a.e_[static_cast<std::size_t>(i)] != b.e_[static_cast<std::size_t>(i)]) return false;
  return true;
}

std::size_t Mat3::hash() const {
  std::size_t h = 0x51ed2701a3c5e9b7ULL;
  for (const auto& x : e_) h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string Mat3::str() const {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (int j = 0; j < 3; ++j) os << at(i, j).str() << (j < 2 ? ", " : "");
    os << "]" << (i == 2 ? "]" : "\n");
  }
  return os.str();
}

nlohmann::json Mat3::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 3; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 3; ++j) row.push_back(at(i, j).to_json());
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat3 Mat3::from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) throw input_error("matrix must be an array of 3 rows");
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != 3) throw input_error("matrix row must have 3 entries");
    for (int jj = 0; jj < 3; ++jj) m.at(i, jj) = CycNum::from_json(row[static_cast<std::size_t>(jj)]);
  }
  return m;
}

Poly<CycNum> minimal_polynomial(const Mat3& m) {
  // Search for the least d with I, m, ..., m^d linearly dependent; the
  // dependence coefficients (made monic) give the minimal polynomial.
  std::vector<std::vector<CycNum>> rows;
  Mat3 p = Mat3::identity();
  for (int d = 0; d <= 3; ++d) {
    std::vector<CycNum> row(p.entries().begin(), p.entries().end());
    rows.push_back(std::move(row));
    std::vector<CycNum> combo;
    if (dependent_on_previous(rows, combo)) {
      // combo holds c_0..c_{d-1} with m^d = sum c_i m^i.
      std::vector<CycNum> coeffs(combo.size() + 1);
      for (std::size_t i = 0; i < combo.size(); ++i) coeffs[i] = -combo[i];
      coeffs[combo.size()] = CycNum(1);
      return Poly<CycNum>(std::move(coeffs));
    }
    p = p * m;
  }
  throw engine_bug_error("3x3 matrix has minimal polynomial of degree at most 3");
}

bool has_squarefree_minimal_polynomial(const Mat3& m) {
  const Poly<CycNum> mp = minimal_polynomial(m);
  const Poly<CycNum> g = Poly<CycNum>::gcd(mp, mp.derivative());
  return g.degree() == 0;
}

std::optional<std::pair<CycNum, CycNum>> repeated_eigenvalue(const Mat3& m) {
  if (m.is_scalar()) return std::nullopt;
  const Poly<CycNum> cp = m.charpoly();
  const Poly<CycNum> g = Poly<CycNum>::gcd(cp, cp.derivative());
  if (g.degree() != 1) return std::nullopt;
  // g is monic of degree 1, so g = x - alpha with alpha the double root.
  const CycNum alpha = CycNum(0) - g.coeff(0);
  const CycNum beta = m.trace() - alpha - alpha;
  return std::make_pair(alpha, beta);
}

}  // namespace ratcert
