#include "ratcert/surfgeom.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include "ratcert/error.hpp"
#include "ratcert/mat3.hpp"
#include "ratcert/piclattice.hpp"

namespace ratcert {

namespace {

std::string duval_name(const std::optional<DuValType>& t) {
  return t ? "A" + std::to_string(t->index) : "none";
}

void require_all_pass(const Ledger& led) {
  if (led.all_pass()) return;
  std::string failing;
  for (const LedgerLine& l : led.lines) {
    if (!l.pass) failing += (failing.empty() ? "" : "; ") + l.label;
  }
  throw engine_bug_error("ledger \"" + led.title + "\" has failing lines: " + failing);
}

}  // namespace

void FixedPointDatum::validate(long element_order) const {
  if (element_order <= 0) throw input_error("fixed point validation needs a positive order");
  for (const CycNum& w : tangent_weights) {
    if (element_order % weight_order(w) != 0) {
      throw input_error("tangent weight order does not divide the acting element's order");
    }
  }
}

nlohmann::json FixedPointDatum::to_json() const {
  nlohmann::json loc;
  if (location) {
    loc = nlohmann::json::array();
    for (const CycNum& x : *location) loc.push_back(x.str());
  }
  return {{"label", label},
          {"location", location ? loc : nlohmann::json()},
          {"tangent_weights", {tangent_weights[0].str(), tangent_weights[1].str()}}};
}

long weight_order(const CycNum& w) {
  std::optional<long> order = w.root_of_unity_order();
  if (!order) throw input_error("tangent weight is not a root of unity: " + w.str());
  return *order;
}

std::optional<DuValType> duval_type(const CycNum& w1, const CycNum& w2) {
  long n1 = weight_order(w1);
  long n2 = weight_order(w2);
  if (n1 != n2 || n1 < 2) return std::nullopt;
  // (xi, xi^{n-1}) for a primitive n-th root xi is equivalent to w2 = w1^{-1}.
  if (w1 * w2 != CycNum(1)) return std::nullopt;
  return DuValType{static_cast<int>(n1 - 1)};
}

Rational quotient_k2(long k2, long n, std::optional<Rational> branch_k_multiple) {
  if (n <= 0) throw input_error("quotient group order must be positive");
  Rational free_part(k2, n);
  if (!branch_k_multiple) return free_part;
  Rational scale = Rational(1) - *branch_k_multiple;
  return scale * scale * free_part;
}

Ledger prop2_case_d_ledger() {
  Ledger led;
  led.title = "order-3 quotient chain on the degree-6 Del Pezzo surface";
  Rational kq = quotient_k2(6, 3);
  led.add("K^2 of X/C3 (quotient free outside three A2 points)", kq.str(), "2");
  Rational a_dot_k = Rational(-1, 2) * kq;
  led.add("a . K = (1/2)(a + i(a)) . K = -(1/2) K^2", a_dot_k.str(), "-1");
  Rational a_dot_line = -a_dot_k;
  led.add("a . f^{-1}(l_i) = a . (-K)", a_dot_line.str(), "1");
  Rational bound = Rational(1, 2) * kq;
  led.add("strict bound for a . i(a): (1/2)(a + i(a))^2", bound.str(), "1");
  Rational k_y = kq + Rational(6);
  led.add("K_Y^2 = K_{X/C3}^2 + 6 (six disjoint (-1)-curves contracted)", k_y.str(), "8");
  Rational k_y_direct = Rational(6, 3) + Rational(6);
  led.add("K_Y^2 = (1/3) K_X^2 + 6", k_y_direct.str(), "8");
  require_all_pass(led);
  return led;
}

Ledger dp6_case_ledger() {
  Ledger led;
  led.title = "fixed-point bookkeeping for the minimal cyclic actions on the degree-6 Del Pezzo";
  PicLattice lattice = dp6_lattice();
  led.add("Lefschetz number of the identity (Euler characteristic)",
          std::to_string(lefschetz_count(lattice, "e")), "6");
  long antipodal = lefschetz_count(lattice, "r3");
  led.add("Lefschetz number of the antipodal involution r^3", std::to_string(antipodal), "4");
  CycNum minus_one(-1);
  led.add("Du Val type at each antipodal fixed point, weights (-1,-1)",
          duval_name(duval_type(minus_one, minus_one)), "A1");
  led.add("singular points of X/<r^3>", std::to_string(antipodal) + " x A1", "4 x A1");
  led.add("K^2 of X/<r^3>", quotient_k2(6, 2).str(), "3");
  led.add("Lefschetz number of the order-3 rotation r^2",
          std::to_string(lefschetz_count(lattice, "r2")), "3");
  std::array<long, 3> counts = holo_lefschetz_order3_solve();
  std::ostringstream triple;
  triple << "(" << counts[0] << "," << counts[1] << "," << counts[2] << ")";
  led.add("holomorphic Lefschetz tangent-type counts (a,b,c)", triple.str(), "(0,0,3)");
  CycNum omega = CycNum::zeta(3);
  led.add("Du Val type at each order-3 fixed point, weights (w,w^2)",
          duval_name(duval_type(omega, omega.pow(2))), "A2");
  led.add("weights (w,w) and (w^2,w^2) excluded by the zero counts",
          duval_name(duval_type(omega, omega)), "none");
  led.add("singular points of X/<r^2>", std::to_string(counts[2]) + " x A2", "3 x A2");
  led.add("K^2 of X/<r^2>", quotient_k2(6, 3).str(), "2");
  require_all_pass(led);
  return led;
}

Ledger hurwitz_quadric_ledger() {
  Ledger led;
  led.title = "Hurwitz computation for the quadric involution quotient";
  led.add("K^2 of the quadric", std::to_string(standard_surface(SurfaceKind::QUADRIC).k_squared.value()),
          "8");
  Rational k_y = quotient_k2(8, 2, Rational(-1, 2));
  led.add("K_Y^2 = (1/2)((3/2) K)^2 (branch curve of class -K/2)", k_y.str(), "9");
  led.add("P^2 recovered: K^2 matches",
          std::to_string(standard_surface(SurfaceKind::P2).k_squared.value()), "9");
  require_all_pass(led);
  return led;
}

bool MonomialSublattice::contains(long m1, long m2) const {
  long p = basis[0][0], q = basis[0][1], r = basis[1][1];
  if (p == 0 || r == 0) return false;
  if (m1 % p != 0) return false;
  long t = m1 / p;
  return (m2 - t * q) % r == 0;
}

nlohmann::json MonomialSublattice::to_json() const {
  return {{"basis", {{basis[0][0], basis[0][1]}, {basis[1][0], basis[1][1]}}},
          {"index", index}};
}

namespace {

// Discrete log of a root of unity against the generator of the full torsion
// group of Q(zeta_cond): -zeta for odd conductor, zeta for even.
long torsion_dlog(const CycNum& value, const CycNum& generator, long torsion_order) {
  CycNum power(1);
  for (long t = 0; t < torsion_order; ++t) {
    if (power == value) return t;
    power *= generator;
  }
  throw input_error("diagonal entry ratio is not a root of unity");
}

struct LongMat2 {
  long a[2][2];
};

LongMat2 mat2_mul(const LongMat2& x, const LongMat2& y) {
  LongMat2 p{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) p.a[i][j] = x.a[i][0] * y.a[0][j] + x.a[i][1] * y.a[1][j];
  }
  return p;
}

// Extended gcd: returns g >= 0 with g = x*a + y*b.
long ext_gcd(long a, long b, long& x, long& y) {
  if (b == 0) {
    x = (a < 0) ? -1 : 1;
    y = 0;
    return a < 0 ? -a : a;
  }
  long x1 = 0, y1 = 0;
  long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Basis (rows) of { t in Z^2 : c1 t1 + c2 t2 = 0 mod k }.
LongMat2 congruence_kernel(long c1, long c2, long k) {
  c1 = ((c1 % k) + k) % k;
  c2 = ((c2 % k) + k) % k;
  if (c1 == 0 && c2 == 0) return LongMat2{{{1, 0}, {0, 1}}};
  long x = 0, y = 0;
  long g = ext_gcd(c1, c2, x, y);
  long step = k / std::gcd(g, k);
  return LongMat2{{{c2 / g, -c1 / g}, {step * x, step * y}}};
}

}  // namespace

MonomialSublattice invariant_monomial_sublattice(const MatrixGroup& n) {
  const int cond = n.conductor;
  const long torsion = (cond % 2 == 0) ? cond : 2L * cond;
  const CycNum generator =
      (cond % 2 == 0) ? CycNum::zeta(cond) : -CycNum::zeta(cond);
  LongMat2 basis{{{1, 0}, {0, 1}}};
  for (const Mat3& m : n.elements) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i != j && !m.at(i, j).is_zero()) {
          throw input_error(
              "invariant monomial sublattice requires a simultaneously diagonal group");
        }
      }
    }
    CycNum d0 = m.at(0, 0);
    if (d0.is_zero()) throw input_error("diagonal group element with zero diagonal entry");
    CycNum r1 = m.at(1, 1) * d0.inverse();
    CycNum r2 = m.at(2, 2) * d0.inverse();
    long a1 = torsion_dlog(r1, generator, torsion);
    long a2 = torsion_dlog(r2, generator, torsion);
    // Constraint a1*m1 + a2*m2 = 0 mod torsion, rewritten in the coordinates
    // of the current sublattice basis and intersected.
    long c1 = a1 * basis.a[0][0] + a2 * basis.a[0][1];
    long c2 = a1 * basis.a[1][0] + a2 * basis.a[1][1];
    basis = mat2_mul(congruence_kernel(c1, c2, torsion), basis);
  }
  // Row-style Hermite normal form [[p, q], [0, r]] with p, r > 0, 0 <= q < r.
  long a1 = basis.a[0][0], b1 = basis.a[0][1];
  long a2 = basis.a[1][0], b2 = basis.a[1][1];
  long det = a1 * b2 - b1 * a2;
  if (det == 0) throw engine_bug_error("invariant monomial sublattice degenerated");
  long x = 0, y = 0;
  long p = ext_gcd(a1, a2, x, y);
  long q = x * b1 + y * b2;
  long r = det / p;
  if (r < 0) r = -r;
  q = ((q % r) + r) % r;
  MonomialSublattice result;
  result.basis = {{{p, q}, {0, r}}};
  result.index = p * r;
  return result;
}

}  // namespace ratcert
