#include "ratcert/projective.hpp"

#include <mutex>
#include <numeric>
#include <optional>
#include <vector>

#include "ratcert/error.hpp"
#include "ratcert/group.hpp"

namespace ratcert {

const CycNum& omega_at(int m) {
  // Cache omega embedded at every multiple of 3 up to the conductor bound.
  static std::array<CycNum, kMaxConductor + 1> cache;
  static std::once_flag built;
  std::call_once(built, [] {
    for (int k = 3; k <= kMaxConductor; k += 3) cache[static_cast<std::size_t>(k)] =
        CycNum::zeta(3).embedded(k);
  });
  if (m < 3 || m % 3 != 0 || m > kMaxConductor)
    throw engine_bug_error("omega requested at conductor not divisible by 3");
  return cache[static_cast<std::size_t>(m)];
}

namespace {

/// Exact cube root of a rational number, if one exists.
bool rational_cube_root(const Rational& r, Rational& out) {
  mpz_class num_root, den_root;
  if (!perfect_cube_root(r.raw().get_num(), num_root)) return false;
  if (!perfect_cube_root(r.raw().get_den(), den_root)) return false;
  out = Rational(mpq_class(num_root, den_root));
  return true;
}

/// Exact positive rational k-th root, if one exists (v >= 0).
bool rational_kth_root(const Rational& v, unsigned long k, Rational& out) {
  if (v.sign() < 0) return false;
  mpz_class num_root, den_root;
  if (mpz_root(num_root.get_mpz_t(), v.raw().get_num().get_mpz_t(), k) == 0) return false;
  if (mpz_root(den_root.get_mpz_t(), v.raw().get_den().get_mpz_t(), k) == 0) return false;
  return (out = Rational(mpq_class(num_root, den_root)), true);
}

/// x^e for any integer e (x nonzero when e < 0).
CycNum cyc_pow_signed(const CycNum& x, long e) {
  if (e < 0) return x.inverse().pow(-e);
  return x.pow(e);
}

/// Some s with s^3 = v, for v of the form rational * root-of-unity; nullopt
/// when v is not of that shape or the rational part is not a perfect cube.
/// Throws conductor_limit_error when the root exists but lives beyond the
/// conductor bound.
std::optional<CycNum> cube_root_rational_times_root(const CycNum& v) {
  if (v.is_zero()) throw error("cube root of zero determinant");
  Rational r;
  CycNum u;
  if (v.is_rational()) {
    r = v.as_rational();
    u = CycNum(1);
  } else {
    // Split v = r * u with r rational > 0 and u a root of unity: raising v
    // to L = lcm(2, conductor) kills any root-of-unity factor.
    const long L = lcm_long(2, v.conductor());
    const CycNum vL = v.pow(L);
    if (!vL.is_rational()) return std::nullopt;
    if (!rational_kth_root(vL.as_rational(), static_cast<unsigned long>(L), r))
      return std::nullopt;
    u = v / CycNum(r);
    if (!u.root_of_unity_order()) return std::nullopt;
  }
  // Rational part: fold a sign into the root-of-unity factor so the cube
  // root of the positive remainder can be taken exactly.
  if (r.sign() < 0) {
    r = -r;
    u = -u;
  }
  Rational a;
  if (!rational_cube_root(r, a)) return std::nullopt;
  if (u.is_one()) return CycNum(a);
  if (u.is_rational()) return CycNum(a) * CycNum(-1);  // u = -1 and (-1)^3 = -1

  // Root-of-unity part: discrete log in the full group of roots of unity of
  // Q(zeta_N), which is cyclic of order lcm(2, N): generated by zeta_N for
  // N even and by -zeta_N for N odd.
  const int N = u.conductor();
  const bool even = (N % 2 == 0);
  const long L = even ? N : 2L * N;
  const CycNum g = even ? CycNum::zeta(N) : -CycNum::zeta(N);
  long j = -1;
  CycNum p(Rational(1), N);
  for (long k = 0; k < L; ++k) {
    if (p == u) {
      j = k;
      break;
    }
    p *= g;
  }
  if (j < 0) throw engine_bug_error("discrete log failed for a root of unity");
  CycNum b;
  if (L % 3 != 0) {
    // 3 is invertible mod L.
    long inv3 = 1;
    while ((3 * inv3) % L != 1) ++inv3;
    b = g.pow((j * inv3) % L);
  } else if (j % 3 == 0) {
    b = g.pow(j / 3);
  } else {
    // Need the next field up: the matching generator g' at conductor 3N
    // satisfies g'^3 = g, so u = g'^{3j} and g'^j is a cube root.
    const long N3 = 3L * N;
    if (N3 > kMaxConductor)
      throw conductor_limit_error("cube root of determinant needs conductor " +
                                  std::to_string(N3) + " beyond the supported bound");
    const CycNum g3 = even ? CycNum::zeta(static_cast<int>(N3))
                           : -CycNum::zeta(static_cast<int>(N3));
    b = g3.pow(j);
  }
  return CycNum(a) * b;
}

/// Legendre symbol of t modulo an odd prime p.
int legendre(long t, long p) {
  long r = 1;
  long base = t % p;
  long e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = (r * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

/// Quadratic Gauss sum for an odd prime p, embedded at conductor n with
/// p | n.  Its square is p for p = 1 mod 4 and -p for p = 3 mod 4, so it
/// realizes the quadratic radical of p inside the cyclotomic field.
CycNum gauss_sum(long p, int n) {
  CycNum s;
  for (long t = 1; t < p; ++t) {
    const CycNum term = CycNum::zeta_pow(static_cast<int>(p), t);
    s = legendre(t, p) == 1 ? s + term : s - term;
  }
  return s.embedded(n);
}

/// Cube roots of the form tau * rational * root-of-unity where tau is a
/// product of quadratic Gauss sums available in the field: covers
/// determinants like (sqrt -3)^3 of the classical Fourier-type generators,
/// which are cubes in the field without being rational * root-of-unity.
/// Records (instead of throwing) a conductor limit hit along the way.
std::optional<CycNum> cube_root_via_radicals(const CycNum& v,
                                             std::optional<conductor_limit_error>& deferred) {
  const int n = v.conductor();
  std::vector<CycNum> radicals;
  long rest = n;
  for (long p = 3; p <= rest; p += 2)
    if (rest % p == 0) {
      radicals.push_back(gauss_sum(p, n));
      while (rest % p == 0) rest /= p;
    }
  if (n % 8 == 0)
    radicals.push_back(CycNum::zeta(8).embedded(n) + CycNum::zeta_pow(8, 7).embedded(n));
  const std::size_t count = radicals.size();
  for (std::size_t mask = 1; mask < (static_cast<std::size_t>(1) << count); ++mask) {
    CycNum tau(1);
    for (std::size_t i = 0; i < count; ++i)
      if (mask & (static_cast<std::size_t>(1) << i)) tau *= radicals[i];
    try {
      if (auto b = cube_root_rational_times_root(v / (tau * tau * tau))) return tau * *b;
    } catch (const conductor_limit_error& e) {
      if (!deferred) deferred = e;
    }
  }
  return std::nullopt;
}

/// Cube root via the projective order: when m^k = lambda I with k coprime
/// to 3 and 3 a + k b = 1, the element v^a lambda^{-b} cubes to
/// v^{3a} (lambda^{-3})^b = v^{3a + kb} = v (using v^k = lambda^{-3} for
/// v = 1/det m).  Stays inside the field of m.
std::optional<CycNum> cube_root_via_order(const CycNum& v, const Mat3& m) {
  long k = 0;
  try {
    k = element_order(m, Mode::PROJECTIVE);
  } catch (const error&) {
    return std::nullopt;  // no small finite projective order
  }
  if (k % 3 == 0) return std::nullopt;
  Mat3 p = Mat3::identity();
  for (long i = 0; i < k; ++i) p = p * m;
  if (!p.is_scalar()) throw engine_bug_error("projective order does not give a scalar power");
  const CycNum lambda = p.at(0, 0);
  long beta = 0;
  while ((1 - k * beta) % 3 != 0) ++beta;
  const long alpha = (1 - k * beta) / 3;
  const CycNum a = cyc_pow_signed(v, alpha) * cyc_pow_signed(lambda, -beta);
  if (!(a * a * a == v)) throw engine_bug_error("cube root identity failed");
  return a;
}

}  // namespace

Mat3 det_normalized(const Mat3& m) {
  const CycNum d = m.det();
  if (d.is_zero()) throw input_error("singular matrix has no projective class");
  if (d.is_one()) return m;
  const CycNum v = d.inverse();
  std::optional<conductor_limit_error> deferred;
  try {
    if (auto a = cube_root_rational_times_root(v)) return *a * m;
  } catch (const conductor_limit_error& e) {
    deferred = e;
  }
  if (auto a = cube_root_via_radicals(v, deferred)) return *a * m;
  if (auto a = cube_root_via_order(v, m)) return *a * m;
  if (deferred) throw *deferred;
  throw input_error(
      "matrix determinant has no accessible cube root in the supported "
      "cyclotomic fields; cannot normalize to determinant 1");
}

Mat3 lex_least_det1(const Mat3& m, int M) {
  const CycNum& w = omega_at(M);
  Mat3 best = m.embedded(M);
  Mat3 cand = w * best;
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 9; ++i) {
      const int c = CycNum::cmp_same_conductor(cand.entries()[static_cast<std::size_t>(i)],
                                               best.entries()[static_cast<std::size_t>(i)]);
      if (c < 0) best = cand;
      if (c != 0) break;
    }
    if (k == 0) cand = w * cand;
  }
  return best;
}

ProjElement::ProjElement(const Mat3& m) {
  const Mat3 d1 = det_normalized(m);
  conductor_ = static_cast<int>(lcm_long(3, d1.conductor()));
  if (conductor_ > kMaxConductor)
    throw conductor_limit_error("projective canonical form needs conductor beyond the bound");
  rep_ = lex_least_det1(d1, conductor_);
}

ProjElement::ProjElement(const Mat3& m, int working_conductor) {
  const Mat3 d1 = det_normalized(m);
  conductor_ = working_conductor;
  if (conductor_ % 3 != 0 || conductor_ % d1.conductor() != 0)
    throw engine_bug_error("working conductor incompatible with element");
  rep_ = lex_least_det1(d1, conductor_);
}

ProjElement operator*(const ProjElement& a, const ProjElement& b) {
  if (a.conductor_ != b.conductor_)
    throw engine_bug_error("projective product across different working conductors");
  return ProjElement(lex_least_det1(a.rep_ * b.rep_, a.conductor_), a.conductor_,
                     ProjElement::det1_tag{});
}

ProjElement ProjElement::inverse() const {
  return ProjElement(lex_least_det1(rep_.inverse(), conductor_), conductor_, det1_tag{});
}

bool operator==(const ProjElement& a, const ProjElement& b) {
  if (a.conductor_ == b.conductor_) return a.rep_ == b.rep_;
  return ProjElement::math_equal(a, b);
}

bool ProjElement::math_equal(const ProjElement& a, const ProjElement& b) {
  const long l = lcm_long(a.conductor_, b.conductor_);
  if (l > kMaxConductor)
    throw conductor_limit_error("projective comparison needs conductor beyond the bound");
  return a.at_conductor(static_cast<int>(l)).rep_ == b.at_conductor(static_cast<int>(l)).rep_;
}

ProjElement ProjElement::at_conductor(int m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0 || m % 3 != 0)
    throw engine_bug_error("cannot view element at a non-multiple conductor");
  return ProjElement(lex_least_det1(rep_, m), m, det1_tag{});
}

}  // namespace ratcert
