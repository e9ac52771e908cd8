#include "ratcert/cyclotomic.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ratcert/error.hpp"

namespace ratcert {

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

std::vector<int> divisors_ascending(int n) {
  std::vector<int> out;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Tables {
  std::array<Poly<Rational>, kMaxConductor + 1> phi;
  std::array<int, kMaxConductor + 1> totient{};
};

const Tables& tables() {
  static Tables t;
  static std::once_flag built;
  std::call_once(built, [] {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed in order.
    for (int n = 1; n <= kMaxConductor; ++n) {
      t.totient[static_cast<std::size_t>(n)] = euler_phi(n);
      std::vector<Rational> xn(static_cast<std::size_t>(n) + 1, Rational());
      xn[0] = Rational(-1);
      xn[static_cast<std::size_t>(n)] = Rational(1);
      Poly<Rational> num{std::move(xn)};
      for (int d : divisors_ascending(n)) {
        if (d == n) continue;
        num = num / t.phi[static_cast<std::size_t>(d)];
      }
      t.phi[static_cast<std::size_t>(n)] = num;
    }
  });
  return t;
}

void check_conductor(long n) {
  if (n < 1) throw input_error("conductor must be positive");
  if (n > kMaxConductor)
    throw conductor_limit_error("conductor " + std::to_string(n) + " exceeds the supported bound " +
                                std::to_string(kMaxConductor));
}

}  // namespace

const Poly<Rational>& cyclotomic_poly(int n) {
  check_conductor(n);
  return tables().phi[static_cast<std::size_t>(n)];
}

CycNum::CycNum(Rational v, int n) : n_(n) {
  check_conductor(n);
  coords_.assign(static_cast<std::size_t>(tables().totient[static_cast<std::size_t>(n)]),
                 Rational());
  coords_[0] = std::move(v);
}

CycNum::CycNum(int n, std::vector<Rational> coords) : n_(n) {
  check_conductor(n);
  reduce(std::move(coords));
}

void CycNum::reduce(std::vector<Rational>&& raw) {
  const int ph = tables().totient[static_cast<std::size_t>(n_)];
  if (static_cast<int>(raw.size()) > ph) {
    Poly<Rational> p{std::move(raw)};
    p = p % cyclotomic_poly(n_);
    raw = p.coeffs();
  }
  raw.resize(static_cast<std::size_t>(ph), Rational());
  coords_ = std::move(raw);
}

CycNum CycNum::zeta(int n) {
  check_conductor(n);
  std::vector<Rational> c(2, Rational());
  c[1] = Rational(1);
  return CycNum(n, std::move(c));
}

CycNum CycNum::zeta_pow(int n, long k) {
  check_conductor(n);
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational());
  c[static_cast<std::size_t>(k)] = Rational(1);
  return CycNum(n, std::move(c));
}

bool CycNum::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycNum::is_one() const {
  if (!coords_[0].is_one()) return false;
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return false;
  return true;
}

Rational CycNum::as_rational() const {
  if (!is_rational()) throw error("value is not rational: " + str());
  return coords_[0];
}

CycNum CycNum::embedded(int m) const {
  check_conductor(m);
  if (m == n_) return *this;
  if (m % n_ != 0)
    throw error("cannot embed conductor " + std::to_string(n_) + " into " + std::to_string(m));
  // zeta_n = zeta_m^{m/n}, so substitute x -> x^{m/n} and reduce mod Phi_m.
  Poly<Rational> p{std::vector<Rational>(coords_)};
  Poly<Rational> q = p.stretch(m / n_) % cyclotomic_poly(m);
  return CycNum(m, q.coeffs());
}

namespace {
int common_conductor(int a, int b) {
  const long l = lcm_long(a, b);
  if (l > kMaxConductor)
    throw conductor_limit_error("compositum conductor " + std::to_string(l) +
                                " exceeds the supported bound " + std::to_string(kMaxConductor));
  return static_cast<int>(l);
}
}  // namespace

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.is_rational()) {  // fast path: no conductor change needed
    coords_[0] += o.coords_[0];
    return *this;
  }
  if (is_rational() && n_ != o.n_) {
    Rational v = coords_[0];
    *this = o;
    coords_[0] += v;
    return *this;
  }
  if (n_ != o.n_) {
    const int m = common_conductor(n_, o.n_);
    *this = embedded(m);
    return *this += o.embedded(m);
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.is_rational()) {
    const Rational& v = o.coords_[0];
    for (auto& c : coords_) c *= v;
    return *this;
  }
  if (is_rational()) {
    Rational v = coords_[0];
    *this = o;
    for (auto& c : coords_) c *= v;
    return *this;
  }
  if (n_ != o.n_) {
    const int m = common_conductor(n_, o.n_);
    *this = embedded(m);
    return *this *= o.embedded(m);
  }
  Poly<Rational> p{std::vector<Rational>(coords_)};
  Poly<Rational> q{std::vector<Rational>(o.coords_)};
  reduce(std::vector<Rational>((p * q).coeffs()));
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= o.inverse(); }

CycNum CycNum::inverse() const {
  if (is_zero()) throw error("division by zero");
  if (is_rational()) return CycNum(coords_[0].inverse(), n_);
  // Phi_n is irreducible over Q, so gcd(f, Phi_n) = 1 and the extended
  // Euclidean algorithm yields u with u*f = 1 mod Phi_n.
  Poly<Rational> f{std::vector<Rational>(coords_)};
  Poly<Rational> r0 = cyclotomic_poly(n_), r1 = f;
  Poly<Rational> s0, s1 = Poly<Rational>::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r2] = Poly<Rational>::divmod(r0, r1);
    Poly<Rational> s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd (a nonzero constant), s0 * f = r0 mod Phi_n.
  if (r0.degree() != 0) throw engine_bug_error("cyclotomic polynomial split unexpectedly");
  Poly<Rational> u = (s0 * (Rational(1) / r0.coeff(0))) % cyclotomic_poly(n_);
  return CycNum(n_, u.coeffs());
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum acc(Rational(1), n_);
  CycNum base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::optional<long> CycNum::root_of_unity_order() const {
  if (is_zero()) return std::nullopt;
  if (is_rational()) {
    if (coords_[0].is_one()) return 1;
    if (coords_[0] == Rational(-1)) return 2;
    return std::nullopt;
  }
  // Roots of unity inside Q(zeta_n) form the cyclic group generated by
  // -zeta_n, of order lcm(2, n); test divisors in ascending order.
  const long bound = lcm_long(2, n_);
  for (int d : divisors_ascending(static_cast<int>(bound))) {
    if (d == 1) continue;  // would have been caught by the rational branch
    if (pow(d).is_one()) return d;
  }
  return std::nullopt;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.n_ == b.n_) return a.coords_ == b.coords_;
  const bool ar = a.is_rational(), br = b.is_rational();
  if (ar != br) return false;
  if (ar) return a.coords_[0] == b.coords_[0];
  const long l = lcm_long(a.n_, b.n_);
  if (l > kMaxConductor)
    throw conductor_limit_error("equality test needs conductor " + std::to_string(l) +
                                " beyond the supported bound");
  return a.embedded(static_cast<int>(l)).coords_ == b.embedded(static_cast<int>(l)).coords_;
}

int CycNum::cmp_same_conductor(const CycNum& a, const CycNum& b) {
  if (a.n_ != b.n_) throw engine_bug_error("cmp_same_conductor on mixed conductors");
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (a.coords_[i] < b.coords_[i]) return -1;
    if (b.coords_[i] < a.coords_[i]) return 1;
  }
  return 0;
}

std::size_t CycNum::hash() const {
  std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ULL;
  for (const auto& c : coords_) {
    h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string CycNum::str() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    if (any) os << " + ";
    os << coords_[i].str();
    if (i >= 1) os << "*z" << n_ << (i > 1 ? "^" + std::to_string(i) : "");
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.str(); }

namespace {
nlohmann::json int_to_json(const std::string& dec) {
  // Emit as a JSON integer when it fits in 64 bits, else as a string.
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(dec, &pos);
    if (pos == dec.size()) return v;
  } catch (const std::exception&) {
  }
  return dec;
}

std::string json_to_int_string(const nlohmann::json& j) {
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_string()) return j.get<std::string>();
  throw input_error("expected integer or integer string in cyclotomic coordinates");
}
}  // namespace

nlohmann::json CycNum::to_json() const {
  nlohmann::json c = nlohmann::json::array();
  for (const auto& q : coords_)
    c.push_back({int_to_json(q.num_string()), int_to_json(q.den_string())});
  return {{"n", n_}, {"c", c}};
}

CycNum CycNum::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("c"))
    throw input_error("cyclotomic value must be an object with fields \"n\" and \"c\"");
  if (!j["n"].is_number_integer()) throw input_error("conductor \"n\" must be an integer");
  const long n = j["n"].get<long>();
  check_conductor(n);
  if (!j["c"].is_array()) throw input_error("coordinates \"c\" must be an array");
  std::vector<Rational> coords;
  for (const auto& e : j["c"]) {
    if (!e.is_array() || e.size() != 2)
      throw input_error("each coordinate must be a [numerator, denominator] pair");
    coords.push_back(Rational::from_strings(json_to_int_string(e[0]), json_to_int_string(e[1])));
  }
  return CycNum(static_cast<int>(n), std::move(coords));
}

void CycNum::to_complex(double& re, double& im) const {
  re = 0.0;
  im = 0.0;
  const double theta = 2.0 * 3.14159265358979323846 / n_;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const double v = coords_[i].to_double();
    re += v * std::cos(theta * static_cast<double>(i));
    im += v * std::sin(theta * static_cast<double>(i));
  }
}

}  // namespace ratcert
