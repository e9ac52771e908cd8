#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "ratcert/cyclotomic.hpp"
#include "ratcert/error.hpp"
#include "ratcert/polynomial.hpp"
#include "ratcert/ratfunc.hpp"
#include "ratcert/rational.hpp"

using namespace ratcert;

TEST_CASE("rational canonical form and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7).is_zero());
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(7, 3) / Rational(7, 3) == Rational(1));
  CHECK(Rational(3, 4).inverse() == Rational(4, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), error);
  CHECK_THROWS_AS(Rational(1, 0), error);
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(-5).sign() == -1);
  CHECK(Rational(22, 7).str() == "22/7");
  CHECK(Rational(-4, 2).str() == "-2");
}

TEST_CASE("rational string parsing and hashing") {
  Rational big = Rational::from_strings("123456789012345678901234567890", "11");
  CHECK(big.num_string() == "123456789012345678901234567890");
  CHECK(big.den_string() == "11");
  CHECK_THROWS_AS(Rational::from_strings("12x", "1"), input_error);
  CHECK_THROWS_AS(Rational::from_strings("1", "0"), input_error);
  CHECK(Rational(3, 6).hash() == Rational(1, 2).hash());
}

TEST_CASE("perfect cube detection") {
  mpz_class r;
  CHECK(perfect_cube_root(mpz_class(27), r));
  CHECK(r == 3);
  CHECK(perfect_cube_root(mpz_class(-27), r));
  CHECK(r == -3);
  CHECK(perfect_cube_root(mpz_class(0), r));
  CHECK(r == 0);
  CHECK(perfect_cube_root(mpz_class(1), r));
  CHECK(r == 1);
  CHECK_FALSE(perfect_cube_root(mpz_class(10), r));
  CHECK_FALSE(perfect_cube_root(mpz_class(-4), r));
}

TEST_CASE("cube roots of unity") {
  const CycNum w = CycNum::zeta(3);
  CHECK((w * w * w).is_one());
  CHECK((w * w + w + CycNum(1)).is_zero());
  CHECK(w.root_of_unity_order() == 3);
  CHECK(CycNum(-1).root_of_unity_order() == 2);
  CHECK(CycNum(1).root_of_unity_order() == 1);
  CHECK(CycNum(2).root_of_unity_order() == std::nullopt);
  CHECK(CycNum(0).root_of_unity_order() == std::nullopt);
}

TEST_CASE("product of (1+z5)(1+z5^4) against frozen hand reduction") {
  // (1+x)(1+x^4) = 1 + x + x^4 + x^5; with x^5 = 1 and
  // x^4 = -(1+x+x^2+x^3) this collapses to 1 - x^2 - x^3.
  const CycNum a = CycNum(1) + CycNum::zeta(5);
  const CycNum b = CycNum(1) + CycNum::zeta_pow(5, 4);
  const CycNum p = a * b;
  CHECK(p.conductor() == 5);
  const std::vector<Rational> expect = {Rational(1), Rational(0), Rational(-1), Rational(-1)};
  CHECK(p.coords() == expect);
  CHECK(oracles::complex_close(oracles::complex_eval(p),
                               oracles::complex_eval(a) * oracles::complex_eval(b)));
}

TEST_CASE("embedding into larger conductors") {
  const CycNum one3 = CycNum(Rational(1), 3);
  const CycNum e = one3.embedded(12);
  CHECK(e.conductor() == 12);
  CHECK(e.is_one());

  const CycNum w6 = CycNum::zeta(3).embedded(6);
  CHECK(w6.pow(3).is_one());

  // z4 inside Q(zeta_12) is z12^3 on the phi(12) = 4 power basis.
  const CycNum i12 = CycNum::zeta(4).embedded(12);
  CHECK(i12 == CycNum::zeta_pow(12, 3));
  CHECK(i12.coords() ==
        std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(1)});
  CHECK(oracles::complex_close(oracles::complex_eval(i12),
                               oracles::complex_eval(CycNum::zeta(4))));

  CHECK_THROWS_AS(CycNum::zeta(5).embedded(12), error);
}

TEST_CASE("order of 1 + omega by repeated multiplication") {
  const CycNum x = CycNum(1) + CycNum::zeta(3);  // equals -omega^2
  CHECK(x.root_of_unity_order() == 6);
  CycNum acc = x;
  long first_one = 0;
  for (long k = 1; k <= 12; ++k) {
    if (acc.is_one()) {
      first_one = k;
      break;
    }
    acc *= x;
  }
  CHECK(first_one == 6);
}

TEST_CASE("field axioms on random values") {
  std::mt19937_64 rng(20240811);
  const std::vector<int> conductors = {1, 3, 4, 5, 6, 8, 12};
  for (int trial = 0; trial < 100; ++trial) {
    const CycNum a = oracles::random_cyc(rng, conductors);
    const CycNum b = oracles::random_cyc(rng, conductors);
    const CycNum c = oracles::random_cyc(rng, conductors);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("embedding is injective and a ring homomorphism") {
  std::mt19937_64 rng(20240812);
  const std::vector<int> conductors = {2, 3, 4, 6, 8, 12};
  std::uniform_int_distribution<int> factor(2, 3);
  int checked = 0;
  while (checked < 200) {
    const CycNum a = oracles::random_cyc(rng, conductors);
    const CycNum b = oracles::random_cyc(rng, {a.conductor()});
    const int m = a.conductor() * factor(rng);
    if (m > 24) continue;
    ++checked;
    CHECK((a + b).embedded(m) == a.embedded(m) + b.embedded(m));
    CHECK((a * b).embedded(m) == a.embedded(m) * b.embedded(m));
    if (a != b) CHECK(a.embedded(m) != b.embedded(m));
  }
}

TEST_CASE("root of unity orders across all small conductors") {
  for (int n = 1; n <= 24; ++n) {
    for (int k = 1; k < n; ++k) {
      const CycNum x = CycNum::zeta_pow(n, k);
      const long expect = n / std::gcd(n, k);
      CHECK(x.root_of_unity_order() == expect);
    }
  }
}

TEST_CASE("powers and inverses") {
  const CycNum z = CycNum::zeta(7);
  CHECK(z.pow(7).is_one());
  CHECK(z.pow(-2) == z.pow(5));
  CHECK(z.pow(0).is_one());
  CHECK_THROWS_AS(CycNum(0).inverse(), error);
  const CycNum y = CycNum(1) + CycNum::zeta(5) * CycNum(Rational(2, 3));
  CHECK((y * y.inverse()).is_one());
}

TEST_CASE("equality across conductors") {
  CHECK(CycNum(Rational(1), 3) == CycNum(1));
  CHECK(CycNum::zeta(3).embedded(12) == CycNum::zeta(3).embedded(6).embedded(12));
  CHECK(CycNum::zeta(3) == CycNum::zeta_pow(6, 2));
  CHECK(CycNum::zeta(3) != CycNum::zeta(4));
  // Non-rational values whose compositum is out of range cannot be compared.
  CHECK_THROWS_AS(CycNum::zeta(49) == CycNum::zeta(45), conductor_limit_error);
}

TEST_CASE("conductor bound is enforced") {
  CHECK_THROWS_AS(CycNum::zeta(121), conductor_limit_error);
  CHECK_NOTHROW(CycNum::zeta(120));
}

TEST_CASE("cyclotomic polynomial table spot checks") {
  // Phi_12 = x^4 - x^2 + 1.
  const auto& p12 = cyclotomic_poly(12);
  CHECK(p12.degree() == 4);
  CHECK(p12.coeff(0) == Rational(1));
  CHECK(p12.coeff(2) == Rational(-1));
  CHECK(p12.coeff(4) == Rational(1));
  CHECK(p12.coeff(1).is_zero());
  // Phi_105 is the first cyclotomic polynomial with a coefficient of
  // absolute value 2 (at degree 7).
  const auto& p105 = cyclotomic_poly(105);
  CHECK(p105.degree() == euler_phi(105));
  CHECK(p105.coeff(7) == Rational(-2));
}

TEST_CASE("json round trip is bit exact") {
  const CycNum x(5, {Rational(1, 2), Rational::from_strings("123456789012345678901234567890", "7"),
                     Rational(0), Rational(-3)});
  const nlohmann::json j = x.to_json();
  const CycNum y = CycNum::from_json(j);
  CHECK(y.conductor() == x.conductor());
  CHECK(y.coords() == x.coords());

  // Small coordinates serialize as plain integers.
  const nlohmann::json k = CycNum::zeta(3).to_json();
  CHECK(k["n"] == 3);
  CHECK(k["c"][1][0] == 1);
  CHECK(k["c"][1][1] == 1);

  CHECK_THROWS_AS(CycNum::from_json(nlohmann::json::parse("{\"n\": 3}")), input_error);
  CHECK_THROWS_AS(CycNum::from_json(nlohmann::json::parse("{\"n\": 500, \"c\": []}")),
                  input_error);
  CHECK_THROWS_AS(CycNum::from_json(nlohmann::json::parse("{\"n\": 3, \"c\": [[1]]}")),
                  input_error);
}

TEST_CASE("polynomial division and gcd") {
  using P = Poly<Rational>;
  std::mt19937_64 rng(20240813);
  std::uniform_int_distribution<long> coef(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> ac, bc;
    for (int i = 0; i < 6; ++i) ac.emplace_back(coef(rng));
    for (int i = 0; i < 3; ++i) bc.emplace_back(coef(rng));
    P a{std::move(ac)}, b{std::move(bc)};
    if (b.is_zero()) continue;
    auto [q, r] = P::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK((r.is_zero() || r.degree() < b.degree()));
  }
  // gcd of (x-1)(x+2) and (x-1)(x+3) is x-1 (monic).
  P x1{{Rational(-1), Rational(1)}};
  P x2{{Rational(2), Rational(1)}};
  P x3{{Rational(3), Rational(1)}};
  CHECK(P::gcd(x1 * x2, x1 * x3) == x1);
}

TEST_CASE("rational function reduction and series") {
  using P = Poly<Rational>;
  using R = RatFunc<Rational>;
  // (x^2-1)/(x-1) reduces to x+1.
  P num{{Rational(-1), Rational(0), Rational(1)}};
  P den{{Rational(-1), Rational(1)}};
  R f(num, den);
  CHECK(f.is_polynomial());
  CHECK(f.num() == P{{Rational(1), Rational(1)}});
  CHECK(f.den() == P::constant(Rational(1)));

  // 1/(1-t): all series coefficients are 1.
  R geo(P::constant(Rational(1)), P{{Rational(1), Rational(-1)}});
  for (const auto& c : geo.series_prefix(10)) CHECK(c == Rational(1));

  // 1/((1-t)(1-t^2)) counts partitions into parts of size 1 and 2.
  P d2{{Rational(1), Rational(0), Rational(-1)}};
  R two(P::constant(Rational(1)), P{{Rational(1), Rational(-1)}} * d2);
  const std::vector<Rational> expect = {Rational(1), Rational(1), Rational(2),
                                        Rational(2), Rational(3), Rational(3)};
  CHECK(two.series_prefix(6) == expect);

  // Denominators are kept monic: 1/(2-2t) has monic denominator (1-t)... times 1/2.
  R half(P::constant(Rational(1)), P{{Rational(2), Rational(-2)}});
  CHECK(half.den().leading() == Rational(1));
  CHECK(half.num() == P::constant(Rational(-1, 2)));

  CHECK_THROWS_AS(R(P::constant(Rational(1)), P()), error);
}

TEST_CASE("rational function arithmetic over cyclotomics") {
  using PC = Poly<CycNum>;
  using RC = RatFunc<CycNum>;
  const CycNum w = CycNum::zeta(3);
  // 1/(1 - w t) + 1/(1 - w^2 t) + 1/(1 - t) has rational coefficients.
  RC sum;
  for (long k = 0; k < 3; ++k) {
    PC den{{CycNum(1), -w.pow(k)}};
    sum = sum + RC(PC::constant(CycNum(1)), den);
  }
  auto rat = sum.map<Rational>([](const CycNum& c) { return c.as_rational(); });
  // Equals 3/(1-t^3) after reduction: series is 3,0,0,3,0,0,...
  const auto s = rat.series_prefix(7);
  for (int i = 0; i < 7; ++i) CHECK(s[static_cast<std::size_t>(i)] ==
                                    (i % 3 == 0 ? Rational(3) : Rational(0)));
}
