#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "ratcert/error.hpp"
#include "ratcert/group.hpp"
#include "ratcert/invariants.hpp"
#include "ratcert/projective.hpp"
#include "ratcert/surface.hpp"

using namespace ratcert;

namespace {

const CycNum kOmega = CycNum::zeta(3);

Mat3 cyc3() { return Mat3::permutation({1, 2, 0}); }
Mat3 swap01() { return Mat3::permutation({1, 0, 2}); }
Mat3 diag_w() { return Mat3::diag(CycNum(1), kOmega, kOmega * kOmega); }

Mat3 hess_v() {
  return Mat3({CycNum(1), CycNum(1), CycNum(1),
               CycNum(1), kOmega, kOmega * kOmega,
               CycNum(1), kOmega * kOmega, kOmega});
}

Mat3 hess_u() { return Mat3::diag(CycNum(1), kOmega, kOmega); }

const MatrixGroup& n18() {
  static const MatrixGroup g = close({diag_w(), cyc3(), swap01()}, Mode::PROJECTIVE);
  return g;
}

const MatrixGroup& hessian216() {
  static const MatrixGroup g =
      close({cyc3(), diag_w(), hess_v(), hess_u()}, Mode::PROJECTIVE);
  return g;
}

const MatrixGroup& icosahedral() {
  static const MatrixGroup g = [] {
    const CycNum z = CycNum::zeta(5);
    const CycNum s = z.pow(2) + z.pow(3);
    const CycNum t = z + z.pow(4);
    return close({Mat3::diag(CycNum(1), z, z.pow(4)),
                  Mat3({CycNum(1), CycNum(1), CycNum(1),
                        CycNum(2), s, t,
                        CycNum(2), t, s})},
                 Mode::PROJECTIVE);
  }();
  return g;
}

const MatrixGroup& klein() {
  static const MatrixGroup g = [] {
    const CycNum z = CycNum::zeta(7);
    auto d = [&](long a, long b) { return z.pow(a) - z.pow(b); };
    const Mat3 r({d(1, 6), d(2, 5), d(4, 3),
                  d(2, 5), d(4, 3), d(1, 6),
                  d(4, 3), d(1, 6), d(2, 5)});
    return close({Mat3::diag(z, z.pow(4), z.pow(2)), cyc3(), r}, Mode::PROJECTIVE);
  }();
  return g;
}

const MatrixGroup& s3_linear() {
  static const MatrixGroup g = close({cyc3(), swap01()}, Mode::LINEAR);
  return g;
}

RatFunc<Rational> product_form(const std::vector<int>& degrees) {
  RatFunc<Rational> den(Poly<Rational>::constant(Rational(1)));
  for (int d : degrees) {
    std::vector<Rational> f(static_cast<std::size_t>(d) + 1, Rational(0));
    f.front() = Rational(1);
    f.back() = Rational(-1);
    den = den * RatFunc<Rational>(Poly<Rational>(std::move(f)));
  }
  return den.reciprocal();
}

bool proportional_vec(const Vec3& a, const Vec3& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(a[i] * b[j] == a[j] * b[i])) return false;
  return true;
}

Mat3 random_unimodular(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-2, 2);
  Mat3 m = Mat3::identity();
  for (int step = 0; step < 4; ++step) {
    int i = static_cast<int>(rng() % 3);
    int j = static_cast<int>(rng() % 3);
    if (i == j) j = (j + 1) % 3;
    int v = entry(rng);
    if (v == 0) v = 1;
    Mat3 shear = Mat3::identity();
    shear.at(i, j) = CycNum(v);
    m = m * shear;
  }
  return m;
}

}  // namespace

TEST_CASE("reflection detection on diagonal examples") {
  const auto r2 = is_reflection(Mat3::diag(CycNum(-1), CycNum(1), CycNum(1)));
  REQUIRE(r2.has_value());
  CHECK(r2->order == 2);
  CHECK(r2->line[0] == CycNum(1));
  CHECK(r2->line[1].is_zero());
  CHECK(r2->line[2].is_zero());

  CHECK_FALSE(is_reflection(diag_w()).has_value());

  const auto r3 = is_reflection(Mat3::diag(kOmega, CycNum(1), CycNum(1)));
  REQUIRE(r3.has_value());
  CHECK(r3->order == 3);
  CHECK(proportional_vec(r3->line, Vec3{CycNum(1), CycNum(0), CycNum(0)}));

  const auto rw = is_reflection(Mat3::diag(kOmega, kOmega, CycNum(1)));
  REQUIRE(rw.has_value());
  CHECK(rw->order == 3);
  CHECK(proportional_vec(rw->line, Vec3{CycNum(0), CycNum(0), CycNum(1)}));
}

TEST_CASE("scalar matrices are rejected as reflections") {
  CHECK_THROWS_AS(is_reflection(Mat3::identity()), input_error);
  CHECK_THROWS_AS(is_reflection(Mat3::scalar(kOmega)), input_error);
}

TEST_CASE("non-semisimple repeated eigenvalue is not a reflection") {
  Mat3 jordan = Mat3::diag(CycNum(1), CycNum(1), CycNum(2));
  jordan.at(0, 1) = CycNum(1);
  CHECK_FALSE(is_reflection(jordan).has_value());
}

TEST_CASE("reflection line is a left eigenvector") {
  // The dual coordinates of the pointwise-fixed line must satisfy l g ~ l.
  for (int idx : reflection_indices(n18())) {
    const Mat3& m = n18().elements[static_cast<std::size_t>(idx)];
    const auto r = is_reflection(m);
    REQUIRE(r.has_value());
    Vec3 image{};
    for (int j = 0; j < 3; ++j) {
      CycNum acc(0);
      for (int i = 0; i < 3; ++i) acc += r->line[i] * m.at(i, j);
      image[j] = acc;
    }
    CHECK(proportional_vec(image, r->line));
  }
}

TEST_CASE("projective element overload agrees with the matrix one") {
  const ProjElement p(Mat3::diag(CycNum(-1), CycNum(1), CycNum(1)));
  const auto r = is_reflection(p);
  REQUIRE(r.has_value());
  CHECK(r->order == 2);
}

TEST_CASE("reflection generation of the catalog groups") {
  CHECK(reflection_generated(n18(), 2L));
  CHECK(reflection_generated(hessian216(), 3L));
  CHECK(reflection_generated(icosahedral(), 2L));
  CHECK(reflection_generated(klein(), 2L));
  CHECK_FALSE(reflection_generated(close({diag_w()}, Mode::PROJECTIVE)));
  CHECK_FALSE(reflection_generated(close({cyc3()}, Mode::PROJECTIVE)));
  // The Hessian group is not generated by its order-2 reflections alone.
  CHECK(reflection_indices(hessian216(), 2L).size() == 9);
  CHECK_FALSE(reflection_generated(hessian216(), 2L));
}

TEST_CASE("reflection counts inside the catalog groups") {
  CHECK(reflection_indices(n18(), 2L).size() == 9);
  CHECK(reflection_indices(hessian216(), 3L).size() == 24);
  CHECK(reflection_indices(icosahedral(), 2L).size() == 15);
  CHECK(reflection_indices(klein(), 2L).size() == 21);
}

TEST_CASE("molien of the trivial group") {
  const MatrixGroup g = close({Mat3::identity()}, Mode::LINEAR);
  const MolienSeries ms = molien(g);
  CHECK(ms.closed_form == product_form({1, 1, 1}));
  REQUIRE(ms.truncation.size() == 31);
  for (int k = 0; k <= 30; ++k)
    CHECK(ms.truncation[static_cast<std::size_t>(k)] ==
          Rational((k + 1) * (k + 2) / 2));
}

TEST_CASE("molien of S3 permutation matrices") {
  const MolienSeries ms = molien(s3_linear());
  CHECK(ms.closed_form == product_form({1, 2, 3}));
  const auto oracle = oracles::molien_truncation_by_summation(s3_linear(), 30);
  CHECK(ms.truncation == oracle);
}

TEST_CASE("molien of a linear C2 reflection") {
  const MatrixGroup g = close({Mat3::diag(CycNum(-1), CycNum(1), CycNum(1))}, Mode::LINEAR);
  const MolienSeries ms = molien(g);
  CHECK(ms.closed_form == product_form({1, 1, 2}));
  const CSTResult cst = shephard_todd_degrees(ms, g);
  CHECK(cst.verdict == CSTVerdict::POLYNOMIAL);
  REQUIRE(cst.degrees.has_value());
  CHECK(*cst.degrees == std::array<int, 3>{1, 1, 2});
  CHECK(cst.reflection_count == 1);
}

TEST_CASE("molien of the linear C3 with no reflections") {
  const MatrixGroup g = close({diag_w()}, Mode::LINEAR);
  const MolienSeries ms = molien(g);
  const auto oracle = oracles::molien_truncation_by_summation(g, 30);
  CHECK(ms.truncation == oracle);
  const CSTResult cst = shephard_todd_degrees(ms, g);
  CHECK(cst.verdict == CSTVerdict::NOT_POLYNOMIAL);
  CHECK_FALSE(cst.degrees.has_value());
  CHECK(cst.reflection_count == 0);
}

TEST_CASE("molien requires a linear group") {
  CHECK_THROWS_AS(molien(n18()), input_error);
  CHECK_THROWS_AS(linear_reflection_count(n18()), input_error);
}

TEST_CASE("molien truncation coefficients are nonnegative integers") {
  for (const MatrixGroup* g : {&s3_linear()}) {
    const MolienSeries ms = molien(*g);
    for (const Rational& c : ms.truncation) {
      CHECK(c.is_integer());
      CHECK(Rational(0) <= c);
    }
    // Coefficient of t^1 is the trivial-character multiplicity.
    CycNum tr(0);
    for (const Mat3& m : g->elements) tr += m.trace();
    CHECK(ms.truncation[1] == tr.as_rational() * Rational(1, g->order()));
  }
}

TEST_CASE("parallel and serial molien kernels agree exactly") {
  for (const MatrixGroup* g :
       {&s3_linear(), &n18()}) {
    const MatrixGroup lift =
        g->mode == Mode::PROJECTIVE ? reflection_lift(*g) : *g;
    const MolienSeries a = molien(lift);
    const MolienSeries b = molien_serial(lift);
    CHECK(a.closed_form == b.closed_form);
    CHECK(a.truncation == b.truncation);
  }
}

TEST_CASE("reflection lift of the order-18 group") {
  const MatrixGroup lift = reflection_lift(n18(), 2L);
  CHECK(lift.mode == Mode::LINEAR);
  CHECK(lift.order() == 54);
  CHECK(projectivize(lift).order() == 18);
  CHECK(linear_reflection_count(lift) == 9);
  const MolienSeries ms = molien(lift);
  const CSTResult cst = shephard_todd_degrees(ms, lift);
  CHECK(cst.verdict == CSTVerdict::POLYNOMIAL);
  REQUIRE(cst.degrees.has_value());
  CHECK(*cst.degrees == std::array<int, 3>{3, 3, 6});
  CHECK(ms.closed_form == product_form({3, 3, 6}));
  CHECK(ms.truncation == oracles::molien_truncation_by_summation(lift, 30));
}

TEST_CASE("reflection lift of the Hessian group") {
  const MatrixGroup lift = reflection_lift(hessian216(), 3L);
  CHECK(lift.order() == 648);
  CHECK(lift.conductor == 9);
  CHECK(projectivize(lift).order() == 216);
  const CSTResult cst = shephard_todd_degrees(molien(lift), lift);
  CHECK(cst.verdict == CSTVerdict::POLYNOMIAL);
  REQUIRE(cst.degrees.has_value());
  CHECK(*cst.degrees == std::array<int, 3>{6, 9, 12});
  CHECK(cst.reflection_count == 24);
}

TEST_CASE("reflection lift of the icosahedral group") {
  const MatrixGroup lift = reflection_lift(icosahedral(), 2L);
  CHECK(lift.order() == 120);
  CHECK(projectivize(lift).order() == 60);
  const CSTResult cst = shephard_todd_degrees(molien(lift), lift);
  CHECK(cst.verdict == CSTVerdict::POLYNOMIAL);
  REQUIRE(cst.degrees.has_value());
  CHECK(*cst.degrees == std::array<int, 3>{2, 6, 10});
  CHECK(cst.reflection_count == 15);
}

TEST_CASE("reflection lift of the Klein group") {
  const MatrixGroup lift = reflection_lift(klein(), 2L);
  CHECK(lift.order() == 336);
  CHECK(projectivize(lift).order() == 168);
  const CSTResult cst = shephard_todd_degrees(molien(lift), lift);
  CHECK(cst.verdict == CSTVerdict::POLYNOMIAL);
  REQUIRE(cst.degrees.has_value());
  CHECK(*cst.degrees == std::array<int, 3>{4, 6, 14});
  CHECK(cst.reflection_count == 21);
}

TEST_CASE("CST degrees cross-check against the truncation") {
  const MatrixGroup lift = reflection_lift(n18(), 2L);
  const MolienSeries ms = molien(lift);
  const CSTResult cst = shephard_todd_degrees(ms, lift);
  REQUIRE(cst.degrees.has_value());
  const auto expanded = product_form(
      {(*cst.degrees)[0], (*cst.degrees)[1], (*cst.degrees)[2]});
  const auto coeffs = expanded.series_prefix(31);
  CHECK(ms.truncation == coeffs);
}

TEST_CASE("molien is conjugation invariant") {
  std::mt19937_64 rng(20240817);
  const MatrixGroup base = s3_linear();
  const MolienSeries reference = molien(base);
  for (int trial = 0; trial < 3; ++trial) {
    const Mat3 h = random_unimodular(rng);
    const Mat3 hinv = h.inverse();
    std::vector<Mat3> gens;
    for (const Mat3& m : base.generators) gens.push_back(h * m * hinv);
    const MatrixGroup conj = close(gens, Mode::LINEAR);
    REQUIRE(conj.order() == base.order());
    const MolienSeries ms = molien(conj);
    CHECK(ms.closed_form == reference.closed_form);
    CHECK(ms.truncation == reference.truncation);
  }
}

TEST_CASE("reflection lift requires a projective group with reflections") {
  CHECK_THROWS_AS(reflection_lift(s3_linear()), input_error);
  CHECK_THROWS_AS(reflection_lift(close({diag_w()}, Mode::PROJECTIVE)), input_error);
}

TEST_CASE("weighted projective model") {
  CSTResult c;
  c.degrees = std::array<int, 3>{1, 2, 3};
  c.reflection_count = 3;
  c.verdict = CSTVerdict::POLYNOMIAL;
  const SurfaceDescriptor s = weighted_projective_model(c);
  CHECK(s.kind == SurfaceKind::WEIGHTED_PROJECTIVE);
  CHECK(s.weights == std::array<int, 3>{1, 2, 3});
  CHECK(s.toric_form);

  CSTResult p2;
  p2.degrees = std::array<int, 3>{1, 1, 1};
  p2.verdict = CSTVerdict::POLYNOMIAL;
  const SurfaceDescriptor t = weighted_projective_model(p2);
  CHECK(t.kind == SurfaceKind::P2);
  CHECK(t.k_squared == 9);
  CHECK(t.toric_form);

  CSTResult bad;
  bad.verdict = CSTVerdict::NOT_POLYNOMIAL;
  CHECK_THROWS_AS(weighted_projective_model(bad), input_error);
}

TEST_CASE("standard surfaces and terminal predicates") {
  CHECK(standard_surface(SurfaceKind::P2).k_squared == 9);
  CHECK(standard_surface(SurfaceKind::QUADRIC).k_squared == 8);
  CHECK(standard_surface(SurfaceKind::DEL_PEZZO, 6).k_squared == 6);
  CHECK(standard_surface(SurfaceKind::HIRZEBRUCH, 0).k_squared == 8);
  CHECK(standard_surface(SurfaceKind::HIRZEBRUCH, 3).k_squared == 8);
  CHECK_THROWS_AS(standard_surface(SurfaceKind::HIRZEBRUCH, 1), input_error);
  CHECK_THROWS_AS(standard_surface(SurfaceKind::DEL_PEZZO, 0), input_error);

  const TerminalVerdict dp6 = terminal_predicates(standard_surface(SurfaceKind::DEL_PEZZO, 6));
  CHECK(dp6.toric_form);
  CHECK(dp6.rational);
  CHECK(dp6.name() == "TORIC_FORM and RATIONAL");

  SurfaceDescriptor abstract8;
  abstract8.kind = SurfaceKind::ABSTRACT;
  abstract8.k_squared = 8;
  CHECK(terminal_predicates(abstract8).toric_form);

  const TerminalVerdict dp2 = terminal_predicates(standard_surface(SurfaceKind::DEL_PEZZO, 2));
  CHECK(dp2.open());
  CHECK(dp2.name() == "OPEN");

  SurfaceDescriptor unset;
  CHECK_THROWS_AS(terminal_predicates(unset), input_error);
}

TEST_CASE("molien json shape") {
  const MolienSeries ms = molien(s3_linear());
  const nlohmann::json j = ms.to_json();
  CHECK(j.contains("num"));
  CHECK(j.contains("den"));
  CHECK(j["truncation"].size() == 31);
  const CSTResult cst = shephard_todd_degrees(ms, s3_linear());
  const nlohmann::json cj = cst.to_json();
  CHECK(cj["verdict"] == "POLYNOMIAL");
  CHECK(cj["degrees"][0] == 1);
  CHECK(cj["degrees"][2] == 3);
  CHECK(cj["reflections"] == 3);
}
