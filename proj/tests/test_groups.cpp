#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "ratcert/cayley.hpp"
#include "ratcert/error.hpp"
#include "ratcert/group.hpp"
#include "ratcert/projective.hpp"

using namespace ratcert;

namespace {

const CycNum kOmega = CycNum::zeta(3);

Mat3 diag_w() { return Mat3::diag(CycNum(1), kOmega, kOmega * kOmega); }
Mat3 cyc3() { return Mat3::permutation({1, 2, 0}); }
Mat3 swap01() { return Mat3::permutation({1, 0, 2}); }

MatrixGroup s3_group() { return close({swap01(), cyc3()}, Mode::LINEAR); }

MatrixGroup a4_group() {
  return close({Mat3::diag(CycNum(1), CycNum(-1), CycNum(-1)), cyc3()}, Mode::LINEAR);
}

MatrixGroup d12_group() {
  const CycNum z6 = CycNum::zeta(6);
  return close({Mat3::diag(z6, z6.pow(5), CycNum(1)), swap01()}, Mode::LINEAR);
}

bool same_element_sets(const MatrixGroup& a, const MatrixGroup& b) {
  if (a.elements.size() != b.elements.size()) return false;
  for (const auto& m : a.elements) {
    bool found = false;
    for (const auto& o : b.elements)
      if (m.conductor() == o.conductor() ? m == o
                                         : m.embedded(kMaxConductor) == o.embedded(kMaxConductor))
        found = true;
    if (!found) return false;
  }
  return true;
}

bool proportional(const Vec3& a, const Vec3& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] ==
            a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i)]))
        return false;
  return true;
}

bool is_eigenvector(const Mat3& m, const Vec3& v) { return proportional(m * v, v); }

}  // namespace

TEST_CASE("closure of a diagonal order 3 group") {
  const MatrixGroup g = close({diag_w()}, Mode::LINEAR);
  CHECK(g.order() == 3);
  CHECK(g.elements[0].is_identity());
  CHECK(g.mode == Mode::LINEAR);
}

TEST_CASE("S3 as permutation matrices") {
  const MatrixGroup g = s3_group();
  CHECK(g.order() == 6);
  const IndexedGroup ig = build_indexed(g);
  const auto classes = conjugacy_classes(ig);
  REQUIRE(classes.size() == 3);
  std::multiset<std::size_t> sizes;
  for (const auto& c : classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
  CHECK(classes == oracles::brute_conjugacy(g));
  CHECK(iso_tag(ig) == "S3");
}

TEST_CASE("element orders in both modes") {
  CHECK(element_order(Mat3::identity(), Mode::LINEAR) == 1);
  CHECK(element_order(Mat3::identity(), Mode::PROJECTIVE) == 1);
  CHECK(element_order(Mat3::diag(CycNum(-1), CycNum(1), CycNum(1)), Mode::PROJECTIVE) == 2);
  const Mat3 dw = Mat3::diag(kOmega, CycNum(1), CycNum(1));
  CHECK(element_order(dw, Mode::LINEAR) == 3);
  CHECK(element_order(dw, Mode::PROJECTIVE) == 3);
  // Repeated-multiplication cross-check.
  Mat3 acc = dw;
  long first_id = 0;
  for (long k = 1; k <= 6; ++k) {
    if (acc.is_identity()) {
      first_id = k;
      break;
    }
    acc = acc * dw;
  }
  CHECK(first_id == element_order(dw, Mode::LINEAR));
  CHECK_THROWS_AS(element_order(Mat3::diag(CycNum(2), CycNum(1), CycNum(1)), Mode::LINEAR, 10),
                  closure_limit_error);
}

TEST_CASE("closure is deterministic and generator-order independent") {
  const MatrixGroup a = close({swap01(), cyc3()}, Mode::LINEAR);
  const MatrixGroup b = close({swap01(), cyc3()}, Mode::LINEAR);
  CHECK(a.elements.size() == b.elements.size());
  for (std::size_t i = 0; i < a.elements.size(); ++i) CHECK(a.elements[i] == b.elements[i]);
  const MatrixGroup c = close({cyc3(), swap01()}, Mode::LINEAR);
  CHECK(same_element_sets(a, c));
}

TEST_CASE("projectivization divides out the scalars") {
  const MatrixGroup lin = close({Mat3::scalar(kOmega), diag_w()}, Mode::LINEAR);
  CHECK(lin.order() == 9);
  CHECK(scalar_elements(lin).size() == 3);
  const MatrixGroup proj = projectivize(lin);
  CHECK(proj.order() == 3);

  std::vector<Mat3> gens = {swap01(), cyc3(), Mat3::scalar(CycNum(-1))};
  const MatrixGroup lin2 = close(gens, Mode::LINEAR);
  CHECK(lin2.order() == 12);
  CHECK(scalar_elements(lin2).size() == 2);
  CHECK(projectivize(lin2).order() == 6);
}

TEST_CASE("closure hits the order bound on an infinite input") {
  try {
    close({Mat3::diag(CycNum(2), CycNum(1), CycNum(1))}, Mode::LINEAR, 50);
    FAIL("expected closure_limit_error");
  } catch (const closure_limit_error& e) {
    CHECK(e.partial_count == 51);
  }
}

TEST_CASE("projective canonical form ignores scalar factors") {
  const Mat3 m = cyc3();
  const ProjElement p(m);
  const ProjElement p2(CycNum(2) * m);
  const ProjElement pw(kOmega * m);
  CHECK(p == p2);
  CHECK(p == pw);
  CHECK(p.rep().det().is_one());
  CHECK(p.conductor() % 3 == 0);
}

TEST_CASE("determinant normalization can raise the conductor") {
  const Mat3 m = Mat3::diag(CycNum::zeta(9), CycNum(1), CycNum(1));
  const ProjElement p(m);
  CHECK(p.rep().det().is_one());
  CHECK(p.conductor() == 27);
  CHECK(p == ProjElement(CycNum::zeta(9) * m));
  // A determinant with no cyclotomic cube root is rejected.
  CHECK_THROWS_AS(ProjElement(Mat3::diag(CycNum(2), CycNum(1), CycNum(1))), input_error);
}

TEST_CASE("simultaneous diagonalization of commuting diagonal matrices") {
  const MatrixGroup g =
      close({diag_w(), Mat3::diag(CycNum(1), CycNum(1), CycNum(-1))}, Mode::LINEAR);
  const auto basis = simultaneous_diagonalization(g);
  REQUIRE(basis.has_value());
  for (const auto& v : *basis) {
    int nonzero = 0;
    for (const auto& x : v) nonzero += x.is_zero() ? 0 : 1;
    CHECK(nonzero == 1);
  }
}

TEST_CASE("simultaneous diagonalization of the coordinate rotation") {
  const MatrixGroup g = close({cyc3()}, Mode::LINEAR);
  const auto basis = simultaneous_diagonalization(g);
  REQUIRE(basis.has_value());
  const CycNum w = kOmega, w2 = kOmega * kOmega;
  const std::array<Vec3, 3> expected = {Vec3{CycNum(1), CycNum(1), CycNum(1)},
                                        Vec3{CycNum(1), w, w2}, Vec3{CycNum(1), w2, w}};
  for (const auto& v : *basis) {
    CHECK(is_eigenvector(cyc3(), v));
    bool matched = false;
    for (const auto& e : expected) matched = matched || proportional(v, e);
    CHECK(matched);
  }
  // All three lines distinct.
  CHECK_FALSE(proportional((*basis)[0], (*basis)[1]));
  CHECK_FALSE(proportional((*basis)[0], (*basis)[2]));
  CHECK_FALSE(proportional((*basis)[1], (*basis)[2]));
}

TEST_CASE("no common eigenbasis for nonabelian or entangled groups") {
  CHECK_FALSE(simultaneous_diagonalization(s3_group()).has_value());
  // Projectively abelian but with no common eigenline at all.
  const MatrixGroup heis = close({diag_w(), cyc3()}, Mode::PROJECTIVE);
  CHECK(heis.order() == 9);
  CHECK(is_abelian(heis));
  CHECK_FALSE(simultaneous_diagonalization(heis).has_value());
}

TEST_CASE("minimal polynomials are squarefree on finite groups") {
  for (const auto& g : {s3_group(), d12_group(), a4_group()})
    for (const auto& m : g.elements) CHECK(has_squarefree_minimal_polynomial(m));
  CHECK(minimal_polynomial(Mat3::identity()) ==
        Poly<CycNum>({CycNum(-1), CycNum(1)}));
  CHECK(minimal_polynomial(Mat3::diag(CycNum(1), CycNum(1), CycNum(-1))) ==
        Poly<CycNum>({CycNum(-1), CycNum(0), CycNum(1)}));
}

TEST_CASE("normal subgroups of small groups match brute force") {
  const MatrixGroup c6 = close({Mat3::diag(CycNum::zeta(6), CycNum(1), CycNum(1))}, Mode::LINEAR);
  const IndexedGroup ic6 = build_indexed(c6);
  const auto n6 = normal_subgroups(ic6);
  CHECK(n6.size() == 4);  // 1, C2, C3, C6
  CHECK(n6 == oracles::brute_normal_subgroups(c6));

  const MatrixGroup s3 = s3_group();
  const auto n3 = normal_subgroups(build_indexed(s3));
  REQUIRE(n3.size() == 3);
  CHECK(n3[0].size() == 1);
  CHECK(n3[1].size() == 3);
  CHECK(n3[2].size() == 6);
  CHECK(n3 == oracles::brute_normal_subgroups(s3));

  const MatrixGroup a4 = a4_group();
  const IndexedGroup ia4 = build_indexed(a4);
  const auto n4 = normal_subgroups(ia4);
  REQUIRE(n4.size() == 3);
  CHECK(n4[1].size() == 4);
  CHECK(n4 == oracles::brute_normal_subgroups(a4));
  CHECK(iso_tag(ia4) == "A4");
  CHECK_FALSE(is_simple(ia4));
}

TEST_CASE("dihedral group of order 12 has 6 conjugacy classes") {
  const MatrixGroup g = d12_group();
  CHECK(g.order() == 12);
  const IndexedGroup ig = build_indexed(g);
  const auto classes = conjugacy_classes(ig);
  CHECK(classes.size() == 6);
  CHECK(classes == oracles::brute_conjugacy(g));
  CHECK(iso_tag(ig) == "D12");
}

TEST_CASE("involution generation") {
  CHECK(involution_generation_check(build_indexed(s3_group())));
  CHECK_FALSE(involution_generation_check(build_indexed(close({diag_w()}, Mode::LINEAR))));
  CHECK_FALSE(involution_generation_check(build_indexed(a4_group())));
}

TEST_CASE("quotients by normal subgroups") {
  const IndexedGroup a4 = build_indexed(a4_group());
  const auto subs = normal_subgroups(a4);
  REQUIRE(subs.size() == 3);
  const Quotient q = quotient_by(a4, subs[1]);
  CHECK(q.group.n == 3);
  CHECK(iso_tag(q.group) == "C3");

  const IndexedGroup s3 = build_indexed(s3_group());
  const auto s3subs = normal_subgroups(s3);
  const Quotient q2 = quotient_by(s3, s3subs[1]);
  CHECK(iso_tag(q2.group) == "C2");
}

TEST_CASE("iso tags for assorted small groups") {
  CHECK(iso_tag(build_indexed(close({Mat3::diag(CycNum::zeta(6), CycNum(1), CycNum(1))},
                                    Mode::LINEAR))) == "C6");
  CHECK(iso_tag(build_indexed(close({Mat3::diag(CycNum(1), CycNum(-1), CycNum(-1)),
                                     Mat3::diag(CycNum(-1), CycNum(1), CycNum(-1))},
                                    Mode::LINEAR))) == "C2xC2");
  CHECK(iso_tag(build_indexed(close({Mat3::diag(CycNum::zeta(4), CycNum(1), CycNum(1))},
                                    Mode::LINEAR))) == "C4");
  const MatrixGroup heis = close({diag_w(), cyc3()}, Mode::PROJECTIVE);
  CHECK(iso_tag(build_indexed(heis)) == "C3xC3");
}

TEST_CASE("lagrange property") {
  for (const auto& g : {s3_group(), d12_group(), a4_group()}) {
    const IndexedGroup ig = build_indexed(g);
    for (int i = 0; i < ig.n; ++i) CHECK(ig.n % ig.elem_order[static_cast<std::size_t>(i)] == 0);
  }
}

TEST_CASE("parallel and serial table builders agree") {
  for (const auto& g : {s3_group(), d12_group(), a4_group(),
                        close({diag_w(), cyc3()}, Mode::PROJECTIVE)}) {
    const IndexedGroup a = build_indexed(g);
    const IndexedGroup b = build_indexed_serial(g);
    CHECK(a.table == b.table);
    CHECK(a.inv == b.inv);
    CHECK(a.elem_order == b.elem_order);
  }
}

TEST_CASE("determinant-1 lift of a projective group") {
  const MatrixGroup heis = close({diag_w(), cyc3()}, Mode::PROJECTIVE);
  const MatrixGroup lift = sl_lift(heis);
  CHECK(lift.order() == 27);
  CHECK(lift.mode == Mode::LINEAR);
  for (const auto& m : lift.elements) CHECK(m.det().is_one());
}

TEST_CASE("group json round trip") {
  const MatrixGroup g = close({diag_w(), cyc3()}, Mode::PROJECTIVE);
  const nlohmann::json j = group_to_json(g);
  CHECK(j["mode"] == "projective");
  const GroupInput input = GroupInput::from_json(j);
  CHECK(input.mode == Mode::PROJECTIVE);
  const MatrixGroup g2 = close(input);
  CHECK(g2.order() == g.order());
  CHECK(same_element_sets(g, g2));
}

TEST_CASE("group json validation") {
  using nlohmann::json;
  CHECK_THROWS_AS(GroupInput::from_json(json::parse("[]")), input_error);
  CHECK_THROWS_AS(GroupInput::from_json(json::parse("{\"mode\":\"affine\",\"conductor\":3,"
                                                    "\"generators\":[]}")),
                  input_error);
  CHECK_THROWS_AS(GroupInput::from_json(json::parse("{\"mode\":\"linear\",\"conductor\":500,"
                                                    "\"generators\":[]}")),
                  input_error);
  CHECK_THROWS_AS(GroupInput::from_json(json::parse("{\"mode\":\"linear\",\"conductor\":3,"
                                                    "\"generators\":[]}")),
                  input_error);
  // Entries that do not fit the declared conductor.
  json good = group_to_json(close({diag_w()}, Mode::LINEAR));
  good["conductor"] = 4;
  CHECK_THROWS_AS(GroupInput::from_json(good), input_error);
  // Singular generators are rejected at closure time.
  Mat3 zero;
  CHECK_THROWS_AS(close({zero}, Mode::LINEAR), input_error);
}
