#include <doctest.h>

#include "cmhopf/cm_fdb.hpp"
#include "cmhopf/hopf.hpp"

using cmhopf::AlgebraElement;
using cmhopf::Family;
using cmhopf::make_rational;
using cmhopf::Monomial;
using cmhopf::Rational;
using cmhopf::TensorElement;

namespace {

AlgebraElement d(int n) {
  return AlgebraElement::generator(Family::delta, n);
}

TensorElement primitive(int n) {
  TensorElement t(Family::delta);
  t.add_term(Monomial::generator(n), Monomial{}, 1);
  t.add_term(Monomial{}, Monomial::generator(n), 1);
  return t;
}

// Expands a product of tensors term by term, without the library product.
TensorElement brute_product(TensorElement const& x, TensorElement const& y) {
  TensorElement out(x.family());
  for (auto const& [kx, cx] : x.terms()) {
    for (auto const& [ky, cy] : y.terms()) {
      std::vector<int> l = kx.first.factors();
      std::vector<int> r = kx.second.factors();
      l.insert(l.end(), ky.first.factors().begin(), ky.first.factors().end());
      r.insert(r.end(), ky.second.factors().begin(), ky.second.factors().end());
      out.add_term(Monomial(l), Monomial(r), cx * cy);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("monomials") {
  Monomial const m{2, 1, 1};
  CHECK(m.factors() == std::vector<int>{1, 1, 2});
  CHECK(m.degree() == 4);
  CHECK(Monomial{}.is_unit());
  CHECK(Monomial{1} * Monomial{1} == Monomial{1, 1});
  CHECK(Monomial{3} < Monomial{1, 2});
  CHECK(Monomial{1, 2} < Monomial{1, 1, 1});
  CHECK(Monomial{2} < Monomial{1, 2});
  CHECK_THROWS_AS(Monomial{0}, std::invalid_argument);
}

TEST_CASE("algebra arithmetic") {
  CHECK(d(1) * d(1) == AlgebraElement::monomial(Family::delta, Monomial{1, 1}));
  AlgebraElement const x = d(2) + d(1) * d(1);
  CHECK(x * AlgebraElement::one(Family::delta) == x);
  CHECK((x - x).is_zero());
  CHECK((x * make_rational(0)).is_zero());
  CHECK(x.is_homogeneous(2));
  CHECK(!(x + d(1)).is_homogeneous(2));
  CHECK(x.coefficient(Monomial{1, 1}) == 1);
  CHECK(x.coefficient(Monomial{3}) == 0);
  CHECK_THROWS_AS(x + AlgebraElement::generator(Family::a, 1), cmhopf::FamilyMismatch);
  CHECK_THROWS_AS(x * AlgebraElement::generator(Family::gamma, 1), cmhopf::FamilyMismatch);

  Rational const v = x.evaluate([](int n) { return make_rational(n + 1); });
  CHECK(v == 3 + 4);
}

TEST_CASE("tensor arithmetic") {
  TensorElement const a = TensorElement::simple(Monomial{1}, Monomial{1}, 1, Family::delta);
  TensorElement const b = TensorElement::simple(Monomial{}, Monomial{1}, 1, Family::delta);
  CHECK(a * b == TensorElement::simple(Monomial{1}, Monomial{1, 1}, 1, Family::delta));
  CHECK((a - a).is_zero());
  CHECK(a.is_homogeneous(2));
  CHECK(a.coefficient(Monomial{1}, Monomial{1}) == 1);
  CHECK_THROWS_AS(a + TensorElement::one(Family::a), cmhopf::FamilyMismatch);

  Rational const v = (a * make_rational(3)).evaluate([](int) { return make_rational(2); },
                                                      [](int) { return make_rational(5); });
  CHECK(v == 30);
}

TEST_CASE("coproduct extension") {
  cmhopf::CoproductImages const images{{1, primitive(1)}, {2, primitive(2)}};
  TensorElement expected(Family::delta);
  expected.add_term(Monomial{1, 1}, Monomial{}, 1);
  expected.add_term(Monomial{1}, Monomial{1}, 2);
  expected.add_term(Monomial{}, Monomial{1, 1}, 1);
  CHECK(cmhopf::extend_coproduct(images, d(1) * d(1)) == expected);
  CHECK(cmhopf::extend_coproduct(images, AlgebraElement::one(Family::delta))
        == TensorElement::one(Family::delta));
  CHECK_THROWS_AS(cmhopf::extend_coproduct(images, d(3)), cmhopf::MissingGenerator);

  auto const closed = cmhopf::delta_coproduct_images(3);
  CHECK(cmhopf::extend_coproduct(closed, d(1) * d(2))
        == brute_product(closed.at(1), closed.at(2)));
  CHECK(cmhopf::extend_coproduct(closed, d(1) * d(1) * d(3))
        == brute_product(brute_product(closed.at(1), closed.at(1)), closed.at(3)));
}

TEST_CASE("antipode extension") {
  cmhopf::AntipodeImages const images{{1, d(1) * make_rational(-1)}};
  CHECK(cmhopf::extend_antipode(images, d(1) * d(1)) == d(1) * d(1));
  CHECK(cmhopf::extend_antipode(images, AlgebraElement::one(Family::delta))
        == AlgebraElement::one(Family::delta));
  CHECK_THROWS_AS(cmhopf::extend_antipode(images, d(2)), cmhopf::MissingGenerator);

  auto const closed = cmhopf::delta_antipode_images(2);
  CHECK(cmhopf::extend_antipode(closed, d(1) * d(2)) == closed.at(1) * closed.at(2));
}

TEST_CASE("counit") {
  CHECK(cmhopf::counit({}, d(1)) == 0);
  CHECK(cmhopf::counit({}, AlgebraElement::one(Family::delta) * make_rational(5)) == 5);
  CHECK(cmhopf::counit({{1, make_rational(2)}}, d(1) * d(1)) == 4);
}

TEST_CASE("axiom checker") {
  cmhopf::CoproductImages const prim{{1, primitive(1)}};
  cmhopf::AntipodeImages const  neg{{1, d(1) * make_rational(-1)}};
  CHECK(cmhopf::check_hopf_axioms(prim, neg, {}, 1).passed());

  cmhopf::AntipodeImages const wrong{{1, d(1)}};
  auto const                   bad = cmhopf::check_hopf_axioms(prim, wrong, {}, 1);
  REQUIRE(!bad.passed());
  CHECK(bad.failures.front().axiom.find("antipode") != std::string::npos);

  auto coproducts = cmhopf::delta_coproduct_images(2);
  coproducts.at(2).add_term(Monomial{1}, Monomial{1}, -1);
  auto const corrupted = cmhopf::check_hopf_axioms(coproducts, cmhopf::delta_antipode_images(2), {}, 2);
  REQUIRE(!corrupted.passed());
  for (auto const& f : corrupted.failures) {
    CHECK(f.generator == 2);
    CHECK(f.axiom.find("antipode") != std::string::npos);
  }

  TensorElement skewed = primitive(2);
  skewed.add_term(Monomial{1}, Monomial{1}, 1);
  skewed.add_term(Monomial{1}, Monomial{}, 1);
  cmhopf::CoproductImages const broken_counit{{1, primitive(1)}, {2, skewed}};
  auto const                    report = cmhopf::check_hopf_axioms(
      broken_counit, cmhopf::delta_antipode_images(2), {}, 2);
  bool saw_counit = false;
  for (auto const& f : report.failures) {
    saw_counit = saw_counit || f.axiom.find("counit") != std::string::npos;
  }
  CHECK(saw_counit);

  auto const missing = cmhopf::check_hopf_axioms(prim, neg, {}, 2);
  CHECK(!missing.passed());
}

TEST_CASE("antipode candidates passing the check agree") {
  auto const coproducts = cmhopf::delta_coproduct_images(5);
  auto       other      = cmhopf::delta_antipode_images(5);
  other.at(4).add_term(Monomial{2, 2}, 1);
  CHECK(!cmhopf::check_hopf_axioms(coproducts, other, {}, 5).passed());
}

TEST_CASE("grading of coproducts") {
  auto const images = cmhopf::delta_coproduct_images(6);
  for (int n = 1; n <= 6; ++n) {
    AlgebraElement const x = d(1) * d(n);
    for (auto const& [m, c] : x.terms()) {
      (void)c;
      CHECK(cmhopf::extend_coproduct(images, m, Family::delta).is_homogeneous(n + 1));
    }
  }
}

TEST_CASE("text rendering") {
  CHECK(cmhopf::to_text(cmhopf::antipode_delta(3)) == "−δ₃ + 4δ₁δ₂ − 2δ₁³");
  CHECK(cmhopf::to_text(cmhopf::coproduct_delta(2)) == "1 ⊗ δ₂ + δ₁ ⊗ δ₁ + δ₂ ⊗ 1");
  CHECK(cmhopf::to_text(AlgebraElement(Family::a)) == "0");
  CHECK(cmhopf::to_text(d(12) * make_rational(3, 2)) == "(3/2)δ₁₂");
  CHECK(cmhopf::to_text(AlgebraElement::one(Family::gamma) * make_rational(-2)) == "−2");
  CHECK(cmhopf::subscript(10) == "₁₀");
}

TEST_CASE("json round trip") {
  for (int n = 1; n <= 6; ++n) {
    for (Family f : {Family::delta, Family::gamma}) {
      auto const t = cmhopf::coproduct_delta(n, f);
      CHECK(cmhopf::tensor_element_from_json(cmhopf::to_json(t)) == t);
      auto const s = cmhopf::antipode_delta(n, f);
      CHECK(cmhopf::algebra_element_from_json(cmhopf::to_json(s)) == s);
    }
    auto const a = cmhopf::antipode_a(n);
    CHECK(cmhopf::algebra_element_from_json(cmhopf::to_json(a)) == a);
  }
  CHECK(cmhopf::to_json(cmhopf::antipode_delta(2))
        == R"({"family":"delta","terms":[{"coeff":"-1","monomial":[2]},{"coeff":"1","monomial":[1,1]}]})");
}

TEST_CASE("json parse errors") {
  CHECK_THROWS_AS(cmhopf::algebra_element_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(cmhopf::algebra_element_from_json(R"({"family":"zeta","terms":[]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      cmhopf::algebra_element_from_json(R"({"family":"a","terms":[{"monomial":[0],"coeff":"1"}]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      cmhopf::algebra_element_from_json(R"({"family":"a","terms":[{"monomial":[1],"coeff":"1/0"}]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(cmhopf::tensor_element_from_json(R"({"family":"a","terms":[{"left":[1],"coeff":"1"}]})"),
                  std::invalid_argument);
  auto const parsed = cmhopf::algebra_element_from_json(
      R"({"family":"a","terms":[{"monomial":[2,1],"coeff":"2/4"},{"monomial":[1,2],"coeff":"1/2"}]})");
  CHECK(parsed.coefficient(Monomial{1, 2}) == 1);
}

TEST_CASE("family names") {
  CHECK(cmhopf::family_name(Family::gamma) == "gamma");
  CHECK(cmhopf::parse_family("a") == Family::a);
  CHECK_THROWS_AS(cmhopf::parse_family("b"), std::invalid_argument);
}
