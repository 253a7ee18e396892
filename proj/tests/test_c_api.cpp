#include <doctest.h>

#include <cstring>
#include <memory>
#include <string>

#include "cmhopf/cmhopf.h"

namespace {

struct Element {
  cmh_element* p = nullptr;
  ~Element() { cmh_element_free(p); }
};

struct Report {
  cmh_report* p = nullptr;
  ~Report() { cmh_report_free(p); }
};

std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  cmh_string_free(s);
  return out;
}

std::string render(cmh_element const* e, cmh_format format) {
  char* s = nullptr;
  REQUIRE(cmh_element_render(e, format, &s) == CMH_OK);
  return take(s);
}

}  // namespace

TEST_CASE("coproduct handles") {
  Element e;
  REQUIRE(cmh_coproduct(3, CMH_COORDS_DELTA, &e.p) == CMH_OK);
  cmh_kind kind = CMH_KIND_ALGEBRA;
  CHECK(cmh_element_kind(e.p, &kind) == CMH_OK);
  CHECK(kind == CMH_KIND_TENSOR);
  std::size_t count = 0;
  CHECK(cmh_element_term_count(e.p, &count) == CMH_OK);
  CHECK(count == 5);

  int const left[]  = {1, 1};
  int const right[] = {1};
  char*     c       = nullptr;
  CHECK(cmh_element_coefficient(e.p, left, 2, right, 1, &c) == CMH_OK);
  CHECK(take(c) == "1");
  int const left2[] = {1};
  int const right2[] = {2};
  CHECK(cmh_element_coefficient(e.p, left2, 1, right2, 1, &c) == CMH_OK);
  CHECK(take(c) == "3");

  CHECK(render(e.p, CMH_FORMAT_TABLE) == "(1,2) = 3\n(2,1) = 1\n(1,1,1) = 1\n");
  CHECK(render(e.p, CMH_FORMAT_TEXT) == "Δ(δ₃) = 1 ⊗ δ₃ + 3δ₁ ⊗ δ₂ + δ₂ ⊗ δ₁ + δ₁² ⊗ δ₁ + δ₃ ⊗ 1\n");
}

TEST_CASE("antipode handles and JSON round trip") {
  Element s;
  REQUIRE(cmh_antipode(2, CMH_COORDS_DELTA, &s.p) == CMH_OK);
  std::string const json = render(s.p, CMH_FORMAT_JSON);
  CHECK(json == "{\"family\":\"delta\",\"terms\":[{\"coeff\":\"-1\",\"monomial\":[2]},{\"coeff\":\"1\",\"monomial\":[1,1]}]}\n");

  Element back;
  REQUIRE(cmh_element_from_json(json.c_str(), &back.p) == CMH_OK);
  int equal = 0;
  CHECK(cmh_element_equal(s.p, back.p, &equal) == CMH_OK);
  CHECK(equal == 1);
  char* unused = nullptr;
  CHECK(cmh_element_render(back.p, CMH_FORMAT_TABLE, &unused) == CMH_ERR_UNSUPPORTED);
  CHECK(unused == nullptr);

  Element t;
  REQUIRE(cmh_coproduct(2, CMH_COORDS_DELTA, &t.p) == CMH_OK);
  CHECK(cmh_element_equal(s.p, t.p, &equal) == CMH_OK);
  CHECK(equal == 0);

  Element a;
  REQUIRE(cmh_antipode(2, CMH_COORDS_A, &a.p) == CMH_OK);
  CHECK(render(a.p, CMH_FORMAT_TEXT) == "S(a₂) = −a₂ + 2a₁²\n");
}

TEST_CASE("errors") {
  Element e;
  CHECK(cmh_coproduct(0, CMH_COORDS_DELTA, &e.p) == CMH_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(cmh_last_error()) > 0);
  CHECK(cmh_coproduct(2, CMH_COORDS_DELTA, nullptr) == CMH_ERR_NULL_ARGUMENT);
  CHECK(cmh_coproduct(2, static_cast<cmh_coords>(9), &e.p) == CMH_ERR_INVALID_ARGUMENT);
  CHECK(cmh_element_from_json("{not json", &e.p) == CMH_ERR_PARSE);
  CHECK(cmh_element_from_json("{\"family\":\"delta\",\"terms\":[{\"coeff\":\"x\",\"monomial\":[1]}]}", &e.p)
        == CMH_ERR_PARSE);
  CHECK(e.p == nullptr);
  std::size_t n = 0;
  CHECK(cmh_element_term_count(nullptr, &n) == CMH_ERR_NULL_ARGUMENT);
  cmh_element_free(nullptr);
  cmh_report_free(nullptr);
  cmh_string_free(nullptr);
}

TEST_CASE("tables") {
  char* s = nullptr;
  REQUIRE(cmh_tables(5, &s) == CMH_OK);
  std::string const doc = take(s);
  CHECK(doc.rfind("Coproduct\n(1,1) = 1\n", 0) == 0);
  CHECK(doc.find("S(Γ₄) = −Γ₄ + 7Γ₁Γ₃ + 4Γ₂² − 18Γ₁²Γ₂ + 6Γ₁⁴\n") != std::string::npos);
  CHECK(cmh_tables(0, &s) == CMH_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verification reports") {
  cmh_verify_options o{4, 42, 3, 0};
  Report             r;
  REQUIRE(cmh_verify(&o, &r.p) == CMH_OK);
  int passed = 0;
  CHECK(cmh_report_passed(r.p, &passed) == CMH_OK);
  CHECK(passed == 1);
  std::size_t count = 0;
  CHECK(cmh_report_check_count(r.p, &count) == CMH_OK);
  CHECK(count == 13);
  char const* name   = nullptr;
  char const* detail = nullptr;
  CHECK(cmh_report_check(r.p, 0, &name, &passed, &detail) == CMH_OK);
  CHECK(std::string(name) == "Hopf axioms, delta coordinates");
  CHECK(cmh_report_check(r.p, count, &name, &passed, &detail) == CMH_ERR_OUT_OF_RANGE);

  cmh_verify_options bad{2, 42, 3, 1};
  Report             f;
  REQUIRE(cmh_verify(&bad, &f.p) == CMH_OK);
  CHECK(cmh_report_passed(f.p, &passed) == CMH_OK);
  CHECK(passed == 0);
  char* text = nullptr;
  REQUIRE(cmh_report_render(f.p, &text) == CMH_OK);
  CHECK(take(text).find("FAIL Hopf axioms, delta coordinates: degree 2, antipode") != std::string::npos);

  cmh_verify_options zero{0, 42, 3, 0};
  Report             z;
  CHECK(cmh_verify(&zero, &z.p) == CMH_ERR_INVALID_ARGUMENT);
}

TEST_CASE("conjugacy") {
  char* s    = nullptr;
  int   zero = 0;
  REQUIRE(cmh_conjugate("1", 2, &s, &zero) == CMH_OK);
  CHECK(take(s) == "φ₁ = −1\nφ₂ = 1\nresidual = 0\n");
  CHECK(zero == 1);
  CHECK(cmh_conjugate("1,x", 2, &s, &zero) == CMH_ERR_PARSE);
  CHECK(cmh_conjugate("1", 0, &s, &zero) == CMH_ERR_INVALID_ARGUMENT);
}
