#ifndef CMHOPF_HOPF_HPP
#define CMHOPF_HOPF_HPP

#include <array>
#include <compare>
#include <functional>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace cmhopf {

// Which generator family an element is written in: delta_n, a_n or gamma_n.
enum class Family { delta, a, gamma };

std::string_view family_name(Family f) noexcept;
Family           parse_family(std::string_view name);

class FamilyMismatch : public std::logic_error {
 public:
  FamilyMismatch(Family lhs, Family rhs);
};

class MissingGenerator : public std::out_of_range {
 public:
  explicit MissingGenerator(int index);
  int index() const noexcept { return index_; }

 private:
  int index_;
};

// Commutative monomial: a sorted multiset of positive generator indices.
// The empty multiset is the unit. Ordered by degree, then number of
// factors, then lexicographically.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<int> factors);
  explicit Monomial(std::vector<int> factors);

  static Monomial generator(int n) { return Monomial({n}); }

  std::vector<int> const& factors() const noexcept { return factors_; }
  int  degree() const noexcept { return degree_; }
  bool is_unit() const noexcept { return factors_.empty(); }

  Monomial operator*(Monomial const& other) const;

  bool operator==(Monomial const& other) const noexcept { return factors_ == other.factors_; }
  std::strong_ordering operator<=>(Monomial const& other) const noexcept;

 private:
  std::vector<int> factors_;
  int              degree_ = 0;
};

// Finite rational combination of monomials. Zero coefficients are never
// stored.
class AlgebraElement {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit AlgebraElement(Family family = Family::delta) : family_(family) {}

  static AlgebraElement one(Family family);
  static AlgebraElement generator(Family family, int n);
  static AlgebraElement monomial(Family family, Monomial m, Rational c = 1);

  Family       family() const noexcept { return family_; }
  Terms const& terms() const noexcept { return terms_; }
  bool         is_zero() const noexcept { return terms_.empty(); }
  Rational     coefficient(Monomial const& m) const;

  // True when every term has degree n (the zero element counts).
  bool is_homogeneous(int n) const;

  void add_term(Monomial const& m, Rational const& c);

  AlgebraElement& operator+=(AlgebraElement const& other);
  AlgebraElement& operator-=(AlgebraElement const& other);
  AlgebraElement& operator*=(Rational const& s);

  friend AlgebraElement operator+(AlgebraElement a, AlgebraElement const& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, AlgebraElement const& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, Rational const& s) { return a *= s; }
  friend AlgebraElement operator*(AlgebraElement const& a, AlgebraElement const& b);

  // Substitutes values for generators; value(n) is the value of generator n.
  Rational evaluate(std::function<Rational(int)> const& value) const;

  bool operator==(AlgebraElement const& other) const = default;

 private:
  Family family_;
  Terms  terms_;
};

// Finite rational combination of pairs of monomials, left (x) right.
class TensorElement {
 public:
  using Key   = std::pair<Monomial, Monomial>;
  using Terms = std::map<Key, Rational>;

  explicit TensorElement(Family family = Family::delta) : family_(family) {}

  static TensorElement one(Family family);
  static TensorElement simple(Monomial left, Monomial right, Rational c, Family family);

  Family       family() const noexcept { return family_; }
  Terms const& terms() const noexcept { return terms_; }
  bool         is_zero() const noexcept { return terms_.empty(); }
  Rational     coefficient(Monomial const& left, Monomial const& right) const;

  // True when every term has bidegree summing to n.
  bool is_homogeneous(int n) const;

  void add_term(Monomial const& left, Monomial const& right, Rational const& c);

  TensorElement& operator+=(TensorElement const& other);
  TensorElement& operator-=(TensorElement const& other);
  TensorElement& operator*=(Rational const& s);

  friend TensorElement operator+(TensorElement a, TensorElement const& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, TensorElement const& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, Rational const& s) { return a *= s; }
  // (a (x) b)(c (x) d) = ac (x) bd
  friend TensorElement operator*(TensorElement const& x, TensorElement const& y);

  // sum c * left(left values) * right(right values)
  Rational evaluate(std::function<Rational(int)> const& left_value,
                    std::function<Rational(int)> const& right_value) const;

  bool operator==(TensorElement const& other) const = default;

 private:
  Family family_;
  Terms  terms_;
};

TensorElement tensor(AlgebraElement const& left, AlgebraElement const& right);

// Triple tensors, used for coassociativity.
class TripleTensor {
 public:
  using Key   = std::array<Monomial, 3>;
  using Terms = std::map<Key, Rational>;

  void         add_term(Key const& key, Rational const& c);
  Terms const& terms() const noexcept { return terms_; }
  bool         is_zero() const noexcept { return terms_.empty(); }

  TripleTensor& operator-=(TripleTensor const& other);

  bool operator==(TripleTensor const& other) const = default;

 private:
  Terms terms_;
};

using CoproductImages = std::map<int, TensorElement>;
using AntipodeImages  = std::map<int, AlgebraElement>;
using CounitValues    = std::map<int, Rational>;

// Algebra-morphism extension of generator coproducts; Delta(1) = 1 (x) 1.
// Throws MissingGenerator when x uses a generator without an image.
TensorElement extend_coproduct(CoproductImages const& images, AlgebraElement const& x);
TensorElement extend_coproduct(CoproductImages const& images, Monomial const& m, Family family);

// Multiplicative extension of generator antipodes; S(1) = 1.
AlgebraElement extend_antipode(AntipodeImages const& images, AlgebraElement const& x);

// Multiplicative counit; generators missing from values count as 0.
Rational counit(CounitValues const& values, AlgebraElement const& x);
Rational counit(CounitValues const& values, Monomial const& m);

struct AxiomFailure {
  int         generator;
  std::string axiom;
  std::string residual;
};

struct HopfAxiomReport {
  int                       max_degree = 0;
  int                       generators_checked = 0;
  std::vector<AxiomFailure> failures;

  bool passed() const noexcept { return failures.empty(); }
};

// Checks coassociativity, both counit laws and both antipode convolution
// laws on every generator 1..max_degree. Failures are reported, not thrown.
HopfAxiomReport check_hopf_axioms(CoproductImages const& coproducts,
                                  AntipodeImages const&  antipodes,
                                  CounitValues const&    counit_values,
                                  int                    max_degree);

// Human-readable forms, e.g. "−δ₃ + 4δ₁δ₂ − 2δ₁³" and "δ₁ ⊗ δ₁".
std::string to_text(Monomial const& m, std::string_view symbol);
std::string to_text(AlgebraElement const& x);
std::string to_text(AlgebraElement const& x, std::string_view symbol);
std::string to_text(TensorElement const& x);
std::string generator_symbol(Family f);
// Decimal digits of n as Unicode subscripts.
std::string subscript(int n);

// JSON schema:
//   {"family":"delta","terms":[{"monomial":[1,2],"coeff":"-3/2"}, ...]}
//   {"family":"delta","terms":[{"left":[1],"right":[2],"coeff":"3"}, ...]}
// Terms appear in the element's canonical order. Parsing throws
// std::invalid_argument on schema violations.
std::string    to_json(AlgebraElement const& x);
std::string    to_json(TensorElement const& x);
AlgebraElement algebra_element_from_json(std::string_view text);
TensorElement  tensor_element_from_json(std::string_view text);

}  // namespace cmhopf

#endif  // CMHOPF_HOPF_HPP
