#ifndef CMHOPF_CM_FDB_HPP
#define CMHOPF_CM_FDB_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "combinatorics.hpp"
#include "hopf.hpp"
#include "series.hpp"

namespace cmhopf {

// -- Closed formulas ---------------------------------------------------------

// Delta(delta_n) = delta_n (x) 1 + 1 (x) delta_n
//   + sum over (n_1..n_{s+1}) in N_n, s >= 1, of
//     n!/(n_1!...n_{s+1}!) alpha^{n_1..n_s}_{n_{s+1}} delta_{n_1}...delta_{n_s} (x) delta_{n_{s+1}}.
// The family only labels the result; Family::gamma gives the same
// coefficients written in the gamma_n coordinates.
TensorElement coproduct_delta(int n, Family family = Family::delta);

// S(delta_n) = sum over n in N_n of n!/(n_1!...n_s!) beta^n delta_n.
AlgebraElement antipode_delta(int n, Family family = Family::delta);

// Faa di Bruno coordinates a_n.
TensorElement  coproduct_a(int n);
AlgebraElement antipode_a(int n);

// Ordered (pre-collection) coefficients, keyed by the full sequence. For the
// delta coproduct the key is (n_1, ..., n_s, n_{s+1}), s >= 1; for the a
// coproduct it is (n_1, ..., n_s, n - k).
std::map<Composition, Rational> ordered_coproduct_delta(int n);
std::map<Composition, Rational> ordered_antipode_delta(int n);
std::map<Composition, Rational> ordered_coproduct_a(int n);
std::map<Composition, Rational> ordered_antipode_a(int n);

// a_n as a polynomial in the gamma_k, and gamma_n as a polynomial in the a_k.
AlgebraElement a_in_gamma(int n);
AlgebraElement gamma_in_a(int n);

// Algebra morphism sending generator k to images.at(k); the result is in
// target_family.
AlgebraElement substitute(AlgebraElement const&                 x,
                          std::map<int, AlgebraElement> const&  images,
                          Family                                target_family);
TensorElement  substitute(TensorElement const&                  x,
                          std::map<int, AlgebraElement> const&  images,
                          Family                                target_family);

CoproductImages delta_coproduct_images(int max_degree, Family family = Family::delta);
AntipodeImages  delta_antipode_images(int max_degree, Family family = Family::delta);

// -- PBW words for the Lie algebra spanned by X, Y, delta_n ----------------

// A normal-form word delta^alpha Y^y X^x.
struct PbwWord {
  Monomial deltas;
  int      y = 0;
  int      x = 0;

  bool has_xy() const noexcept { return y != 0 || x != 0; }

  bool operator==(PbwWord const&) const = default;
  std::strong_ordering operator<=>(PbwWord const& other) const noexcept {
    if (auto c = deltas <=> other.deltas; c != 0) {
      return c;
    }
    if (auto c = y <=> other.y; c != 0) {
      return c;
    }
    return x <=> other.x;
  }
};

// Rational combination of PBW words. Every stored word is in normal form.
class NCElement {
 public:
  using Terms = std::map<PbwWord, Rational>;

  static NCElement word(PbwWord w, Rational c = 1);
  static NCElement one() { return word(PbwWord{}); }
  static NCElement delta(int n) { return word(PbwWord{Monomial::generator(n), 0, 0}); }
  static NCElement letter_x() { return word(PbwWord{Monomial{}, 0, 1}); }
  static NCElement letter_y() { return word(PbwWord{Monomial{}, 1, 0}); }

  Terms const& terms() const noexcept { return terms_; }
  bool         is_zero() const noexcept { return terms_.empty(); }

  void add_term(PbwWord const& w, Rational const& c);

  NCElement& operator+=(NCElement const& other);
  NCElement& operator-=(NCElement const& other);
  NCElement& operator*=(Rational const& s);

  friend NCElement operator+(NCElement a, NCElement const& b) { return a += b; }
  friend NCElement operator-(NCElement a, NCElement const& b) { return a -= b; }

  bool operator==(NCElement const& other) const = default;

 private:
  Terms terms_;
};

// Product in the enveloping algebra, rewriting with [Y, X] = X,
// [Y, delta_n] = n delta_n, [X, delta_n] = delta_{n+1}, [delta_n, delta_m] = 0.
NCElement nc_multiply(NCElement const& u, NCElement const& v);
NCElement nc_multiply_words(PbwWord const& u, PbwWord const& v);

std::string to_text(PbwWord const& w);
std::string to_text(NCElement const& x);

// Element of (enveloping algebra) (x) (enveloping algebra).
class NCTensor {
 public:
  using Terms = std::map<std::pair<PbwWord, PbwWord>, Rational>;

  static NCTensor simple(NCElement const& left, NCElement const& right);

  Terms const& terms() const noexcept { return terms_; }
  bool         is_zero() const noexcept { return terms_.empty(); }

  void add_term(PbwWord const& l, PbwWord const& r, Rational const& c);

  NCTensor& operator+=(NCTensor const& other);
  NCTensor& operator-=(NCTensor const& other);

  friend NCTensor operator+(NCTensor a, NCTensor const& b) { return a += b; }
  friend NCTensor operator-(NCTensor a, NCTensor const& b) { return a -= b; }
  // Leg-wise nc_multiply.
  friend NCTensor operator*(NCTensor const& a, NCTensor const& b);

 private:
  Terms terms_;
};

struct RecursiveCoproduct {
  TensorElement coproduct{Family::delta};
  // Terms with an X or Y letter on either leg. Nonzero only on a rewriting
  // bug; reported, never projected away.
  NCTensor      residual;

  bool clean() const noexcept { return residual.is_zero(); }
};

// Delta(delta_1) primitive, Delta(X) = X (x) 1 + 1 (x) X + delta_1 (x) Y and
// Delta(delta_{n+1}) = [Delta(X), Delta(delta_n)], evaluated leg-wise with
// nc_multiply.
RecursiveCoproduct recursive_coproduct_delta(int n);

// -- Functional oracles on the group of diffeomorphisms ----------------------

struct OracleValues {
  Rational lhs;
  Rational rhs;

  bool agree() const { return lhs == rhs; }
};

// lhs = gamma_n(g o f); rhs = Delta(delta_n) with left legs evaluated at
// gamma(f) and right legs at gamma(g).
OracleValues oracle_coproduct_eval(int n, Diffeo const& f, Diffeo const& g);

// lhs = gamma_n(f^{-1}); rhs = S(delta_n) evaluated at gamma(f).
OracleValues oracle_antipode_eval(int n, Diffeo const& f);

// Same two checks for the coordinates a_n.
OracleValues oracle_coproduct_a_eval(int n, Diffeo const& f, Diffeo const& g);
OracleValues oracle_antipode_a_eval(int n, Diffeo const& f);

}  // namespace cmhopf

#endif  // CMHOPF_CM_FDB_HPP
