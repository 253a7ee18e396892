#ifndef CMHOPF_SHUFFLE_HPP
#define CMHOPF_SHUFFLE_HPP

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "hopf.hpp"
#include "series.hpp"

namespace cmhopf {

// A word over the positive integers; unlike Composition it may be empty.
using Word = std::vector<int>;

// Length first, then lexicographic; the empty word comes first.
struct WordOrder {
  bool operator()(Word const& a, Word const& b) const noexcept {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }
};

// Element of the shuffle Hopf algebra: a combination of Z^w, with Z^{} = 1.
class WordElement {
 public:
  using Terms = std::map<Word, Rational, WordOrder>;

  static WordElement unit() { return word({}); }
  static WordElement word(Word w, Rational c = 1);

  Terms const& terms() const noexcept { return terms_; }
  bool         is_zero() const noexcept { return terms_.empty(); }
  Rational     coefficient(Word const& w) const;

  void add_term(Word const& w, Rational const& c);

  WordElement& operator+=(WordElement const& other);
  WordElement& operator-=(WordElement const& other);
  WordElement& operator*=(Rational const& s);

  friend WordElement operator+(WordElement a, WordElement const& b) { return a += b; }
  friend WordElement operator-(WordElement a, WordElement const& b) { return a -= b; }
  friend WordElement operator*(WordElement a, Rational const& s) { return a *= s; }

  bool operator==(WordElement const& other) const = default;

 private:
  Terms terms_;
};

class WordTensor {
 public:
  using Key   = std::pair<Word, Word>;
  using Terms = std::map<Key, Rational>;

  Terms const& terms() const noexcept { return terms_; }
  bool         is_zero() const noexcept { return terms_.empty(); }

  void add_term(Word const& l, Word const& r, Rational const& c);

  WordTensor& operator+=(WordTensor const& other);
  WordTensor& operator-=(WordTensor const& other);
  friend WordTensor operator-(WordTensor a, WordTensor const& b) { return a -= b; }

  bool operator==(WordTensor const& other) const = default;

 private:
  Terms terms_;
};

WordTensor word_tensor(WordElement const& left, WordElement const& right);

WordElement word_shuffle_multiply(WordElement const& u, WordElement const& v);

// Deconcatenation: Z^w (x) 1 + 1 (x) Z^w + sum over w = pq, p, q nonempty.
WordTensor  word_coproduct(Word const& w);
WordTensor  word_coproduct(WordElement const& x);

// S(Z^{n_1..n_s}) = (-1)^s Z^{n_s..n_1}
WordElement word_antipode(WordElement const& x);

// Gamma_n = n! sum_{n in N_n} Q^n Z^n, using the closed form of Q.
WordElement Gamma(int n);

// Algebra morphism delta_k -> Gamma_k (products become shuffle products).
WordElement gamma_image(AlgebraElement const& x);
WordTensor  gamma_image(TensorElement const& x);

struct GammaCheck {
  int         degree = 0;
  bool        ok     = false;
  std::string residual;
};

// Compares the deconcatenation of Gamma_n with the image of the delta_n
// coproduct, and S(Gamma_n) with the image of S(delta_n).
GammaCheck verify_gamma_coproduct(int n);
GammaCheck verify_gamma_antipode(int n);

struct WordAxiomReport {
  std::vector<std::string> failures;
  int                      words_checked = 0;

  bool passed() const noexcept { return failures.empty(); }
};

// Coassociativity, counit and antipode convolution on every word of weight
// at most max_weight.
WordAxiomReport check_word_hopf_axioms(int max_weight);

// Scalar function on words up to a weight bound; values absent from the map
// are zero, the empty word included.
class Mould {
 public:
  explicit Mould(int max_weight) : max_weight_(max_weight) {}

  int      max_weight() const noexcept { return max_weight_; }
  Rational value(Word const& w) const;
  void     set(Word const& w, Rational v);

  std::map<Word, Rational, WordOrder> const& values() const noexcept { return values_; }

 private:
  int                                  max_weight_;
  std::map<Word, Rational, WordOrder>  values_;
};

// Every word of weight 1..max_weight, in WordOrder.
std::vector<Word> words_up_to(int max_weight);

// M^{n_1..n_s} = (-1)^s u_{n_1}...u_{n_s} / ((n_1+...+n_s)(n_2+...+n_s)...n_s)
// and M^{} = 1. u[0] is u_1; coefficients past u.size() are zero.
Mould conjugacy_mould(std::span<Rational const> u, int max_weight);

struct SymmetralityViolation {
  Word     left;
  Word     right;
  Rational lhs;
  Rational rhs;
};

struct SymmetralityReport {
  int                                pairs_checked = 0;
  std::vector<SymmetralityViolation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

// Checks F^{k} F^{l} = sum_m sh(k, l; m) F^{m} for all nonempty k, l with
// |k| + |l| <= max_weight, and F^{} = 1.
SymmetralityReport symmetrality_check(Mould const& m, int max_weight);

// phi_n = sum_{n in N_n} prod_{i=2}^{s} (n_i + ... + n_s + 1) F^n, i.e. the
// coordinates of F.x for the operator sum F^n B_{n_1}...B_{n_s}.
Diffeo phi_of_mould(Mould const& m, int order);

// n! sum_{n in N_n} Q^n F^n.
Rational gamma_of_mould(Mould const& m, int n);

// The diffeo phi with u(x) phi'(x) = phi(x), u = x + sum u_n x^{n+1}.
Diffeo conjugacy_phi(std::span<Rational const> u, int order);

// u phi' - phi through x^{order+1}.
PowerSeries conjugacy_residual(std::span<Rational const> u, Diffeo const& phi);

std::string to_text(WordElement const& x);
std::string to_text(WordTensor const& x);

}  // namespace cmhopf

#endif  // CMHOPF_SHUFFLE_HPP
