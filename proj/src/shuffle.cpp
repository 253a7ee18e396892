#include "cmhopf/shuffle.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "cmhopf/cm_fdb.hpp"
#include "cmhopf/coefficients.hpp"
#include "memo.hpp"

namespace cmhopf {

namespace {

  std::string word_text(Word const& w) {
    if (w.empty()) {
      return "∅";
    }
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        s += ",";
      }
      s += std::to_string(w[i]);
    }
    return s + ")";
  }

  int word_weight(Word const& w) {
    int s = 0;
    for (int p : w) {
      s += p;
    }
    return s;
  }

  void interleave(Word const& a, std::size_t i, Word const& b, std::size_t j, Word& current,
                  std::map<Word, Integer, WordOrder>& out) {
    if (i == a.size() && j == b.size()) {
      out[current] += 1;
      return;
    }
    if (i < a.size()) {
      current.push_back(a[i]);
      interleave(a, i + 1, b, j, current, out);
      current.pop_back();
    }
    if (j < b.size()) {
      current.push_back(b[j]);
      interleave(a, i, b, j + 1, current, out);
      current.pop_back();
    }
  }

  std::map<Word, Integer, WordOrder> shuffle_words(Word const& a, Word const& b) {
    std::map<Word, Integer, WordOrder> out;
    Word                               current;
    current.reserve(a.size() + b.size());
    interleave(a, 0, b, 0, current, out);
    return out;
  }

  template <typename Map, typename Key>
  void accumulate(Map& terms, Key const& key, Rational const& c) {
    if (c == 0) {
      return;
    }
    auto [it, inserted] = terms.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        terms.erase(it);
      }
    }
  }

}  // namespace

// WordElement ----------------------------------------------------------------

WordElement WordElement::word(Word w, Rational c) {
  for (int p : w) {
    if (p < 1) {
      throw std::invalid_argument("word letters must be positive");
    }
  }
  WordElement x;
  x.add_term(w, c);
  return x;
}

Rational WordElement::coefficient(Word const& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WordElement::add_term(Word const& w, Rational const& c) {
  accumulate(terms_, w, c);
}

WordElement& WordElement::operator+=(WordElement const& other) {
  for (auto const& [w, c] : other.terms_) {
    add_term(w, c);
  }
  return *this;
}

WordElement& WordElement::operator-=(WordElement const& other) {
  for (auto const& [w, c] : other.terms_) {
    add_term(w, -c);
  }
  return *this;
}

WordElement& WordElement::operator*=(Rational const& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) {
    c *= s;
  }
  return *this;
}

void WordTensor::add_term(Word const& l, Word const& r, Rational const& c) {
  accumulate(terms_, Key{l, r}, c);
}

WordTensor& WordTensor::operator+=(WordTensor const& other) {
  for (auto const& [k, c] : other.terms_) {
    add_term(k.first, k.second, c);
  }
  return *this;
}

WordTensor& WordTensor::operator-=(WordTensor const& other) {
  for (auto const& [k, c] : other.terms_) {
    add_term(k.first, k.second, -c);
  }
  return *this;
}

WordTensor word_tensor(WordElement const& left, WordElement const& right) {
  WordTensor t;
  for (auto const& [wl, cl] : left.terms()) {
    for (auto const& [wr, cr] : right.terms()) {
      t.add_term(wl, wr, cl * cr);
    }
  }
  return t;
}

WordElement word_shuffle_multiply(WordElement const& u, WordElement const& v) {
  WordElement out;
  for (auto const& [wu, cu] : u.terms()) {
    for (auto const& [wv, cv] : v.terms()) {
      Rational const c = cu * cv;
      for (auto const& [w, mult] : shuffle_words(wu, wv)) {
        out.add_term(w, c * Rational(mult));
      }
    }
  }
  return out;
}

WordTensor word_coproduct(Word const& w) {
  WordTensor t;
  for (std::size_t cut = 0; cut <= w.size(); ++cut) {
    t.add_term(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut)),
               Word(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end()), 1);
  }
  return t;
}

WordTensor word_coproduct(WordElement const& x) {
  WordTensor t;
  for (auto const& [w, c] : x.terms()) {
    WordTensor const d = word_coproduct(w);
    for (auto const& [k, cc] : d.terms()) {
      t.add_term(k.first, k.second, c * cc);
    }
  }
  return t;
}

WordElement word_antipode(WordElement const& x) {
  WordElement out;
  for (auto const& [w, c] : x.terms()) {
    Word reversed(w.rbegin(), w.rend());
    out.add_term(reversed, w.size() % 2 == 0 ? c : Rational(-c));
  }
  return out;
}

WordElement Gamma(int n) {
  if (n < 1) {
    throw std::invalid_argument("Gamma requires n >= 1");
  }
  Rational const nfact(factorial(static_cast<unsigned>(n)));
  WordElement    g;
  for (auto const& c : enumerate_compositions(n)) {
    g.add_term(c.vec(), nfact * Rational(coeff_Q_closed(c)));
  }
  return g;
}

namespace {

  WordElement gamma_image_monomial(Monomial const& m) {
    static detail::Memo<std::vector<int>, WordElement> memo;
    return memo.get(m.factors(), [&] {
      WordElement acc = WordElement::unit();
      for (int k : m.factors()) {
        acc = word_shuffle_multiply(acc, Gamma(k));
      }
      return acc;
    });
  }

}  // namespace

WordElement gamma_image(AlgebraElement const& x) {
  WordElement out;
  for (auto const& [m, c] : x.terms()) {
    out += gamma_image_monomial(m) * c;
  }
  return out;
}

WordTensor gamma_image(TensorElement const& x) {
  WordTensor out;
  for (auto const& [k, c] : x.terms()) {
    WordTensor t = word_tensor(gamma_image_monomial(k.first), gamma_image_monomial(k.second) * c);
    out += t;
  }
  return out;
}

GammaCheck verify_gamma_coproduct(int n) {
  WordTensor const residual = word_coproduct(Gamma(n)) - gamma_image(coproduct_delta(n));
  return {n, residual.is_zero(), to_text(residual)};
}

GammaCheck verify_gamma_antipode(int n) {
  WordElement const residual = word_antipode(Gamma(n)) - gamma_image(antipode_delta(n));
  return {n, residual.is_zero(), to_text(residual)};
}

std::vector<Word> words_up_to(int max_weight) {
  std::vector<Word> out;
  for (int n = 1; n <= max_weight; ++n) {
    for (auto const& c : enumerate_compositions(n)) {
      out.push_back(c.vec());
    }
  }
  std::sort(out.begin(), out.end(), WordOrder{});
  return out;
}

WordAxiomReport check_word_hopf_axioms(int max_weight) {
  WordAxiomReport report;
  using Triple = std::array<Word, 3>;
  for (auto const& w : words_up_to(max_weight)) {
    ++report.words_checked;
    WordTensor const d = word_coproduct(w);

    std::map<Triple, Rational> left;
    std::map<Triple, Rational> right;
    for (auto const& [k, c] : d.terms()) {
      WordTensor const dl = word_coproduct(k.first);
      for (auto const& [kk, cc] : dl.terms()) {
        accumulate(left, Triple{kk.first, kk.second, k.second}, c * cc);
      }
      WordTensor const dr = word_coproduct(k.second);
      for (auto const& [kk, cc] : dr.terms()) {
        accumulate(right, Triple{k.first, kk.first, kk.second}, c * cc);
      }
    }
    if (left != right) {
      report.failures.push_back("coassociativity at " + word_text(w));
    }

    WordElement left_counit;
    WordElement right_counit;
    for (auto const& [k, c] : d.terms()) {
      if (k.first.empty()) {
        left_counit.add_term(k.second, c);
      }
      if (k.second.empty()) {
        right_counit.add_term(k.first, c);
      }
    }
    WordElement const self = WordElement::word(w);
    if (left_counit != self || right_counit != self) {
      report.failures.push_back("counit at " + word_text(w));
    }

    WordElement left_conv;
    WordElement right_conv;
    for (auto const& [k, c] : d.terms()) {
      WordElement const l = WordElement::word(k.first, c);
      WordElement const r = WordElement::word(k.second);
      left_conv += word_shuffle_multiply(word_antipode(l), r);
      right_conv += word_shuffle_multiply(l, word_antipode(r));
    }
    if (!left_conv.is_zero() || !right_conv.is_zero()) {
      report.failures.push_back("antipode at " + word_text(w) + ": " + to_text(left_conv) + " | "
                                + to_text(right_conv));
    }
    if (word_antipode(word_antipode(self)) != self) {
      report.failures.push_back("antipode involution at " + word_text(w));
    }
  }
  return report;
}

// Moulds ---------------------------------------------------------------------

Rational Mould::value(Word const& w) const {
  auto it = values_.find(w);
  return it == values_.end() ? Rational(0) : it->second;
}

void Mould::set(Word const& w, Rational v) {
  if (v == 0) {
    values_.erase(w);
  } else {
    values_[w] = std::move(v);
  }
}

namespace {

  Rational u_at(std::span<Rational const> u, int n) {
    auto const i = static_cast<std::size_t>(n - 1);
    return i < u.size() ? u[i] : Rational(0);
  }

}  // namespace

Mould conjugacy_mould(std::span<Rational const> u, int max_weight) {
  Mould m(max_weight);
  m.set({}, 1);
  for (auto const& w : words_up_to(max_weight)) {
    Rational num = w.size() % 2 == 0 ? Rational(1) : Rational(-1);
    Integer  den = 1;
    int      tail = 0;
    for (std::size_t i = w.size(); i-- > 0;) {
      num *= u_at(u, w[i]);
      tail += w[i];
      den *= tail;
    }
    m.set(w, num / Rational(den));
  }
  return m;
}

SymmetralityReport symmetrality_check(Mould const& m, int max_weight) {
  SymmetralityReport report;
  if (m.value({}) != 1) {
    report.violations.push_back({{}, {}, m.value({}), Rational(1)});
  }
  auto const words = words_up_to(max_weight);
  for (auto const& k : words) {
    for (auto const& l : words) {
      if (word_weight(k) + word_weight(l) > max_weight) {
        continue;
      }
      ++report.pairs_checked;
      Rational const lhs = m.value(k) * m.value(l);
      Rational       rhs = 0;
      for (auto const& [w, mult] : shuffle_words(k, l)) {
        rhs += Rational(mult) * m.value(w);
      }
      if (lhs != rhs) {
        report.violations.push_back({k, l, lhs, rhs});
      }
    }
  }
  return report;
}

Diffeo phi_of_mould(Mould const& m, int order) {
  if (order < 1 || order > m.max_weight()) {
    throw std::invalid_argument("mould is not defined up to the requested order");
  }
  std::vector<Rational> phi;
  for (int n = 1; n <= order; ++n) {
    Rational sum = 0;
    for (auto const& c : enumerate_compositions(n)) {
      Integer prefactor = 1;
      for (std::size_t i = 1; i < c.length(); ++i) {
        prefactor *= c.suffix_sum(i) + 1;
      }
      sum += Rational(prefactor) * m.value(c.vec());
    }
    phi.push_back(sum);
  }
  return Diffeo(std::move(phi));
}

Rational gamma_of_mould(Mould const& m, int n) {
  Rational sum = 0;
  for (auto const& c : enumerate_compositions(n)) {
    sum += Rational(coeff_Q_closed(c)) * m.value(c.vec());
  }
  return sum * Rational(factorial(static_cast<unsigned>(n)));
}

Diffeo conjugacy_phi(std::span<Rational const> u, int order) {
  return phi_of_mould(conjugacy_mould(u, order), order);
}

PowerSeries conjugacy_residual(std::span<Rational const> u, Diffeo const& phi) {
  int const   order = phi.order();
  PowerSeries u_over_x(order);
  u_over_x[0] = 1;
  for (int n = 1; n <= order; ++n) {
    u_over_x[n] = u_at(u, n);
  }
  PowerSeries const phi_series = phi.as_series();
  return (u_over_x * phi_series.derivative()).shifted(1) - phi_series;
}

std::string to_text(WordElement const& x) {
  if (x.is_zero()) {
    return "0";
  }
  std::string s;
  for (auto const& [w, c] : x.terms()) {
    if (!s.empty()) {
      s += " + ";
    }
    s += "(" + to_string(c) + ")Z" + word_text(w);
  }
  return s;
}

std::string to_text(WordTensor const& x) {
  if (x.is_zero()) {
    return "0";
  }
  std::string s;
  for (auto const& [k, c] : x.terms()) {
    if (!s.empty()) {
      s += " + ";
    }
    s += "(" + to_string(c) + ")Z" + word_text(k.first) + " ⊗ Z" + word_text(k.second);
  }
  return s;
}

}  // namespace cmhopf
