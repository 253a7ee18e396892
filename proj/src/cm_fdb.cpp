#include "cmhopf/cm_fdb.hpp"

#include <stdexcept>

#include "cmhopf/coefficients.hpp"
#include "memo.hpp"

namespace cmhopf {

namespace {

  void require_degree(int n) {
    if (n < 1) {
      throw std::invalid_argument("degree must be >= 1");
    }
  }

  Monomial monomial_of(Composition const& c) {
    return Monomial(c.vec());
  }

  Monomial monomial_of_prefix(Composition const& c) {
    return Monomial(std::vector<int>(c.vec().begin(), c.vec().end() - 1));
  }

  Rational signed_unit(std::size_t exponent) {
    return exponent % 2 == 0 ? Rational(1) : Rational(-1);
  }

}  // namespace

// Ordered coefficients -------------------------------------------------------

std::map<Composition, Rational> ordered_coproduct_delta(int n) {
  require_degree(n);
  static detail::Memo<int, std::map<Composition, Rational>> memo;
  return memo.get(n, [n] {
    std::map<Composition, Rational> out;
    for (auto const& c : enumerate_compositions(n)) {
      if (c.length() >= 2) {
        out.emplace(c, coproduct_table_entry(c));
      }
    }
    return out;
  });
}

std::map<Composition, Rational> ordered_antipode_delta(int n) {
  require_degree(n);
  static detail::Memo<int, std::map<Composition, Rational>> memo;
  return memo.get(n, [n] {
    std::map<Composition, Rational> out;
    for (auto const& c : enumerate_compositions(n)) {
      out.emplace(c, antipode_table_entry(c));
    }
    return out;
  });
}

std::map<Composition, Rational> ordered_coproduct_a(int n) {
  require_degree(n);
  std::map<Composition, Rational> out;
  for (int k = 1; k < n; ++k) {
    for (auto const& c : enumerate_compositions(k)) {
      auto const coeff = binomial(n - k + 1, static_cast<long>(c.length()));
      if (coeff != 0) {
        out.emplace(c.concat(Composition{n - k}), Rational(Integer(coeff)));
      }
    }
  }
  return out;
}

std::map<Composition, Rational> ordered_antipode_a(int n) {
  require_degree(n);
  std::map<Composition, Rational> out;
  for (auto const& c : enumerate_compositions(n)) {
    Integer sum = 0;
    for (auto const& split : all_splits(c)) {
      Integer const b = coeff_B(split, 1);
      if (split.size() % 2 == 0) {
        sum += b;
      } else {
        sum -= b;
      }
    }
    if (sum != 0) {
      out.emplace(c, Rational(sum));
    }
  }
  return out;
}

// Collected elements ---------------------------------------------------------

namespace {

  TensorElement primitive_part(int n, Family family) {
    TensorElement t(family);
    t.add_term(Monomial::generator(n), Monomial{}, 1);
    t.add_term(Monomial{}, Monomial::generator(n), 1);
    return t;
  }

  TensorElement collect_coproduct(int n, std::map<Composition, Rational> const& ordered,
                                  Family family) {
    TensorElement t = primitive_part(n, family);
    for (auto const& [c, coeff] : ordered) {
      t.add_term(monomial_of_prefix(c), Monomial::generator(c[c.length() - 1]), coeff);
    }
    return t;
  }

}  // namespace

TensorElement coproduct_delta(int n, Family family) {
  return collect_coproduct(n, ordered_coproduct_delta(n), family);
}

AlgebraElement antipode_delta(int n, Family family) {
  AlgebraElement x(family);
  for (auto const& [c, coeff] : ordered_antipode_delta(n)) {
    x.add_term(monomial_of(c), coeff);
  }
  return x;
}

TensorElement coproduct_a(int n) {
  return collect_coproduct(n, ordered_coproduct_a(n), Family::a);
}

AlgebraElement antipode_a(int n) {
  AlgebraElement x(Family::a);
  for (auto const& [c, coeff] : ordered_antipode_a(n)) {
    x.add_term(monomial_of(c), coeff);
  }
  return x;
}

AlgebraElement a_in_gamma(int n) {
  require_degree(n);
  AlgebraElement x(Family::gamma);
  for (auto const& c : enumerate_compositions(n)) {
    Integer den = factorial(static_cast<unsigned>(c.length())) * composition_factorial(c) * (n + 1);
    x.add_term(monomial_of(c), Rational(Integer(1), den));
  }
  return x;
}

AlgebraElement gamma_in_a(int n) {
  require_degree(n);
  AlgebraElement x(Family::a);
  Integer const  nfact = factorial(static_cast<unsigned>(n));
  for (auto const& c : enumerate_compositions(n)) {
    Integer num = nfact;
    for (int p : c.parts()) {
      num *= p + 1;
    }
    Rational coeff(num, Integer(static_cast<long>(c.length())));
    coeff.canonicalize();
    x.add_term(monomial_of(c), coeff * signed_unit(c.length() - 1));
  }
  return x;
}

AlgebraElement substitute(AlgebraElement const&                x,
                          std::map<int, AlgebraElement> const& images,
                          Family                               target_family) {
  AlgebraElement out(target_family);
  for (auto const& [m, c] : x.terms()) {
    AlgebraElement term = AlgebraElement::one(target_family);
    for (int g : m.factors()) {
      auto it = images.find(g);
      if (it == images.end()) {
        throw MissingGenerator(g);
      }
      term = term * it->second;
    }
    out += term * c;
  }
  return out;
}

TensorElement substitute(TensorElement const&                 x,
                         std::map<int, AlgebraElement> const& images,
                         Family                               target_family) {
  TensorElement out(target_family);
  for (auto const& [k, c] : x.terms()) {
    AlgebraElement const l = substitute(AlgebraElement::monomial(x.family(), k.first), images, target_family);
    AlgebraElement const r = substitute(AlgebraElement::monomial(x.family(), k.second), images, target_family);
    out += tensor(l, r) * c;
  }
  return out;
}

CoproductImages delta_coproduct_images(int max_degree, Family family) {
  CoproductImages images;
  for (int n = 1; n <= max_degree; ++n) {
    images.emplace(n, coproduct_delta(n, family));
  }
  return images;
}

AntipodeImages delta_antipode_images(int max_degree, Family family) {
  AntipodeImages images;
  for (int n = 1; n <= max_degree; ++n) {
    images.emplace(n, antipode_delta(n, family));
  }
  return images;
}

// PBW ------------------------------------------------------------------------

NCElement NCElement::word(PbwWord w, Rational c) {
  NCElement e;
  e.add_term(w, c);
  return e;
}

void NCElement::add_term(PbwWord const& w, Rational const& c) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

NCElement& NCElement::operator+=(NCElement const& other) {
  for (auto const& [w, c] : other.terms_) {
    add_term(w, c);
  }
  return *this;
}

NCElement& NCElement::operator-=(NCElement const& other) {
  for (auto const& [w, c] : other.terms_) {
    add_term(w, -c);
  }
  return *this;
}

NCElement& NCElement::operator*=(Rational const& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) {
    c *= s;
  }
  return *this;
}

namespace {

  // delta_n . (delta^alpha Y^y X^x)
  NCElement left_delta(int n, NCElement const& e) {
    NCElement out;
    for (auto const& [w, c] : e.terms()) {
      out.add_term(PbwWord{w.deltas * Monomial::generator(n), w.y, w.x}, c);
    }
    return out;
  }

  // Y delta^alpha = delta^alpha Y + deg(alpha) delta^alpha
  NCElement left_y(NCElement const& e) {
    NCElement out;
    for (auto const& [w, c] : e.terms()) {
      out.add_term(PbwWord{w.deltas, w.y + 1, w.x}, c);
      out.add_term(w, c * w.deltas.degree());
    }
    return out;
  }

  // X delta^alpha = delta^alpha X + [X, delta^alpha], with [X, .] acting as
  // a derivation raising one index; X Y^y = (Y - 1)^y X.
  NCElement left_x(NCElement const& e) {
    NCElement out;
    for (auto const& [w, c] : e.terms()) {
      for (int j = 0; j <= w.y; ++j) {
        Rational const b(Integer(binomial(w.y, j)));
        out.add_term(PbwWord{w.deltas, j, w.x + 1}, (w.y - j) % 2 == 0 ? c * b : Rational(-c * b));
      }
      auto const& f = w.deltas.factors();
      for (std::size_t i = 0; i < f.size(); ++i) {
        std::vector<int> raised = f;
        raised[i] += 1;
        out.add_term(PbwWord{Monomial(std::move(raised)), w.y, w.x}, c);
      }
    }
    return out;
  }

}  // namespace

NCElement nc_multiply_words(PbwWord const& u, PbwWord const& v) {
  NCElement acc = NCElement::word(v);
  for (int i = 0; i < u.x; ++i) {
    acc = left_x(acc);
  }
  for (int i = 0; i < u.y; ++i) {
    acc = left_y(acc);
  }
  auto const& f = u.deltas.factors();
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = left_delta(*it, acc);
  }
  return acc;
}

NCElement nc_multiply(NCElement const& u, NCElement const& v) {
  NCElement out;
  for (auto const& [wu, cu] : u.terms()) {
    for (auto const& [wv, cv] : v.terms()) {
      NCElement p = nc_multiply_words(wu, wv);
      p *= cu * cv;
      out += p;
    }
  }
  return out;
}

std::string to_text(PbwWord const& w) {
  std::string s = w.deltas.is_unit() ? "" : to_text(w.deltas, "δ");
  auto power    = [](char const* letter, int e) {
    std::string r = letter;
    if (e > 1) {
      r += "^" + std::to_string(e);
    }
    return r;
  };
  if (w.y > 0) {
    s += power("Y", w.y);
  }
  if (w.x > 0) {
    s += power("X", w.x);
  }
  return s.empty() ? "1" : s;
}

std::string to_text(NCElement const& x) {
  if (x.is_zero()) {
    return "0";
  }
  std::string s;
  for (auto const& [w, c] : x.terms()) {
    if (!s.empty()) {
      s += " + ";
    }
    s += "(" + to_string(c) + ")" + to_text(w);
  }
  return s;
}

NCTensor NCTensor::simple(NCElement const& left, NCElement const& right) {
  NCTensor t;
  for (auto const& [wl, cl] : left.terms()) {
    for (auto const& [wr, cr] : right.terms()) {
      t.add_term(wl, wr, cl * cr);
    }
  }
  return t;
}

void NCTensor::add_term(PbwWord const& l, PbwWord const& r, Rational const& c) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace({l, r}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

NCTensor& NCTensor::operator+=(NCTensor const& other) {
  for (auto const& [k, c] : other.terms_) {
    add_term(k.first, k.second, c);
  }
  return *this;
}

NCTensor& NCTensor::operator-=(NCTensor const& other) {
  for (auto const& [k, c] : other.terms_) {
    add_term(k.first, k.second, -c);
  }
  return *this;
}

NCTensor operator*(NCTensor const& a, NCTensor const& b) {
  NCTensor out;
  for (auto const& [ka, ca] : a.terms_) {
    for (auto const& [kb, cb] : b.terms_) {
      NCElement const left  = nc_multiply_words(ka.first, kb.first);
      NCElement const right = nc_multiply_words(ka.second, kb.second);
      for (auto const& [wl, cl] : left.terms()) {
        for (auto const& [wr, cr] : right.terms()) {
          out.add_term(wl, wr, ca * cb * cl * cr);
        }
      }
    }
  }
  return out;
}

RecursiveCoproduct recursive_coproduct_delta(int n) {
  require_degree(n);
  NCElement const one = NCElement::one();
  NCTensor const  delta_x = NCTensor::simple(NCElement::letter_x(), one)
                           + NCTensor::simple(one, NCElement::letter_x())
                           + NCTensor::simple(NCElement::delta(1), NCElement::letter_y());
  NCTensor current = NCTensor::simple(NCElement::delta(1), one)
                     + NCTensor::simple(one, NCElement::delta(1));
  for (int k = 1; k < n; ++k) {
    current = delta_x * current - current * delta_x;
  }
  RecursiveCoproduct result;
  for (auto const& [k, c] : current.terms()) {
    if (k.first.has_xy() || k.second.has_xy()) {
      result.residual.add_term(k.first, k.second, c);
    } else {
      result.coproduct.add_term(k.first.deltas, k.second.deltas, c);
    }
  }
  return result;
}

// Oracles --------------------------------------------------------------------

namespace {

  auto lookup(std::vector<Rational> const& values) {
    return [&values](int k) -> Rational { return values.at(static_cast<std::size_t>(k - 1)); };
  }

  void require_order(int n, Diffeo const& f) {
    require_degree(n);
    if (f.order() < n) {
      throw std::invalid_argument("diffeo order is below the requested degree");
    }
  }

}  // namespace

OracleValues oracle_coproduct_eval(int n, Diffeo const& f, Diffeo const& g) {
  require_order(n, f);
  require_order(n, g);
  auto const gf = gamma_from_phi(f);
  auto const gg = gamma_from_phi(g);
  auto const gh = gamma_from_phi(compose(f, g));
  return {gh[static_cast<std::size_t>(n - 1)], coproduct_delta(n).evaluate(lookup(gf), lookup(gg))};
}

OracleValues oracle_antipode_eval(int n, Diffeo const& f) {
  require_order(n, f);
  auto const gf  = gamma_from_phi(f);
  auto const ginv = gamma_from_phi(invert(f));
  return {ginv[static_cast<std::size_t>(n - 1)], antipode_delta(n).evaluate(lookup(gf))};
}

OracleValues oracle_coproduct_a_eval(int n, Diffeo const& f, Diffeo const& g) {
  require_order(n, f);
  require_order(n, g);
  Diffeo const h = compose(f, g);
  return {h.phi(n), coproduct_a(n).evaluate(lookup(f.coefficients()), lookup(g.coefficients()))};
}

OracleValues oracle_antipode_a_eval(int n, Diffeo const& f) {
  require_order(n, f);
  return {invert(f).phi(n), antipode_a(n).evaluate(lookup(f.coefficients()))};
}

}  // namespace cmhopf
