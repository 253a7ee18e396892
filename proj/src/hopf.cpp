#include "cmhopf/hopf.hpp"

#include <algorithm>
#include <numeric>

namespace cmhopf {

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::delta:
      return "delta";
    case Family::a:
      return "a";
    case Family::gamma:
      return "gamma";
  }
  return "delta";
}

Family parse_family(std::string_view name) {
  if (name == "delta") {
    return Family::delta;
  }
  if (name == "a") {
    return Family::a;
  }
  if (name == "gamma") {
    return Family::gamma;
  }
  throw std::invalid_argument("unknown generator family '" + std::string(name) + "'");
}

FamilyMismatch::FamilyMismatch(Family lhs, Family rhs)
    : std::logic_error("generator family mismatch: " + std::string(family_name(lhs)) + " vs "
                       + std::string(family_name(rhs))) {}

MissingGenerator::MissingGenerator(int index)
    : std::out_of_range("no image supplied for generator " + std::to_string(index)),
      index_(index) {}

namespace {

  void require_same(Family a, Family b) {
    if (a != b) {
      throw FamilyMismatch(a, b);
    }
  }

}  // namespace

// Monomial -------------------------------------------------------------------

Monomial::Monomial(std::initializer_list<int> factors) : Monomial(std::vector<int>(factors)) {}

Monomial::Monomial(std::vector<int> factors) : factors_(std::move(factors)) {
  for (int f : factors_) {
    if (f < 1) {
      throw std::invalid_argument("generator indices must be positive");
    }
  }
  std::sort(factors_.begin(), factors_.end());
  degree_ = std::accumulate(factors_.begin(), factors_.end(), 0);
}

Monomial Monomial::operator*(Monomial const& other) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  std::merge(factors_.begin(), factors_.end(), other.factors_.begin(), other.factors_.end(),
             std::back_inserter(r.factors_));
  r.degree_ = degree_ + other.degree_;
  return r;
}

std::strong_ordering Monomial::operator<=>(Monomial const& other) const noexcept {
  if (auto c = degree_ <=> other.degree_; c != 0) {
    return c;
  }
  if (auto c = factors_.size() <=> other.factors_.size(); c != 0) {
    return c;
  }
  return factors_ <=> other.factors_;
}

// AlgebraElement -------------------------------------------------------------

AlgebraElement AlgebraElement::one(Family family) {
  return monomial(family, Monomial{}, 1);
}

AlgebraElement AlgebraElement::generator(Family family, int n) {
  return monomial(family, Monomial::generator(n), 1);
}

AlgebraElement AlgebraElement::monomial(Family family, Monomial m, Rational c) {
  AlgebraElement x(family);
  x.add_term(m, c);
  return x;
}

Rational AlgebraElement::coefficient(Monomial const& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool AlgebraElement::is_homogeneous(int n) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [n](auto const& t) { return t.first.degree() == n; });
}

void AlgebraElement::add_term(Monomial const& m, Rational const& c) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

AlgebraElement& AlgebraElement::operator+=(AlgebraElement const& other) {
  require_same(family_, other.family_);
  for (auto const& [m, c] : other.terms_) {
    add_term(m, c);
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(AlgebraElement const& other) {
  require_same(family_, other.family_);
  for (auto const& [m, c] : other.terms_) {
    add_term(m, -c);
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Rational const& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) {
    c *= s;
  }
  return *this;
}

AlgebraElement operator*(AlgebraElement const& a, AlgebraElement const& b) {
  require_same(a.family_, b.family_);
  AlgebraElement r(a.family_);
  for (auto const& [ma, ca] : a.terms_) {
    for (auto const& [mb, cb] : b.terms_) {
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

namespace {

  Rational evaluate_monomial(Monomial const& m, std::function<Rational(int)> const& value) {
    Rational r = 1;
    for (int f : m.factors()) {
      r *= value(f);
    }
    return r;
  }

}  // namespace

Rational AlgebraElement::evaluate(std::function<Rational(int)> const& value) const {
  Rational sum = 0;
  for (auto const& [m, c] : terms_) {
    sum += c * evaluate_monomial(m, value);
  }
  return sum;
}

// TensorElement --------------------------------------------------------------

TensorElement TensorElement::one(Family family) {
  return simple(Monomial{}, Monomial{}, 1, family);
}

TensorElement TensorElement::simple(Monomial left, Monomial right, Rational c, Family family) {
  TensorElement t(family);
  t.add_term(left, right, c);
  return t;
}

Rational TensorElement::coefficient(Monomial const& left, Monomial const& right) const {
  auto it = terms_.find({left, right});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool TensorElement::is_homogeneous(int n) const {
  return std::all_of(terms_.begin(), terms_.end(), [n](auto const& t) {
    return t.first.first.degree() + t.first.second.degree() == n;
  });
}

void TensorElement::add_term(Monomial const& left, Monomial const& right, Rational const& c) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(Key{left, right}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

TensorElement& TensorElement::operator+=(TensorElement const& other) {
  require_same(family_, other.family_);
  for (auto const& [k, c] : other.terms_) {
    add_term(k.first, k.second, c);
  }
  return *this;
}

TensorElement& TensorElement::operator-=(TensorElement const& other) {
  require_same(family_, other.family_);
  for (auto const& [k, c] : other.terms_) {
    add_term(k.first, k.second, -c);
  }
  return *this;
}

TensorElement& TensorElement::operator*=(Rational const& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) {
    c *= s;
  }
  return *this;
}

TensorElement operator*(TensorElement const& x, TensorElement const& y) {
  require_same(x.family_, y.family_);
  TensorElement r(x.family_);
  for (auto const& [kx, cx] : x.terms_) {
    for (auto const& [ky, cy] : y.terms_) {
      r.add_term(kx.first * ky.first, kx.second * ky.second, cx * cy);
    }
  }
  return r;
}

Rational TensorElement::evaluate(std::function<Rational(int)> const& left_value,
                                 std::function<Rational(int)> const& right_value) const {
  Rational sum = 0;
  for (auto const& [k, c] : terms_) {
    sum += c * evaluate_monomial(k.first, left_value) * evaluate_monomial(k.second, right_value);
  }
  return sum;
}

TensorElement tensor(AlgebraElement const& left, AlgebraElement const& right) {
  require_same(left.family(), right.family());
  TensorElement r(left.family());
  for (auto const& [ml, cl] : left.terms()) {
    for (auto const& [mr, cr] : right.terms()) {
      r.add_term(ml, mr, cl * cr);
    }
  }
  return r;
}

// TripleTensor ---------------------------------------------------------------

void TripleTensor::add_term(Key const& key, Rational const& c) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

TripleTensor& TripleTensor::operator-=(TripleTensor const& other) {
  for (auto const& [k, c] : other.terms_) {
    add_term(k, -c);
  }
  return *this;
}

// Extensions -----------------------------------------------------------------

TensorElement extend_coproduct(CoproductImages const& images, Monomial const& m, Family family) {
  TensorElement r = TensorElement::one(family);
  for (int g : m.factors()) {
    auto it = images.find(g);
    if (it == images.end()) {
      throw MissingGenerator(g);
    }
    r = r * it->second;
  }
  return r;
}

TensorElement extend_coproduct(CoproductImages const& images, AlgebraElement const& x) {
  TensorElement r(x.family());
  for (auto const& [m, c] : x.terms()) {
    r += extend_coproduct(images, m, x.family()) * c;
  }
  return r;
}

AlgebraElement extend_antipode(AntipodeImages const& images, AlgebraElement const& x) {
  AlgebraElement r(x.family());
  for (auto const& [m, c] : x.terms()) {
    AlgebraElement term = AlgebraElement::one(x.family());
    for (int g : m.factors()) {
      auto it = images.find(g);
      if (it == images.end()) {
        throw MissingGenerator(g);
      }
      term = term * it->second;
    }
    r += term * c;
  }
  return r;
}

Rational counit(CounitValues const& values, Monomial const& m) {
  Rational r = 1;
  for (int g : m.factors()) {
    auto it = values.find(g);
    if (it == values.end()) {
      return 0;
    }
    r *= it->second;
  }
  return r;
}

Rational counit(CounitValues const& values, AlgebraElement const& x) {
  Rational sum = 0;
  for (auto const& [m, c] : x.terms()) {
    sum += c * counit(values, m);
  }
  return sum;
}

// Axioms ---------------------------------------------------------------------

namespace {

  class CoproductCache {
   public:
    CoproductCache(CoproductImages const& images, Family family)
        : images_(images), family_(family) {}

    TensorElement const& operator()(Monomial const& m) {
      auto it = cache_.find(m);
      if (it == cache_.end()) {
        it = cache_.emplace(m, extend_coproduct(images_, m, family_)).first;
      }
      return it->second;
    }

   private:
    CoproductImages const&             images_;
    Family                             family_;
    std::map<Monomial, TensorElement>  cache_;
  };

  std::string triple_to_text(TripleTensor const& t, std::string_view symbol) {
    if (t.is_zero()) {
      return "0";
    }
    std::string s;
    for (auto const& [k, c] : t.terms()) {
      if (!s.empty()) {
        s += " + ";
      }
      s += "(" + to_string(c) + ") " + to_text(k[0], symbol) + " ⊗ " + to_text(k[1], symbol)
           + " ⊗ " + to_text(k[2], symbol);
    }
    return s;
  }

}  // namespace

HopfAxiomReport check_hopf_axioms(CoproductImages const& coproducts,
                                  AntipodeImages const&  antipodes,
                                  CounitValues const&    counit_values,
                                  int                    max_degree) {
  HopfAxiomReport report;
  report.max_degree = max_degree;
  if (coproducts.empty()) {
    return report;
  }
  Family const     family = coproducts.begin()->second.family();
  std::string const symbol = generator_symbol(family);
  CoproductCache    delta(coproducts, family);

  auto fail = [&](int g, std::string axiom, std::string residual) {
    report.failures.push_back({g, std::move(axiom), std::move(residual)});
  };

  for (int g = 1; g <= max_degree; ++g) {
    ++report.generators_checked;
    auto const cp = coproducts.find(g);
    if (cp == coproducts.end()) {
      fail(g, "coproduct image", "missing");
      continue;
    }
    TensorElement const&  dg = cp->second;
    AlgebraElement const  x  = AlgebraElement::generator(family, g);
    Rational const        eps_g = counit(counit_values, x);

    try {
      // (Delta (x) id) Delta  vs  (id (x) Delta) Delta
      TripleTensor left_assoc;
      TripleTensor right_assoc;
      for (auto const& [k, c] : dg.terms()) {
        for (auto const& [kk, cc] : delta(k.first).terms()) {
          left_assoc.add_term({kk.first, kk.second, k.second}, c * cc);
        }
        for (auto const& [kk, cc] : delta(k.second).terms()) {
          right_assoc.add_term({k.first, kk.first, kk.second}, c * cc);
        }
      }
      left_assoc -= right_assoc;
      if (!left_assoc.is_zero()) {
        fail(g, "coassociativity", triple_to_text(left_assoc, symbol));
      }
    } catch (MissingGenerator const& e) {
      fail(g, "coassociativity", e.what());
    }

    // (eps (x) id) Delta = id = (id (x) eps) Delta
    AlgebraElement left_counit(family);
    AlgebraElement right_counit(family);
    for (auto const& [k, c] : dg.terms()) {
      left_counit.add_term(k.second, c * counit(counit_values, k.first));
      right_counit.add_term(k.first, c * counit(counit_values, k.second));
    }
    if (auto r = left_counit - x; !r.is_zero()) {
      fail(g, "left counit", to_text(r));
    }
    if (auto r = right_counit - x; !r.is_zero()) {
      fail(g, "right counit", to_text(r));
    }

    // m (S (x) id) Delta = u eps = m (id (x) S) Delta
    try {
      AlgebraElement left_conv(family);
      AlgebraElement right_conv(family);
      for (auto const& [k, c] : dg.terms()) {
        AlgebraElement const l = AlgebraElement::monomial(family, k.first);
        AlgebraElement const r = AlgebraElement::monomial(family, k.second);
        left_conv += extend_antipode(antipodes, l) * r * c;
        right_conv += l * extend_antipode(antipodes, r) * c;
      }
      AlgebraElement const expected = AlgebraElement::one(family) * eps_g;
      if (auto r = left_conv - expected; !r.is_zero()) {
        fail(g, "antipode (S (x) id)", to_text(r));
      }
      if (auto r = right_conv - expected; !r.is_zero()) {
        fail(g, "antipode (id (x) S)", to_text(r));
      }
    } catch (MissingGenerator const& e) {
      fail(g, "antipode", e.what());
    }
  }
  return report;
}

// Text -----------------------------------------------------------------------

namespace {

  constexpr std::string_view kSubscripts[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  constexpr std::string_view kSuperscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

  std::string scripted(int n, std::string_view const (&digits)[10]) {
    std::string s;
    for (char ch : std::to_string(n)) {
      s += digits[ch - '0'];
    }
    return s;
  }

  // "3", "−", "", "(3/2)" prefixes for a coefficient in front of a
  // non-unit monomial; sign handled by the caller.
  std::string magnitude_prefix(Rational const& magnitude) {
    if (magnitude == 1) {
      return "";
    }
    if (magnitude.get_den() == 1) {
      return to_string(magnitude);
    }
    return "(" + to_string(magnitude) + ")";
  }

  template <typename Body>
  std::string join_signed(std::vector<std::pair<Rational, Body>> const& items, auto&& render) {
    if (items.empty()) {
      return "0";
    }
    std::string s;
    bool        first = true;
    for (auto const& [c, body] : items) {
      bool const negative = c < 0;
      if (first) {
        s += negative ? "−" : "";
      } else {
        s += negative ? " − " : " + ";
      }
      first = false;
      s += render(Rational(abs(c)), body);
    }
    return s;
  }

}  // namespace

std::string subscript(int n) {
  return scripted(n, kSubscripts);
}

std::string generator_symbol(Family f) {
  switch (f) {
    case Family::delta:
      return "δ";
    case Family::a:
      return "a";
    case Family::gamma:
      return "γ";
  }
  return "δ";
}

std::string to_text(Monomial const& m, std::string_view symbol) {
  if (m.is_unit()) {
    return "1";
  }
  std::string s;
  auto const& f = m.factors();
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i]) {
      ++j;
    }
    s += symbol;
    s += scripted(f[i], kSubscripts);
    if (j - i > 1) {
      s += scripted(static_cast<int>(j - i), kSuperscripts);
    }
    i = j;
  }
  return s;
}

std::string to_text(AlgebraElement const& x, std::string_view symbol) {
  std::vector<std::pair<Rational, Monomial>> items;
  for (auto const& [m, c] : x.terms()) {
    items.emplace_back(c, m);
  }
  return join_signed(items, [&](Rational const& mag, Monomial const& m) {
    if (m.is_unit()) {
      return to_string(mag);
    }
    return magnitude_prefix(mag) + to_text(m, symbol);
  });
}

std::string to_text(AlgebraElement const& x) {
  return to_text(x, generator_symbol(x.family()));
}

std::string to_text(TensorElement const& x) {
  std::string const symbol = generator_symbol(x.family());
  std::vector<std::pair<Rational, TensorElement::Key>> items;
  for (auto const& [k, c] : x.terms()) {
    items.emplace_back(c, k);
  }
  return join_signed(items, [&](Rational const& mag, TensorElement::Key const& k) {
    std::string left = k.first.is_unit() && mag != 1 ? to_string(mag)
                                                     : magnitude_prefix(mag) + to_text(k.first, symbol);
    return left + " ⊗ " + to_text(k.second, symbol);
  });
}

}  // namespace cmhopf
