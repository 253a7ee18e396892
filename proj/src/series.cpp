#include "cmhopf/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "cmhopf/coefficients.hpp"

namespace cmhopf {

PowerSeries::PowerSeries(int order) {
  if (order < 0) {
    throw std::invalid_argument("series order must be >= 0");
  }
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

PowerSeries::PowerSeries(int order, std::vector<Rational> coeffs) : PowerSeries(order) {
  if (coeffs.size() > coeffs_.size()) {
    throw std::invalid_argument("more coefficients than the order allows");
  }
  std::move(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Rational const& c) { return c == 0; });
}

PowerSeries PowerSeries::truncated(int order) const {
  PowerSeries r(std::min(order, this->order()));
  for (int i = 0; i <= r.order(); ++i) {
    r[i] = (*this)[i];
  }
  return r;
}

PowerSeries PowerSeries::derivative() const {
  PowerSeries r(std::max(order() - 1, 0));
  for (int i = 1; i <= order(); ++i) {
    r[i - 1] = (*this)[i] * i;
  }
  return r;
}

PowerSeries PowerSeries::integral() const {
  PowerSeries r(order() + 1);
  for (int i = 0; i <= order(); ++i) {
    r[i + 1] = (*this)[i] / (i + 1);
  }
  return r;
}

PowerSeries PowerSeries::shifted(int k) const {
  PowerSeries r(order() + k);
  for (int i = 0; i <= order(); ++i) {
    r[i + k] = (*this)[i];
  }
  return r;
}

PowerSeries PowerSeries::reciprocal() const {
  if ((*this)[0] == 0) {
    throw std::domain_error("reciprocal of a series with zero constant term");
  }
  PowerSeries r(order());
  r[0] = 1 / (*this)[0];
  for (int n = 1; n <= order(); ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) {
      acc += (*this)[k] * r[n - k];
    }
    r[n] = -acc * r[0];
  }
  return r;
}

PowerSeries PowerSeries::log() const {
  if ((*this)[0] != 1) {
    throw std::domain_error("log requires constant term 1");
  }
  // n a_n = sum_{k=1}^n k l_k a_{n-k}
  PowerSeries l(order());
  for (int n = 1; n <= order(); ++n) {
    Rational acc = (*this)[n] * n;
    for (int k = 1; k < n; ++k) {
      acc -= l[k] * k * (*this)[n - k];
    }
    l[n] = acc / n;
  }
  return l;
}

PowerSeries PowerSeries::exp() const {
  if ((*this)[0] != 0) {
    throw std::domain_error("exp requires constant term 0");
  }
  PowerSeries e(order());
  e[0] = 1;
  for (int n = 1; n <= order(); ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) {
      acc += (*this)[k] * k * e[n - k];
    }
    e[n] = acc / n;
  }
  return e;
}

PowerSeries PowerSeries::compose(PowerSeries const& inner) const {
  if (inner[0] != 0) {
    throw std::domain_error("composition requires an inner series without constant term");
  }
  int const   ord = std::min(order(), inner.order());
  PowerSeries result(ord);
  PowerSeries power(ord);
  power[0] = 1;
  PowerSeries const in = inner.truncated(ord);
  for (int k = 0; k <= ord; ++k) {
    if (k > 0) {
      power = power * in;
    }
    if ((*this)[k] != 0) {
      result += power * (*this)[k];
    }
  }
  return result;
}

PowerSeries& PowerSeries::operator+=(PowerSeries const& other) {
  if (other.order() < order()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (int i = 0; i <= order(); ++i) {
    (*this)[i] += other[i];
  }
  return *this;
}

PowerSeries& PowerSeries::operator-=(PowerSeries const& other) {
  if (other.order() < order()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (int i = 0; i <= order(); ++i) {
    (*this)[i] -= other[i];
  }
  return *this;
}

PowerSeries& PowerSeries::operator*=(Rational const& scalar) {
  for (auto& c : coeffs_) {
    c *= scalar;
  }
  return *this;
}

PowerSeries operator*(PowerSeries const& a, PowerSeries const& b) {
  int const   ord = std::min(a.order(), b.order());
  PowerSeries r(ord);
  for (int i = 0; i <= ord; ++i) {
    if (a[i] == 0) {
      continue;
    }
    for (int j = 0; i + j <= ord; ++j) {
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

// Diffeo ---------------------------------------------------------------------

Diffeo::Diffeo(std::vector<Rational> phi) : phi_(std::move(phi)) {
  if (phi_.empty()) {
    throw std::invalid_argument("diffeo order must be >= 1");
  }
}

Diffeo Diffeo::identity(int order) {
  if (order < 1) {
    throw std::invalid_argument("diffeo order must be >= 1");
  }
  return Diffeo(std::vector<Rational>(static_cast<std::size_t>(order), Rational(0)));
}

PowerSeries Diffeo::as_series() const {
  PowerSeries s(order() + 1);
  s[1] = 1;
  for (int n = 1; n <= order(); ++n) {
    s[n + 1] = phi(n);
  }
  return s;
}

Diffeo Diffeo::from_series(PowerSeries const& s) {
  if (s.order() < 2 || s[0] != 0 || s[1] != 1) {
    throw std::invalid_argument("series is not identity-tangent");
  }
  std::vector<Rational> phi;
  for (int n = 2; n <= s.order(); ++n) {
    phi.push_back(s[n]);
  }
  return Diffeo(std::move(phi));
}

Diffeo compose(Diffeo const& f, Diffeo const& g) {
  if (f.order() != g.order()) {
    throw std::invalid_argument("compose: order mismatch");
  }
  return Diffeo::from_series(g.as_series().compose(f.as_series()));
}

Diffeo invert(Diffeo const& f) {
  // Degree n+1 of f(h) is h_n plus terms in h_1..h_{n-1} only.
  PowerSeries const fs = f.as_series();
  PowerSeries       h(f.order() + 1);
  h[1] = 1;
  for (int n = 1; n <= f.order(); ++n) {
    PowerSeries const probe = fs.compose(h.truncated(n + 1));
    h[n + 1]                = -probe[n + 1];
  }
  return Diffeo::from_series(h);
}

std::vector<Rational> gamma_from_phi(Diffeo const& f) {
  PowerSeries const     lg = f.as_series().derivative().log();
  std::vector<Rational> gammas;
  for (int n = 1; n <= f.order(); ++n) {
    gammas.push_back(lg[n] * Rational(factorial(static_cast<unsigned>(n))));
  }
  return gammas;
}

Diffeo phi_from_gamma(std::span<Rational const> gammas) {
  int const   order = static_cast<int>(gammas.size());
  PowerSeries f(order);
  for (int n = 1; n <= order; ++n) {
    f[n] = gammas[static_cast<std::size_t>(n - 1)] / Rational(factorial(static_cast<unsigned>(n)));
  }
  return Diffeo::from_series(f.exp().integral());
}

namespace {

  Rational phi_product(Diffeo const& f, Composition const& c) {
    Rational r = 1;
    for (int p : c.parts()) {
      r *= f.phi(p);
    }
    return r;
  }

}  // namespace

Rational apply_homogeneous_component(Diffeo const& f, int n, int k) {
  if (n < 1 || n > f.order()) {
    throw std::invalid_argument("homogeneous component index out of range");
  }
  Rational sum = 0;
  for (auto const& c : enumerate_compositions(n)) {
    long const l = static_cast<long>(c.length());
    if (l > k) {
      continue;
    }
    // phi_n / l! * k!/(k-l)! = C^l_k phi_n
    sum += phi_product(f, c) * Rational(Integer(binomial(k, l)));
  }
  return sum;
}

Rational apply_components_iterated(Diffeo const& f, Composition const& ns, int k) {
  Rational    r     = 1;
  int         power = k;
  std::size_t i     = ns.length();
  while (i-- > 0) {
    r *= apply_homogeneous_component(f, ns[i], power);
    power += ns[i];
  }
  return r;
}

namespace {

  void blockwise_rec(Diffeo const&             f,
                     Composition const&        ns,
                     std::size_t               i,
                     int                       k,
                     BlockSequence&            blocks,
                     Rational&                 sum) {
    if (i == ns.length()) {
      Rational term = Rational(coeff_B(blocks, k));
      if (term == 0) {
        return;
      }
      for (auto const& b : blocks) {
        term *= phi_product(f, b);
      }
      sum += term;
      return;
    }
    for (auto const& m : enumerate_compositions(ns[i])) {
      blocks.push_back(m);
      blockwise_rec(f, ns, i + 1, k, blocks, sum);
      blocks.pop_back();
    }
  }

}  // namespace

Rational apply_components_blockwise(Diffeo const& f, Composition const& ns, int k) {
  if (k < 1) {
    throw std::invalid_argument("k must be >= 1");
  }
  Rational      sum = 0;
  BlockSequence blocks;
  blockwise_rec(f, ns, 0, k, blocks, sum);
  return sum;
}

Diffeo random_diffeo(std::mt19937_64& rng, int order) {
  std::vector<Rational> phi;
  phi.reserve(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    phi.push_back(random_rational(rng));
  }
  return Diffeo(std::move(phi));
}

}  // namespace cmhopf
