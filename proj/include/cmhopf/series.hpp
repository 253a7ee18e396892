#ifndef CMHOPF_SERIES_HPP
#define CMHOPF_SERIES_HPP

#include <random>
#include <span>
#include <vector>

#include "combinatorics.hpp"
#include "rational.hpp"

namespace cmhopf {

// Truncated power series c_0 + c_1 x + ... + c_order x^order. Arithmetic is
// exact modulo x^(order+1); mixed-order operands truncate to the smaller
// order.
class PowerSeries {
 public:
  explicit PowerSeries(int order);
  PowerSeries(int order, std::vector<Rational> coeffs);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Rational const& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  Rational&       operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  std::span<Rational const> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;

  PowerSeries truncated(int order) const;
  PowerSeries derivative() const;
  PowerSeries integral() const;
  // Multiplies by x^k, raising the order by k.
  PowerSeries shifted(int k) const;

  // Requires a nonzero constant term.
  PowerSeries reciprocal() const;
  // Requires constant term 1.
  PowerSeries log() const;
  // Requires constant term 0.
  PowerSeries exp() const;

  // this(inner(x)); requires inner to have zero constant term.
  PowerSeries compose(PowerSeries const& inner) const;

  PowerSeries& operator+=(PowerSeries const& other);
  PowerSeries& operator-=(PowerSeries const& other);
  PowerSeries& operator*=(Rational const& scalar);

  friend PowerSeries operator+(PowerSeries a, PowerSeries const& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, PowerSeries const& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries const& a, PowerSeries const& b);
  friend PowerSeries operator*(PowerSeries a, Rational const& s) { return a *= s; }

  bool operator==(PowerSeries const& other) const = default;

 private:
  std::vector<Rational> coeffs_;
};

// An identity-tangent formal diffeomorphism x + sum_{n=1}^{order} phi_n x^{n+1}.
class Diffeo {
 public:
  static Diffeo identity(int order);

  // phi[0] is phi_1. The order is phi.size(), which must be >= 1.
  explicit Diffeo(std::vector<Rational> phi);

  int order() const noexcept { return static_cast<int>(phi_.size()); }
  // 1-based: phi(n) = phi_n = a_n(f).
  Rational const& phi(int n) const { return phi_.at(static_cast<std::size_t>(n - 1)); }
  std::vector<Rational> const& coefficients() const noexcept { return phi_; }

  // The series of order order()+1.
  PowerSeries as_series() const;
  static Diffeo from_series(PowerSeries const& s);

  bool operator==(Diffeo const& other) const = default;

 private:
  std::vector<Rational> phi_;
};

// The group product mu(f, g) = g o f. Throws std::invalid_argument on an
// order mismatch.
Diffeo compose(Diffeo const& f, Diffeo const& g);

// Compositional inverse, solved one coefficient at a time.
Diffeo invert(Diffeo const& f);

// gamma_n(f) = n! [x^n] log f'(x) for n = 1..order; element 0 is gamma_1.
std::vector<Rational> gamma_from_phi(Diffeo const& f);

// phi(x) = int_0^x exp(sum gamma_n t^n / n!) dt.
Diffeo phi_from_gamma(std::span<Rational const> gammas);

// F_n(x^k) = c x^{n+k} for the substitution automorphism A -> A o f;
// returns c = sum_{n in N_n} phi_n / l(n)! * k (k-1) ... (k-l(n)+1).
Rational apply_homogeneous_component(Diffeo const& f, int n, int k);

// F_{n_1} ... F_{n_s} . x^k = c x^{|n|+k}, computed by iterating
// apply_homogeneous_component from the right.
Rational apply_components_iterated(Diffeo const& f, Composition const& ns, int k);

// Same coefficient as a B_k-weighted sum over blocks m^i in N_{n_i}.
Rational apply_components_blockwise(Diffeo const& f, Composition const& ns, int k);

// phi_n with the seeded random_rational draw for each coefficient.
Diffeo random_diffeo(std::mt19937_64& rng, int order);

}  // namespace cmhopf

#endif  // CMHOPF_SERIES_HPP
