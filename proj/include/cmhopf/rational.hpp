#ifndef CMHOPF_RATIONAL_HPP
#define CMHOPF_RATIONAL_HPP

#include <gmpxx.h>

#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace cmhopf {

// Exact rationals. GMP keeps every mpq_class value in lowest terms with the
// sign on the numerator once canonicalized.
using Rational = mpq_class;
using Integer  = mpz_class;

Rational make_rational(long num, long den = 1);

// "p/q" in lowest terms, "p" when q == 1, sign on the numerator.
std::string to_string(Rational const& r);

// Same as to_string, but with U+2212 as the minus sign, as in the coefficient tables.
std::string to_display_string(Rational const& r);

// Accepts "p", "p/q", "-p/q" with optional surrounding blanks. Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// "1, -2/3,5" -> {1, -2/3, 5}; an empty or blank string gives no values.
std::vector<Rational> parse_rational_list(std::string_view csv);

Integer factorial(unsigned n);

// Draws p/q with |p| <= 9 and 1 <= q <= 4.
Rational random_rational(std::mt19937_64& rng);

}  // namespace cmhopf

#endif  // CMHOPF_RATIONAL_HPP
