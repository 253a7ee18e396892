#include "cmhopf/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cmhopf {

Rational make_rational(long num, long den) {
  if (den == 0) {
    throw std::invalid_argument("zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(Rational const& r) {
  if (r.get_den() == 1) {
    return r.get_num().get_str();
  }
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_display_string(Rational const& r) {
  std::string s = to_string(r);
  if (!s.empty() && s.front() == '-') {
    return "−" + s.substr(1);
  }
  return s;
}

namespace {

  std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.remove_suffix(1);
    }
    return s;
  }

  Integer parse_integer(std::string_view s, bool allow_sign) {
    if (s.empty()) {
      throw std::invalid_argument("empty integer");
    }
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) {
      i = 1;
    }
    if (i == s.size()) {
      throw std::invalid_argument("sign without digits");
    }
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
        throw std::invalid_argument("invalid digit in '" + std::string(s) + "'");
      }
    }
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return Integer(digits, 10);
  }

}  // namespace

Rational parse_rational(std::string_view text) {
  auto s     = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(s, true));
  }
  Integer num = parse_integer(trim(s.substr(0, slash)), true);
  Integer den = parse_integer(trim(s.substr(slash + 1)), false);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::vector<Rational> parse_rational_list(std::string_view csv) {
  std::vector<Rational> out;
  if (trim(csv).empty()) {
    return out;
  }
  while (true) {
    auto const comma = csv.find(',');
    out.push_back(parse_rational(csv.substr(0, comma)));
    if (comma == std::string_view::npos) {
      return out;
    }
    csv.remove_prefix(comma + 1);
  }
}

Integer factorial(unsigned n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  long p = num(rng);
  long q = den(rng);
  return make_rational(p, q);
}

}  // namespace cmhopf
