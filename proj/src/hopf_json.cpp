#include <json.hpp>

#include "cmhopf/hopf.hpp"

namespace cmhopf {

using nlohmann::json;

namespace {

  json monomial_json(Monomial const& m) {
    return json(m.factors());
  }

  Monomial monomial_from(json const& j) {
    if (!j.is_array()) {
      throw std::invalid_argument("monomial must be an array of indices");
    }
    std::vector<int> f;
    for (auto const& e : j) {
      if (!e.is_number_integer()) {
        throw std::invalid_argument("monomial index must be an integer");
      }
      f.push_back(e.get<int>());
    }
    return Monomial(std::move(f));
  }

  Rational coeff_from(json const& j) {
    if (!j.is_string()) {
      throw std::invalid_argument("coeff must be a \"p/q\" string");
    }
    return parse_rational(j.get<std::string>());
  }

  json parse_object(std::string_view text) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::parse_error const& e) {
      throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("family") || !doc.contains("terms")
        || !doc["family"].is_string() || !doc["terms"].is_array()) {
      throw std::invalid_argument("expected an object with \"family\" and \"terms\"");
    }
    return doc;
  }

}  // namespace

std::string to_json(AlgebraElement const& x) {
  json terms = json::array();
  for (auto const& [m, c] : x.terms()) {
    terms.push_back({{"monomial", monomial_json(m)}, {"coeff", to_string(c)}});
  }
  json doc = {{"family", family_name(x.family())}, {"terms", std::move(terms)}};
  return doc.dump();
}

std::string to_json(TensorElement const& x) {
  json terms = json::array();
  for (auto const& [k, c] : x.terms()) {
    terms.push_back({{"left", monomial_json(k.first)},
                     {"right", monomial_json(k.second)},
                     {"coeff", to_string(c)}});
  }
  json doc = {{"family", family_name(x.family())}, {"terms", std::move(terms)}};
  return doc.dump();
}

AlgebraElement algebra_element_from_json(std::string_view text) {
  json const     doc = parse_object(text);
  AlgebraElement x(parse_family(doc["family"].get<std::string>()));
  for (auto const& t : doc["terms"]) {
    if (!t.is_object() || !t.contains("monomial") || !t.contains("coeff")) {
      throw std::invalid_argument("algebra term needs \"monomial\" and \"coeff\"");
    }
    x.add_term(monomial_from(t["monomial"]), coeff_from(t["coeff"]));
  }
  return x;
}

TensorElement tensor_element_from_json(std::string_view text) {
  json const    doc = parse_object(text);
  TensorElement x(parse_family(doc["family"].get<std::string>()));
  for (auto const& t : doc["terms"]) {
    if (!t.is_object() || !t.contains("left") || !t.contains("right") || !t.contains("coeff")) {
      throw std::invalid_argument("tensor term needs \"left\", \"right\" and \"coeff\"");
    }
    x.add_term(monomial_from(t["left"]), monomial_from(t["right"]), coeff_from(t["coeff"]));
  }
  return x;
}

}  // namespace cmhopf
