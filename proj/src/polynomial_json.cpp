#include "stanleychar/polynomial_json.hpp"

#include <stdexcept>

namespace stanleychar {

nlohmann::json to_json(const Polynomial& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [x, e] : m.factors()) exps[x.name()] = e;
    terms.push_back({{"coeff", to_string(c)}, {"exps", exps}});
  }
  return {{"terms", terms}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("polynomial JSON must be an object with a 'terms' array");
  Polynomial f;
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("coeff") || !term["coeff"].is_string() || !term.contains("exps") ||
        !term["exps"].is_object())
      throw std::invalid_argument("polynomial term must carry a string 'coeff' and an object 'exps'");
    const std::string text = term["coeff"].get<std::string>();
    Rational c;
    if (c.set_str(text, 10) != 0) throw std::invalid_argument("bad coefficient: " + text);
    if (c.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    Rational canonical = c;
    canonical.canonicalize();
    if (canonical == 0 || to_string(canonical) != text)
      throw std::invalid_argument("coefficient is zero or not in lowest terms: " + text);
    std::vector<Monomial::Factor> factors;
    for (const auto& [name, e] : term["exps"].items()) {
      if (!e.is_number_integer() || e.get<int>() <= 0)
        throw std::invalid_argument("exponents must be positive integers");
      factors.emplace_back(Indeterminate::parse(name), e.get<int>());
    }
    Monomial m(std::move(factors));
    if (f.terms().count(m)) throw std::invalid_argument("duplicate monomial " + m.to_string());
    f.add_term(m, canonical);
  }
  return f;
}

}  // namespace stanleychar
