#pragma once

#include <json.hpp>

#include "stanleychar/exactpoly.hpp"

namespace stanleychar {

/// { "terms": [ { "coeff": "-10", "exps": { "p1": 4, "q1": 2 } }, ... ] }
/// with terms in canonical order; coefficients are decimal strings with an
/// optional "/denominator".
nlohmann::json to_json(const Polynomial& f);

/// Inverse of to_json. Throws std::invalid_argument on malformed input,
/// including zero or non-canonical coefficients and duplicate monomials.
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace stanleychar
